#include "eigencount/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eigencount {
namespace {

// 15-point Kronrod abscissae; even indices are the embedded 7-point Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
    double value;
    double error;
};

// One GK15 panel on [a, b]; error estimate follows the QUADPACK recipe.
PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = (a + b) / 2;
    const double half = (b - a) / 2;

    const double fc = f(center);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    double fv1[7], fv2[7];

    for (int j = 0; j < 7; ++j) {
        const double absc = half * kXgk[j];
        const double f1 = f(center - absc);
        const double f2 = f(center + absc);
        fv1[j] = f1;
        fv2[j] = f2;
        const double fsum = f1 + f2;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    }

    const double reskh = resk / 2;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0 && err != 0) err = resasc * std::min(1.0, std::pow(200 * err / resasc, 1.5));
    const double eps50 = 50 * std::numeric_limits<double>::epsilon() * resabs;
    if (eps50 > std::numeric_limits<double>::min()) err = std::max(err, eps50);
    return {resk * half, err};
}

struct Worker {
    const std::function<double(double)>& f;
    double tol_per_width;  // abs_tol / total width: proportional error allocation
    std::int64_t max_evals;
    std::int64_t evals = 0;
    double value = 0;
    double error = 0;

    void segment(double a, double b, int depth) {
        if (evals + 15 > max_evals)
            throw QuadratureError("integrate_adaptive: evaluation budget exhausted");
        evals += 15;
        const auto est = gk15(f, a, b);
        const double width = b - a;
        if (est.error <= tol_per_width * width || depth >= 52 || width < 1e-15 * (std::abs(a) + std::abs(b))) {
            value += est.value;
            error += est.error;
            return;
        }
        const double mid = (a + b) / 2;
        segment(a, mid, depth + 1);
        segment(mid, b, depth + 1);
    }
};

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, std::int64_t max_evals,
                                    std::span<const double> breakpoints) {
    if (!(abs_tol > 0)) throw std::invalid_argument("integrate_adaptive: tolerance must be positive");
    if (a == b) return {0.0, 0.0, 0};
    if (a > b) {
        auto r = integrate_adaptive(f, b, a, abs_tol, max_evals, breakpoints);
        r.value = -r.value;
        return r;
    }

    std::vector<double> edges{a};
    for (double p : breakpoints)
        if (p > a && p < b) edges.push_back(p);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Worker w{f, abs_tol / (b - a), max_evals};
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) w.segment(edges[i], edges[i + 1], 0);
    return {w.value, w.error, w.evals};
}

}  // namespace eigencount
