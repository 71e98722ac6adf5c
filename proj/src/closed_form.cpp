#include "eigencount/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eigencount {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;

double xlogx(double t) { return t == 0 ? 0.0 : t * std::log(t); }

}  // namespace

double v_density(double delta) {
    const double d = std::abs(delta);
    if (d > 2) return 0.0;
    if (d == 1) return 1 + std::numbers::ln2;
    if (d < 1) return 4 - 2 * d - d * d + d * d * std::log(1 + d) - 2 * xlogx(1 - d);
    if (d <= kSqrt2) return 4 - 2 * d - d * d + d * d * std::log(d + 1) + 2 * xlogx(d - 1);
    return d * d - 2 * d - (d * d - 2 * d + 2) * std::log(d - 1);
}

double w_density(double delta) {
    const double d = std::abs(delta);
    if (d >= 2) return 0.0;
    if (d == 1) return 15.0 / 32.0;
    if (d < 1) {
        const double poly = (80 + 20 * d + 90 * d * d + 52 * d * d * d - 107 * d * d * d * d) /
                            (144 * (1 + d));
        return poly - (5 - 7 * d + 8 * d * d) * xlogx(1 - d) / 12 -
               d * (1 - d * d) * std::log(1 + d) / 4;
    }
    if (d <= kSqrt2) {
        return d * (20 + 10 * d - 12 * d * d - 3 * d * d * d) / (16 * (1 + d)) +
               (3 * d - 1) * xlogx(d - 1) / 4 + d * (d * d - 1) * std::log(d + 1) / 4;
    }
    return d * (d - 2) * (2 - 6 * d + 3 * d * d) / (16 * (d - 1)) -
           (d - 1) * (d - 1) * (d - 1) * std::log(d - 1) / 4;
}

double density_area(DensityKind kind) {
    switch (kind) {
        case DensityKind::V:
            return 4.0 / 9.0 * (7 * kSqrt2 + 4 + 3 * std::log(kSqrt2 + 1));
        case DensityKind::W:
            return 49.0 / 36.0;
        case DensityKind::UZ:
        case DensityKind::UR:
            return 2.0;
    }
    throw std::invalid_argument("density_area: unknown kind");
}

double density_value(DensityKind kind, double delta) {
    switch (kind) {
        case DensityKind::V:
            return v_density(delta);
        case DensityKind::W:
            return w_density(delta);
        case DensityKind::UZ:
            return v_density(delta) / (density_area(DensityKind::V) / 2);
        case DensityKind::UR:
            return w_density(delta) / (density_area(DensityKind::W) / 2);
    }
    throw std::invalid_argument("density_value: unknown kind");
}

double g_function(double z) { return z == 0 ? 0.0 : z * (1 - std::log(std::abs(z))); }

double f_bc(double z) {
    if (z < -1) return 0.0;
    if (z > 1) return 1.0;
    return (1 + g_function(z)) / 2;
}

double nu1(double x, double y) {
    const double t = (x - y) / 2;
    return 0.5 + g_function(x * y) / 2 + g_function(t * t);
}

double nu2(double x, double y) { return 0.5 - g_function(x * y) / 2; }

double nu(double x, double y) {
    if (std::abs(x - y) > 2)
        throw std::invalid_argument("nu: requires |x - y| <= 2");
    const double p = x * y;
    const double s = x + y;
    if (p < 1 && s < 0) return nu1(x, y);
    if (p < 1 && s > 0) return nu2(x, y);
    if (p > 1 && s < 0) {
        const double t = (x - y) / 2;
        return 1 + g_function(t * t);
    }
    return 0.0;  // boundary curves included here; a null set for every integral
}

NuAntiderivatives antiderivatives_nu(double x, double y) {
    if (y == 0) throw std::invalid_argument("antiderivatives_nu: requires y != 0");
    const double product_term = x == 0 ? 0.0 : x * x * y * (3 - 2 * std::log(std::abs(x * y))) / 8;
    const double diff = x - y;
    const double cube_term =
        diff == 0 ? 0.0 : diff * diff * diff * (5 - 6 * std::log(std::abs(diff / 2))) / 36;
    return {x / 2 + product_term + cube_term, x / 2 - product_term};
}

namespace {

// Interior x-splits for the inner integral of nu(., y): branch curves
// x = -y and x = 1/y, plus the log-slope points x = 0 and x = y.
void inner_breakpoints(double y, std::vector<double>& out) {
    out.clear();
    out.push_back(-y);
    if (y != 0) out.push_back(1 / y);
    out.push_back(0.0);
    out.push_back(y);
}

}  // namespace

QuadratureResult f_w_minus(double delta, double tol, std::int64_t max_evals) {
    if (!(delta >= 0 && delta <= 2)) throw std::invalid_argument("f_w_minus: requires 0 <= delta <= 2");
    if (!(tol > 0)) throw std::invalid_argument("f_w_minus: tolerance must be positive");

    const double lo = delta - 1;
    const double hi = delta + 1;
    const double width = hi - lo;

    // Error split: the inner estimates integrate to at most inner_tol * width,
    // the outer pass gets the other half. All tolerances refer to the final
    // quarter-scaled value, hence the factor 4.
    const double inner_tol = 4 * tol / (4 * width);
    const double outer_tol = 4 * tol / 2;

    std::int64_t evals = 0;
    std::vector<double> xsplit;
    const auto inner = [&](double y) {
        inner_breakpoints(y, xsplit);
        auto r = integrate_adaptive([&](double x) { return nu(x, y); }, lo, hi, inner_tol,
                                    max_evals - evals, xsplit);
        evals += r.evaluations;
        return r.value;
    };

    // Outer splits: where the kink curves cross the square edges.
    std::vector<double> ysplit{0.0, 1 - delta, delta - 1, 1 / (1 + delta), -1 / (1 + delta)};
    if (delta != 1) ysplit.push_back(1 / (delta - 1));

    auto outer = integrate_adaptive(inner, lo, hi, outer_tol, max_evals, ysplit);
    return {outer.value / 4, (outer.error_estimate + inner_tol * width) / 4, evals};
}

QuadratureResult integrate_density(DensityKind kind, double a, double b, double tol,
                                   std::int64_t max_evals) {
    if (!(a >= -2 && b <= 2 && a <= b))
        throw std::invalid_argument("integrate_density: requires -2 <= a <= b <= 2");
    const double splits[] = {-kSqrt2, -1, 0, 1, kSqrt2};
    return integrate_adaptive([kind](double x) { return density_value(kind, x); }, a, b, tol,
                              max_evals, splits);
}

double argmax_w() {
    // Golden-section search; W is unimodal on [0.5, 0.95].
    constexpr double inv_phi = 0.6180339887498949;
    double a = 0.5, b = 0.95;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = w_density(x1), f2 = w_density(x2);
    while (b - a > 1e-8) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = w_density(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = w_density(x1);
        }
    }
    return (a + b) / 2;
}

ConstantsBundle constants_bundle() {
    const double root = kSqrt2;
    return {
        (7 * root + 4 + 3 * std::log(root + 1)) / (3 * kPi * kPi),
        6 / (kPi * kPi),
        49.0 / 72.0,
        49.0 / 36.0,
        15.0 / 32.0,
        1 + std::numbers::ln2,
        density_area(DensityKind::V),
        density_area(DensityKind::W),
        argmax_w(),
    };
}

std::vector<double> density_grid(double lo, double hi, int points) {
    if (points < 2 || !(lo < hi)) throw std::invalid_argument("density_grid: bad grid request");
    std::vector<double> g(points);
    const double h = (hi - lo) / (points - 1);
    for (int i = 0; i < points; ++i) g[i] = lo + i * h;
    g.back() = hi;

    if (points >= 32) {
        const double branch[] = {-kSqrt2, -1, 0, 1, kSqrt2};
        for (double b : branch) {
            if (b - h <= lo || b + h >= hi) continue;
            const int i = std::clamp(static_cast<int>(std::lround((b - lo) / h)), 1, points - 2);
            g[i] = b;
            g[i - 1] = b - h;
            g[i + 1] = b + h;
        }
        std::sort(g.begin(), g.end());
    }
    return g;
}

DensityTable make_density_table(DensityKind kind, double lo, double hi, int points) {
    DensityTable t{kind, density_grid(lo, hi, points), {}};
    t.values.reserve(t.grid.size());
    for (double x : t.grid) t.values.push_back(density_value(kind, x));
    return t;
}

}  // namespace eigencount
