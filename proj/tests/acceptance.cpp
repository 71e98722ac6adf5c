// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero when any fail.
//
// Usage: acceptance [path-to-cli-binary]
// The CLI path is needed for criterion 9 (subprocess run of `verify` and the
// emitted density tables); it defaults to ./eigencount.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "eigencount/cli_app.hpp"
#include "eigencount/closed_form.hpp"
#include "eigencount/exact_count.hpp"
#include "eigencount/monte_carlo.hpp"

using namespace eigencount;
namespace fs = std::filesystem;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << detail
              << "\n";
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

// ---------------------------------------------------------------- criteria

void criterion_1_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    bool equal = true;
    std::string first_bad;
    long long cases = 0;
    for (std::int64_t k = 1; k <= 6; ++k) {
        for (std::int64_t lambda = -2 * k; lambda <= 2 * k; ++lambda) {
            ++cases;
            if (fast_count_lambda(k, lambda) != brute_force_count_lambda(k, lambda)) {
                equal = false;
                if (first_bad.empty())
                    first_bad = " first mismatch k=" + std::to_string(k) +
                                " lambda=" + std::to_string(lambda);
            }
        }
    }
    const double elapsed = seconds_since(start);
    report(1, "oracle equivalence", equal && elapsed < 60,
           std::to_string(cases) + " (k, lambda) cases, fast == brute" + first_bad + ", " +
               fmt(elapsed) + " s (< 60 s)");
}

void criterion_2_anchor_counts() {
    const std::int64_t m0 = brute_force_count_lambda(1, 0);
    const std::int64_t m1 = brute_force_count_lambda(1, 1);
    const std::int64_t rep = count_repeated_integer(1);
    const std::int64_t spec = count_integer_spectrum(1);
    const bool pass = m0 == 33 && m1 == 27 && rep == 19 && spec == 55;
    report(2, "anchor counts at k=1", pass,
           "|M^0|=" + std::to_string(m0) + " (33), |M^1|=" + std::to_string(m1) +
               " (27), repeated=" + std::to_string(rep) + " (19), |M^Z|=" + std::to_string(spec) +
               " (55)");
}

void criterion_3_v_identities() {
    const double v1_gap = std::abs(v_density(1) - (1 + std::numbers::ln2));
    const double area = integrate_density(DensityKind::V, -2, 2, 1e-10).value;
    const double area_closed = 4.0 / 9.0 * (7 * kSqrt2 + 4 + 3 * std::log(kSqrt2 + 1));
    const double area_gap = std::abs(area - area_closed);

    // sqrt(2) is a C^1 point: one-sided limits by linear extrapolation
    const double eps = 1e-7;
    const auto limit = [&](double b, double s) {
        return 2 * v_density(b + s * eps / 2) - v_density(b + s * eps);
    };
    const double sqrt2_gap = std::abs(limit(kSqrt2, -1) - limit(kSqrt2, +1));

    // at 1 the slope is infinite: one-sided approach to the common value
    bool one_sided = true;
    for (double s : {-1.0, 1.0}) {
        double prev = 1e9;
        for (double e : {1e-6, 1e-7}) {
            const double gap = std::abs(v_density(1 + s * e) - v_density(1));
            one_sided = one_sided && gap <= 8 * e * (1 + std::abs(std::log(e))) && gap < prev;
            prev = gap;
        }
    }

    const bool pass = v1_gap <= 1e-12 && area_gap <= 1e-8 && sqrt2_gap <= 1e-9 && one_sided;
    report(3, "V identities", pass,
           "|V(1)-(1+log 2)|=" + fmt(v1_gap) + " (<=1e-12), |integral-closed|=" + fmt(area_gap) +
               " (<=1e-8), gap at sqrt2=" + fmt(sqrt2_gap) + " (<=1e-9), one-sided at 1 " +
               (one_sided ? "ok" : "violated"));
}

void criterion_4_w_identities() {
    const double w1_gap = std::abs(w_density(1) - 15.0 / 32);
    const double w0_gap = std::abs(w_density(0) - 5.0 / 9);
    const double area_gap = std::abs(integrate_density(DensityKind::W, -2, 2, 1e-10).value - 49.0 / 36);
    const double peak = argmax_w();
    const double peak_gap = std::abs(peak - 0.75030751);
    const bool pass = w1_gap == 0 && w0_gap <= 1e-12 && area_gap <= 1e-8 && peak_gap <= 1e-5;
    report(4, "W identities", pass,
           "W(1)=15/32 gap=" + fmt(w1_gap) + ", |W(0)-5/9|=" + fmt(w0_gap) +
               " (<=1e-12), |integral-49/36|=" + fmt(area_gap) + " (<=1e-8), |argmax-0.75030751|=" +
               fmt(peak_gap) + " (<=1e-5)");
}

void criterion_5_fw_consistency() {
    const double h = 1e-3;
    double worst = 0;
    double worst_at = 0;
    for (int j = 1; j <= 39; ++j) {
        const double delta = 0.05 * j;
        if (std::abs(delta - 1) <= 0.02 || std::abs(delta - kSqrt2) <= 0.02) continue;
        const double slope =
            -(f_w_minus(delta + h, 1e-8).value - f_w_minus(delta - h, 1e-8).value) / (2 * h);
        const double err = std::abs(slope - w_density(delta));
        if (err > worst) {
            worst = err;
            worst_at = delta;
        }
    }
    const double at0_gap = std::abs(f_w_minus(0, 1e-8).value - 49.0 / 72);
    const bool pass = worst <= 1e-3 && at0_gap <= 1e-6;
    report(5, "F_W derivative matches W", pass,
           "max |difference quotient - W| = " + fmt(worst) + " at delta=" + fmt(worst_at) +
               " (<=1e-3), |F_W(0-)-49/72|=" + fmt(at0_gap) + " (<=1e-6)");
}

void criterion_6_asymptotic_trend() {
    const auto start = std::chrono::steady_clock::now();
    const std::int64_t f512 = fast_count_lambda(512, 0);
    const double elapsed = seconds_since(start);

    double prev = 1e9;
    bool decreasing = true;
    double final_gap = 0;
    std::string gaps;
    for (std::int64_t k : {128, 256, 512}) {
        const std::int64_t f = k == 512 ? f512 : fast_count_lambda(k, 0);
        const double ratio = static_cast<double>(f) / asymptotic_count_lambda(k, 0);
        final_gap = std::abs(ratio - 1);
        decreasing = decreasing && final_gap < prev;
        prev = final_gap;
        gaps += (gaps.empty() ? "" : ", ") + std::to_string(k) + ": " + fmt(final_gap);
    }
    const bool pass = decreasing && final_gap <= 0.35 && elapsed < 10;
    report(6, "asymptotic ratio trend", pass,
           "|ratio-1| at k = " + gaps + " (decreasing, <=0.35 at 512), fast(512) in " +
               fmt(elapsed) + " s (< 10 s)");
}

void criterion_7_partial_sum_bound() {
    double worst = 0;
    for (double delta : {0.0, 0.5, 1.0, 1.3, 1.8})
        for (std::int64_t beta : {10, 100, 1000}) {
            const double err = std::abs(beta * cd_partial_sum(delta, beta) - v_density(delta));
            const double bound = 8 * (1 + std::log(static_cast<double>(beta))) / beta;
            worst = std::max(worst, err / bound);
        }
    report(7, "partial sums approximate V", worst <= 1,
           "worst error/bound over 15 (delta, beta) pairs = " + fmt(worst) + " (<=1)");
}

void criterion_8_monte_carlo() {
    const auto start = std::chrono::steady_clock::now();
    const SeedSpec seed{kPublishedSeed, 0};
    const std::int64_t n = 1'000'000;
    const auto summary = run_experiment(n, 40, seed);
    const auto cmp = compare_to_density(summary, DensityKind::W);
    const double ks = product_experiment(n, seed);
    const double elapsed = seconds_since(start);

    const double freq_gap = std::abs(summary.real_pair_frequency() - 49.0 / 72);
    const bool in_range = summary.out_of_range == 0 && summary.min_eigenvalue >= -2 &&
                          summary.max_eigenvalue <= 2;
    const bool pass = freq_gap <= 0.0015 && cmp.sup_deviation <= 0.01 && ks <= 0.002 && in_range &&
                      elapsed < 60;
    report(8, "Monte Carlo at published seed", pass,
           "|freq-49/72|=" + fmt(freq_gap) + " (<=0.0015), sup dev=" + fmt(cmp.sup_deviation) +
               " (<=0.01), KS=" + fmt(ks) + " (<=0.002), eigenvalues in [-2,2] " +
               (in_range ? "yes" : "NO") + ", " + fmt(elapsed) + " s (< 60 s)");
}

void criterion_9_cli(const std::string& cli) {
    const fs::path dir = fs::temp_directory_path();
    const fs::path verify_log = dir / "eigencount_acceptance_verify.log";
    const std::string cmd = "\"" + cli + "\" verify --suite all > \"" + verify_log.string() +
                            "\" 2>&1";
    const int status = std::system(cmd.c_str());
    const bool verify_ok = status == 0;

    bool tables_ok = true;
    std::string table_detail;
    for (const std::string kind : {"UZ", "UR"}) {
        const fs::path csv = dir / ("eigencount_acceptance_" + kind + ".csv");
        const std::string dcmd =
            "\"" + cli + "\" density --kind " + kind + " --out \"" + csv.string() + "\"";
        if (std::system(dcmd.c_str()) != 0) {
            tables_ok = false;
            continue;
        }
        std::ifstream in(csv);
        std::string line;
        std::getline(in, line);  // header
        std::vector<double> grid, values;
        while (std::getline(in, line)) {
            const auto comma = line.find(',');
            grid.push_back(std::stod(line.substr(0, comma)));
            values.push_back(std::stod(line.substr(comma + 1)));
        }
        double trapezoid = 0;
        for (std::size_t i = 0; i + 1 < grid.size(); ++i)
            trapezoid += (values[i] + values[i + 1]) / 2 * (grid[i + 1] - grid[i]);
        tables_ok = tables_ok && std::abs(trapezoid - 2.0) <= 1e-6;
        table_detail += kind + " area=" + fmt(trapezoid) + " ";
        fs::remove(csv);
    }
    report(9, "CLI verify and normalized tables", verify_ok && tables_ok,
           std::string("verify --suite all exit ") + (verify_ok ? "0" : "nonzero") + "; " +
               table_detail + "(2 +/- 1e-6)");
    if (!verify_ok) {
        std::ifstream log(verify_log);
        std::string line;
        while (std::getline(log, line))
            if (line.rfind("FAIL", 0) == 0) std::cout << "    " << line << "\n";
    }
    fs::remove(verify_log);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "./eigencount";

    criterion_1_oracle_equivalence();
    criterion_2_anchor_counts();
    criterion_3_v_identities();
    criterion_4_w_identities();
    criterion_5_fw_consistency();
    criterion_6_asymptotic_trend();
    criterion_7_partial_sum_bound();
    criterion_8_monte_carlo();
    criterion_9_cli(cli);

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
