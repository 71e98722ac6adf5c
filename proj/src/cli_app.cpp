#include "eigencount/cli_app.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "eigencount/closed_form.hpp"
#include "eigencount/exact_count.hpp"
#include "eigencount/matrix2.hpp"
#include "eigencount/monte_carlo.hpp"

namespace eigencount {
namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string g15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

// Writes a table through --out: to the given path, or to `fallback` when the
// path is empty. File output is append-free and newline-terminated, so equal
// arguments give byte-identical files.
int with_output(const std::string& path, std::ostream& fallback, std::ostream& err,
                const std::function<void(std::ostream&)>& write) {
    if (path.empty()) {
        write(fallback);
        return 0;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << path << "'\n";
        return 1;
    }
    write(file);
    return 0;
}

const std::map<std::string, DensityKind> kKindNames{{"V", DensityKind::V},
                                                    {"W", DensityKind::W},
                                                    {"UZ", DensityKind::UZ},
                                                    {"UR", DensityKind::UR}};

// ---------------------------------------------------------------------------
// verification suites

struct CheckOutcome {
    std::string name;
    bool pass;
    std::string detail;
};

using CheckList = std::vector<CheckOutcome>;

void check(CheckList& list, const std::string& name, bool pass, const std::string& detail) {
    list.push_back({name, pass, detail});
}

void check_close(CheckList& list, const std::string& name, double got, double want, double tol) {
    const double diff = std::abs(got - want);
    check(list, name, diff <= tol, "got " + g15(got) + ", want " + g15(want) + " +/- " + g15(tol));
}

void suite_small_k(CheckList& list) {
    check(list, "anchor |M2^0(1)| brute", brute_force_count_lambda(1, 0) == 33, "expect 33");
    check(list, "anchor |M2^1(1)| brute", brute_force_count_lambda(1, 1) == 27, "expect 27");
    check(list, "anchor repeated-integer k=1", count_repeated_integer(1) == 19, "expect 19");
    check(list, "anchor |M2^Z(1)|", count_integer_spectrum(1) == 55, "expect 55");

    bool equal = true;
    std::string first_bad;
    for (std::int64_t k = 1; k <= 6 && equal; ++k) {
        const auto fast = fast_count_all(k);
        for (std::int64_t lambda = -2 * k; lambda <= 2 * k; ++lambda) {
            const std::int64_t f = fast[static_cast<std::size_t>(std::llabs(lambda))];
            const std::int64_t b = brute_force_count_lambda(k, lambda);
            if (f != b) {
                equal = false;
                first_bad = "k=" + std::to_string(k) + " lambda=" + std::to_string(lambda);
                break;
            }
        }
    }
    check(list, "oracle equivalence k=1..6, |lambda|<=2k", equal,
          equal ? "fast == brute everywhere" : "first mismatch at " + first_bad);
}

void suite_analytic(CheckList& list) {
    const auto cb = constants_bundle();
    check_close(list, "V(0) = 4", v_density(0), 4.0, 1e-12);
    check_close(list, "V(1) = 1 + log 2", v_density(1), cb.v_at_one, 1e-12);
    check_close(list, "V(2) = 0", v_density(2), 0.0, 1e-12);
    check_close(list, "W(0) = 5/9", w_density(0), 5.0 / 9.0, 1e-12);
    check_close(list, "W(1) = 15/32", w_density(1), 15.0 / 32.0, 0.0);
    check_close(list, "integral of V over [-2,2]", integrate_density(DensityKind::V, -2, 2).value,
                cb.v_area, 1e-8);
    check_close(list, "integral of W over [-2,2]", integrate_density(DensityKind::W, -2, 2).value,
                cb.w_area, 1e-8);
    check_close(list, "argmax of W", argmax_w(), 0.75030751, 1e-5);
    check_close(list, "expected eigenvalues below 0", f_w_minus(0, 1e-8).value, 49.0 / 72.0, 1e-6);

    double worst = 0;
    for (double delta : {0.0, 0.5, 1.0, 1.3, 1.8})
        for (std::int64_t beta : {10, 100, 1000}) {
            const double err = std::abs(beta * cd_partial_sum(delta, beta) - v_density(delta));
            worst = std::max(worst, err / (8 * (1 + std::log(static_cast<double>(beta))) / beta));
        }
    check(list, "partial-sum error bound 8(1+log b)/b", worst <= 1.0,
          "worst error / bound = " + g15(worst));

    const auto mobius = mobius_sieve(10'000);
    bool mobius_ok = true;
    for (std::int64_t m = 1; m <= mobius.limit && mobius_ok; ++m) {
        std::int64_t divisor_sum = 0;
        for (std::int64_t d = 1; d * d <= m; ++d) {
            if (m % d != 0) continue;
            divisor_sum += mobius(d);
            if (d != m / d) divisor_sum += mobius(m / d);
        }
        mobius_ok = divisor_sum == (m == 1 ? 1 : 0);
    }
    check(list, "mobius divisor identity to 10^4", mobius_ok, "sum_{d|m} mu(d) = [m = 1]");
    double tail = 0;
    for (std::int64_t d = 1; d <= 1000; ++d)
        tail += mobius(d) / (static_cast<double>(d) * static_cast<double>(d));
    check_close(list, "sum mu(d)/d^2 to d=1000", tail, 6 / (std::numbers::pi * std::numbers::pi),
                1e-3);

    double worst_derivative = 0;
    const double h = 1e-3;
    for (double delta : {0.3, 0.7, 1.2, 1.7}) {
        const double slope =
            -(f_w_minus(delta + h, 1e-8).value - f_w_minus(delta - h, 1e-8).value) / (2 * h);
        worst_derivative = std::max(worst_derivative, std::abs(slope - w_density(delta)));
    }
    check(list, "dF_W/d(-delta) matches W (spot grid)", worst_derivative <= 1e-3,
          "worst |difference quotient - W| = " + g15(worst_derivative));

    for (DensityKind kind : {DensityKind::UZ, DensityKind::UR}) {
        const auto table = make_density_table(kind);
        double trap = 0;
        for (std::size_t i = 0; i + 1 < table.grid.size(); ++i)
            trap += (table.values[i] + table.values[i + 1]) / 2 *
                    (table.grid[i + 1] - table.grid[i]);
        check_close(list,
                    std::string("default ") + (kind == DensityKind::UZ ? "UZ" : "UR") +
                        " table trapezoid area",
                    trap, 2.0, 1e-6);
    }
}

void suite_montecarlo(CheckList& list) {
    const SeedSpec seed{kPublishedSeed, 0};
    const std::int64_t n = 1'000'000;
    const auto summary = run_experiment(n, 40, seed);
    check_close(list, "real-pair frequency (n=10^6)", summary.real_pair_frequency(), 49.0 / 72.0,
                0.0015);
    check(list, "eigenvalues within [-2, 2]",
          summary.out_of_range == 0 && summary.min_eigenvalue >= -2 && summary.max_eigenvalue <= 2,
          "range [" + g15(summary.min_eigenvalue) + ", " + g15(summary.max_eigenvalue) + "]");
    std::int64_t mass = 0;
    for (auto c : summary.bin_counts) mass += c;
    check(list, "histogram mass = 2 x real pairs", mass == 2 * summary.real_pairs,
          std::to_string(mass) + " vs " + std::to_string(2 * summary.real_pairs));
    const auto cmp = compare_to_density(summary, DensityKind::W);
    check(list, "histogram sup deviation vs binned W", cmp.sup_deviation <= 0.01,
          "sup deviation " + g15(cmp.sup_deviation));
    const double ks = product_experiment(n, seed);
    check(list, "product-distribution KS distance", ks <= 0.002, "KS = " + g15(ks));
}

int run_verify(const std::string& suite, std::ostream& out) {
    CheckList list;
    if (suite == "small-k" || suite == "all") suite_small_k(list);
    if (suite == "analytic" || suite == "all") suite_analytic(list);
    if (suite == "montecarlo" || suite == "all") suite_montecarlo(list);

    int failures = 0;
    for (const auto& c : list) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        if (!c.pass) ++failures;
    }
    out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
        << " (" << list.size() << " run)\n";
    return failures == 0 ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts and densities of integer and real eigenvalues of random 2x2 matrices"};
    app.name("eigencount");
    app.require_subcommand(1);

    // count ------------------------------------------------------------
    auto* count_cmd = app.add_subcommand("count", "Count matrices with a prescribed eigenvalue");
    std::int64_t count_k = 0;
    std::int64_t count_lambda = 0;
    bool count_all = false;
    std::string count_methods = "fast";
    std::int64_t count_guard = kDefaultEnumerationLimit;
    std::string count_out;
    bool count_spectrum = false;
    count_cmd->add_option("--k", count_k, "Entry bound k >= 1")->required();
    auto* lambda_opt = count_cmd->add_option("--lambda", count_lambda, "Eigenvalue to count");
    count_cmd->add_flag("--all", count_all, "All eigenvalues -2k..2k");
    count_cmd->add_flag("--spectrum", count_spectrum,
                        "Count matrices with any integer eigenvalue instead");
    count_cmd->add_option("--method", count_methods, "Comma list from {brute,fast,asym}");
    count_cmd->add_option("--guard", count_guard, "Brute-force enumeration limit");
    count_cmd->add_option("--out", count_out, "Output CSV path (default: stdout)");

    // density ----------------------------------------------------------
    auto* density_cmd = app.add_subcommand("density", "Tabulate a closed-form density");
    std::string density_kind = "V";
    int density_points = 801;
    double density_min = -2.0, density_max = 2.0;
    std::string density_out;
    density_cmd->add_option("--kind", density_kind, "V, W, UZ (V area-2) or UR (W area-2)")
        ->check(CLI::IsMember({"V", "W", "UZ", "UR"}));
    density_cmd->add_option("--points", density_points, "Grid size (default 801)");
    density_cmd->add_option("--min", density_min, "Grid start (default -2)");
    density_cmd->add_option("--max", density_max, "Grid end (default 2)");
    density_cmd->add_option("--out", density_out, "Output CSV path (default: stdout)");

    // simulate ---------------------------------------------------------
    auto* sim_cmd = app.add_subcommand("simulate", "Sample matrices and compare to the densities");
    std::int64_t sim_n = 1'000'000;
    int sim_bins = 40;
    std::uint64_t sim_seed = kPublishedSeed;
    std::uint64_t sim_stream = 0;
    int sim_workers = 0;
    std::string sim_out;
    sim_cmd->add_option("--n", sim_n, "Number of sampled matrices");
    sim_cmd->add_option("--bins", sim_bins, "Histogram bins over [-2, 2]");
    sim_cmd->add_option("--seed", sim_seed, "64-bit master seed");
    sim_cmd->add_option("--stream", sim_stream, "Substream index");
    sim_cmd->add_option("--workers", sim_workers, "Worker threads (0 = auto)");
    sim_cmd->add_option("--out", sim_out, "Output CSV path (default: stdout)");

    // verify -----------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "Run a self-verification suite");
    std::string verify_suite = "all";
    verify_cmd->add_option("--suite", verify_suite, "small-k, analytic, montecarlo or all")
        ->check(CLI::IsMember({"small-k", "analytic", "montecarlo", "all"}));

    // constants ----------------------------------------------------------
    auto* constants_cmd = app.add_subcommand("constants", "Print the named constants");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("eigencount");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run 'eigencount --help' for usage\n";
        return 1;
    }

    try {
        if (count_cmd->parsed()) {
            if (count_k < 1) {
                err << "error: --k must be at least 1\n";
                return 1;
            }
            if (count_spectrum) {
                if (count_all || lambda_opt->count() > 0) {
                    err << "error: --spectrum excludes --lambda and --all\n";
                    return 1;
                }
                const std::int64_t total = count_integer_spectrum(count_k);
                const auto cb = constants_bundle();
                const double kk = static_cast<double>(count_k);
                const double main_term = 16 * cb.c_integer_spectrum * kk * kk * kk * std::log(kk);
                return with_output(count_out, out, err, [&](std::ostream& os) {
                    os << "k,count,main_term,ratio\n";
                    os << count_k << ',' << total << ',' << g17(main_term) << ',';
                    if (main_term != 0) os << g17(static_cast<double>(total) / main_term);
                    os << '\n';
                });
            }
            if (count_all == (lambda_opt->count() > 0)) {
                err << "error: pass exactly one of --lambda or --all\n";
                return 1;
            }
            bool with_brute = false;
            std::stringstream methods(count_methods);
            std::string token;
            while (std::getline(methods, token, ',')) {
                if (token == "brute")
                    with_brute = true;
                else if (token != "fast" && token != "asym") {
                    err << "error: unknown method '" << token << "'\n";
                    return 1;
                }
            }
            std::vector<CountReport> rows;
            if (count_all) {
                const auto fast = fast_count_all(count_k);
                for (std::int64_t lambda = -2 * count_k; lambda <= 2 * count_k; ++lambda) {
                    CountReport r;
                    r.k = count_k;
                    r.lambda = lambda;
                    r.fast = fast[static_cast<std::size_t>(std::llabs(lambda))];
                    if (with_brute) r.brute = brute_force_count_lambda(count_k, lambda, count_guard);
                    r.main_term = asymptotic_count_lambda(count_k, lambda);
                    if (r.main_term != 0) r.ratio = static_cast<double>(r.fast) / r.main_term;
                    rows.push_back(r);
                }
            } else {
                rows.push_back(count_report(count_k, count_lambda, with_brute, count_guard));
            }
            return with_output(count_out, out, err, [&](std::ostream& os) {
                os << "k,lambda,brute,fast,main_term,ratio\n";
                for (const auto& r : rows) {
                    os << r.k << ',' << r.lambda << ',';
                    if (r.brute) os << *r.brute;
                    os << ',' << r.fast << ',' << g17(r.main_term) << ',';
                    if (r.ratio) os << g17(*r.ratio);
                    os << '\n';
                }
            });
        }

        if (density_cmd->parsed()) {
            if (density_points < 2 || !(density_min < density_max)) {
                err << "error: need --points >= 2 and --min < --max\n";
                return 1;
            }
            const auto table =
                make_density_table(kKindNames.at(density_kind), density_min, density_max,
                                   density_points);
            return with_output(density_out, out, err, [&](std::ostream& os) {
                os << "delta,value\n";
                for (std::size_t i = 0; i < table.grid.size(); ++i)
                    os << g17(table.grid[i]) << ',' << g17(table.values[i]) << '\n';
            });
        }

        if (sim_cmd->parsed()) {
            if (sim_n < 1 || sim_bins < 2) {
                err << "error: need --n >= 1 and --bins >= 2\n";
                return 1;
            }
            const SeedSpec seed{sim_seed, sim_stream};
            const auto summary = run_experiment(sim_n, sim_bins, seed, sim_workers);
            const auto cmp = compare_to_density(summary, DensityKind::W);
            const double ks = product_experiment(sim_n, seed);
            err << "samples = " << summary.samples << "\n";
            err << "real_pair_frequency = " << g15(summary.real_pair_frequency()) << "\n";
            err << "complex_frequency = " << g15(summary.complex_frequency()) << "\n";
            err << "repeated = " << summary.repeated << "\n";
            err << "eigenvalue_range = [" << g15(summary.min_eigenvalue) << ", "
                << g15(summary.max_eigenvalue) << "]\n";
            err << "sup_deviation_vs_W = " << g15(cmp.sup_deviation) << "\n";
            err << "chi_square_vs_W = " << g15(cmp.chi_square) << "\n";
            err << "product_ks_distance = " << g15(ks) << "\n";
            return with_output(sim_out, out, err, [&](std::ostream& os) {
                os << "bin_left,bin_right,count,mean_per_matrix\n";
                for (int i = 0; i < summary.bins; ++i)
                    os << g17(summary.bin_left(i)) << ',' << g17(summary.bin_right(i)) << ','
                       << summary.bin_counts[static_cast<std::size_t>(i)] << ','
                       << g17(summary.bin_mean(i)) << '\n';
            });
        }

        if (verify_cmd->parsed()) return run_verify(verify_suite, out);

        if (constants_cmd->parsed()) {
            const auto cb = constants_bundle();
            out << "C_integer_spectrum = " << g15(cb.c_integer_spectrum) << "\n";
            out << "six_over_pi_squared = " << g15(cb.six_over_pi_squared) << "\n";
            out << "real_pair_probability = " << g15(cb.real_pair_probability) << "\n";
            out << "expected_real_eigenvalues = " << g15(cb.expected_real_eigenvalues) << "\n";
            out << "W_at_one = " << g15(cb.w_at_one) << "\n";
            out << "V_at_one = " << g15(cb.v_at_one) << "\n";
            out << "V_area = " << g15(cb.v_area) << "\n";
            out << "W_area = " << g15(cb.w_area) << "\n";
            out << "W_argmax = " << g15(cb.w_argmax) << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace eigencount
