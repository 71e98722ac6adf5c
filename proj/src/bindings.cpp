#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "eigencount/closed_form.hpp"
#include "eigencount/exact_count.hpp"
#include "eigencount/matrix2.hpp"
#include "eigencount/monte_carlo.hpp"

namespace py = pybind11;
using namespace eigencount;

namespace {

DensityKind kind_from_name(const std::string& name) {
    if (name == "V") return DensityKind::V;
    if (name == "W") return DensityKind::W;
    if (name == "UZ") return DensityKind::UZ;
    if (name == "UR") return DensityKind::UR;
    throw std::invalid_argument("unknown density kind '" + name + "' (use V, W, UZ or UR)");
}

py::object classify_py(double a, double b, double c, double d) {
    const auto s = classify_spectrum(RealMatrix2{a, b, c, d});
    if (std::holds_alternative<ComplexPair>(s)) return py::make_tuple("complex");
    if (const auto* r = std::get_if<Repeated>(&s)) return py::make_tuple("repeated", r->value);
    const auto& r = std::get<RealDistinct>(s);
    return py::make_tuple("real", r.lo, r.hi);
}

py::object singular_py(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    const auto s = singular_representation(IntMatrix2{a, b, c, d});
    if (std::holds_alternative<ZeroPattern>(s)) return py::make_tuple("zero_pattern");
    const auto& q = std::get<Quadruple>(s);
    return py::make_tuple("quadruple", py::make_tuple(q.a, q.b, q.c, q.d));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact eigenvalue counting and spectral densities for random 2x2 matrices";

    // core matrix operations
    m.def(
        "char_invariants",
        [](double a, double b, double c, double d) {
            const auto inv = char_invariants(RealMatrix2{a, b, c, d});
            return py::make_tuple(inv.trace, inv.determinant, inv.discriminant);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
        "Trace, determinant and discriminant of ((a, b), (c, d)).");
    m.def(
        "char_invariants_int",
        [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
            const auto inv = char_invariants(IntMatrix2{a, b, c, d});
            return py::make_tuple(inv.trace, inv.determinant, inv.discriminant);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
        "Exact integer trace, determinant and discriminant.");
    m.def("classify_spectrum", &classify_py, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
          "('complex',) | ('repeated', value) | ('real', lo, hi)");
    m.def("singular_representation", &singular_py, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("d"), "('zero_pattern',) or ('quadruple', (a, b, c, d)); input must be singular.");
    m.def(
        "gershgorin_bound",
        [](double a, double b, double c, double d) {
            return gershgorin_bound(RealMatrix2{a, b, c, d});
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));

    // exact counting
    m.def(
        "mobius_sieve",
        [](std::int64_t n) {
            const auto t = mobius_sieve(n);
            return std::vector<int>(t.values.begin() + 1, t.values.end());
        },
        py::arg("n"), "mu(1..n) as a list.");
    m.def("n_k_lambda", &n_k_lambda, py::arg("k"), py::arg("lambda_"), py::arg("x"), py::arg("y"));
    m.def(
        "cd_factors",
        [](double delta, double x, double y) {
            const auto cd = cd_factors(delta, x, y);
            return py::make_tuple(cd.c_factor, cd.d_factor);
        },
        py::arg("delta"), py::arg("x"), py::arg("y"));
    m.def("cd_partial_sum", &cd_partial_sum, py::arg("delta"), py::arg("beta"));
    m.def("brute_force_count_lambda", &brute_force_count_lambda, py::arg("k"), py::arg("lambda_"),
          py::arg("limit") = kDefaultEnumerationLimit);
    m.def("fast_count_lambda", &fast_count_lambda, py::arg("k"), py::arg("lambda_"));
    m.def("fast_count_all", &fast_count_all, py::arg("k"), "Counts for lambda = 0..2k.");
    m.def("asymptotic_count_lambda", &asymptotic_count_lambda, py::arg("k"), py::arg("lambda_"));
    m.def("count_repeated_integer", &count_repeated_integer, py::arg("k"));
    m.def("count_repeated_eigenvalue", &count_repeated_eigenvalue, py::arg("k"));
    m.def("count_integer_spectrum", &count_integer_spectrum, py::arg("k"));

    // closed forms
    m.def("v_density", &v_density, py::arg("delta"));
    m.def("w_density", &w_density, py::arg("delta"));
    m.def("g_function", &g_function, py::arg("z"));
    m.def("f_bc", &f_bc, py::arg("z"));
    m.def("nu", &nu, py::arg("x"), py::arg("y"));
    m.def(
        "antiderivatives_nu",
        [](double x, double y) {
            const auto a = antiderivatives_nu(x, y);
            return py::make_tuple(a.a1, a.a2);
        },
        py::arg("x"), py::arg("y"));
    m.def(
        "f_w_minus",
        [](double delta, double tol) {
            const auto r = f_w_minus(delta, tol);
            return py::make_tuple(r.value, r.error_estimate, r.evaluations);
        },
        py::arg("delta"), py::arg("tol") = 1e-6,
        "(value, error_estimate, evaluations): expected eigenvalues below -delta.");
    m.def(
        "integrate_density",
        [](const std::string& kind, double a, double b, double tol) {
            const auto r = integrate_density(kind_from_name(kind), a, b, tol);
            return py::make_tuple(r.value, r.error_estimate, r.evaluations);
        },
        py::arg("kind"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-10);
    m.def("argmax_w", &argmax_w);
    m.def("constants", [] {
        const auto cb = constants_bundle();
        py::dict d;
        d["C_integer_spectrum"] = cb.c_integer_spectrum;
        d["six_over_pi_squared"] = cb.six_over_pi_squared;
        d["real_pair_probability"] = cb.real_pair_probability;
        d["expected_real_eigenvalues"] = cb.expected_real_eigenvalues;
        d["W_at_one"] = cb.w_at_one;
        d["V_at_one"] = cb.v_at_one;
        d["V_area"] = cb.v_area;
        d["W_area"] = cb.w_area;
        d["W_argmax"] = cb.w_argmax;
        return d;
    });
    m.def(
        "density_table",
        [](const std::string& kind, double lo, double hi, int points) {
            const auto t = make_density_table(kind_from_name(kind), lo, hi, points);
            return py::make_tuple(t.grid, t.values);
        },
        py::arg("kind"), py::arg("lo") = -2.0, py::arg("hi") = 2.0, py::arg("points") = 801,
        "(grid, values) with branch points placed exactly on the grid.");

    // Monte Carlo
    py::class_<EmpiricalSummary>(m, "EmpiricalSummary")
        .def_readonly("samples", &EmpiricalSummary::samples)
        .def_readonly("bins", &EmpiricalSummary::bins)
        .def_readonly("bin_counts", &EmpiricalSummary::bin_counts)
        .def_readonly("real_pairs", &EmpiricalSummary::real_pairs)
        .def_readonly("repeated", &EmpiricalSummary::repeated)
        .def_readonly("complex_pairs", &EmpiricalSummary::complex_pairs)
        .def_readonly("out_of_range", &EmpiricalSummary::out_of_range)
        .def_readonly("min_eigenvalue", &EmpiricalSummary::min_eigenvalue)
        .def_readonly("max_eigenvalue", &EmpiricalSummary::max_eigenvalue)
        .def("real_pair_frequency", &EmpiricalSummary::real_pair_frequency)
        .def("complex_frequency", &EmpiricalSummary::complex_frequency)
        .def("bin_left", &EmpiricalSummary::bin_left)
        .def("bin_right", &EmpiricalSummary::bin_right)
        .def("bin_mean", &EmpiricalSummary::bin_mean);

    m.def(
        "run_experiment",
        [](std::int64_t n, int bins, std::uint64_t master_seed, std::uint64_t stream,
           int workers) { return run_experiment(n, bins, SeedSpec{master_seed, stream}, workers); },
        py::arg("n"), py::arg("bins") = 40, py::arg("master_seed") = 0, py::arg("stream") = 0,
        py::arg("workers") = 0);
    m.def(
        "compare_to_density",
        [](const EmpiricalSummary& s, const std::string& kind) {
            const auto c = compare_to_density(s, kind_from_name(kind));
            return py::make_tuple(c.sup_deviation, c.chi_square);
        },
        py::arg("summary"), py::arg("kind") = "W", "(sup_deviation, chi_square)");
    m.def(
        "product_experiment",
        [](std::int64_t n, std::uint64_t master_seed, std::uint64_t stream) {
            return product_experiment(n, SeedSpec{master_seed, stream});
        },
        py::arg("n"), py::arg("master_seed") = 0, py::arg("stream") = 0,
        "KS distance between sampled products BC and their distribution function.");

#ifdef EIGENCOUNT_VERSION
    m.attr("__version__") = EIGENCOUNT_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
