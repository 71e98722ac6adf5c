#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace eigencount {

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    std::int64_t evaluations = 0;
};

/// Thrown when the adaptive subdivision cannot reach the requested tolerance
/// within the evaluation budget.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod 15(7) integration of f over [a, b].
///
/// The interval is first split at the supplied interior breakpoints, then each
/// segment is bisected depth-first (left segment first) until its local error
/// estimate fits the proportional share of abs_tol. Fixed subdivision order and
/// left-to-right accumulation keep the result deterministic for a given
/// tolerance.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, std::int64_t max_evals,
                                    std::span<const double> breakpoints = {});

}  // namespace eigencount
