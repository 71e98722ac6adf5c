#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace eigencount {

inline constexpr std::int64_t kDefaultEnumerationLimit = 1'000'000'000;

/// Moebius function values mu(1..limit), built by a linear sieve.
struct MobiusTable {
    std::int64_t limit = 0;
    std::vector<std::int8_t> values;  // values[i] = mu(i), index 0 unused

    std::int8_t operator()(std::int64_t n) const { return values[static_cast<std::size_t>(n)]; }
};

MobiusTable mobius_sieve(std::int64_t n);

/// Exact number of pairs (c, d) of nonzero integers with
/// |xc + lambda| <= k, |yc| <= k, |xd| <= k, |yd + lambda| <= k,
/// evaluated as a product of two one-dimensional interval counts.
/// Requires 0 <= lambda <= 2k and 1 <= x <= y <= k.
std::int64_t n_k_lambda(std::int64_t k, std::int64_t lambda, std::int64_t x, std::int64_t y);

/// Continuum interval-length factors approximating n_k_lambda / k^2.
struct CDPair {
    double c_factor;
    double d_factor;
};

/// C = max{0, min{(1-delta)/x + 1/y, 2/y}}, D = min{(1-delta)/y + 1/x, 2/y}.
/// Requires 0 <= delta <= 2 and 0 < x <= y.
CDPair cd_factors(double delta, double x, double y);

/// Sum over integers 1 <= alpha < beta of C(delta; alpha, beta) D(delta; alpha, beta);
/// beta times this sum approaches v_density(delta) as beta grows.
double cd_partial_sum(double delta, std::int64_t beta);

/// Number of matrices with integer entries in [-k, k] having lambda as an
/// eigenvalue, by exhaustive enumeration of all (2k+1)^4 matrices. Refuses
/// inputs whose enumeration exceeds `limit` matrices.
std::int64_t brute_force_count_lambda(std::int64_t k, std::int64_t lambda,
                                      std::int64_t limit = kDefaultEnumerationLimit);

/// Same count as brute_force_count_lambda for every input, computed in
/// O(k^2 log k) as Z + Q/2: Z counts matrices whose shift M - lambda I has a
/// zero row or column (closed form), and Q counts the rank-1 factorizations
/// (a, b, c, d), all nonzero, gcd(a, b) = 1, within the entry bounds; each
/// remaining singular shift has exactly two of those.
std::int64_t fast_count_lambda(std::int64_t k, std::int64_t lambda);

/// fast_count_lambda for every lambda in [0, 2k], sharing one coprime-pair
/// enumeration across all lambda.
std::vector<std::int64_t> fast_count_all(std::int64_t k);

/// Main term (24 V(lambda/k) / pi^2) k^2 log k. Requires |lambda| <= 2k.
double asymptotic_count_lambda(std::int64_t k, std::int64_t lambda);

/// Number of matrices with integer entries in [-k, k] and a repeated integer
/// eigenvalue: discriminant zero and even trace. Enumerates the even trace
/// gaps with divisor splits of (a-d)^2/4.
std::int64_t count_repeated_integer(std::int64_t k);

/// Number of matrices with any repeated eigenvalue (discriminant zero).
/// Equal to count_repeated_integer: 4bc = -(a-d)^2 forces a-d even, so a
/// repeated eigenvalue of an integer matrix is always an integer.
std::int64_t count_repeated_eigenvalue(std::int64_t k);

/// |{matrices with integer entries in [-k, k] having an integer eigenvalue}|,
/// computed exactly as (sum over lambda of fast_count_lambda + repeated
/// correction) / 2. Throws if the division is not exact.
std::int64_t count_integer_spectrum(std::int64_t k);

/// One counting query: exact counts plus the asymptotic main term.
struct CountReport {
    std::int64_t k = 0;
    std::int64_t lambda = 0;
    std::optional<std::int64_t> brute;  // filled only when requested
    std::int64_t fast = 0;
    double main_term = 0;
    std::optional<double> ratio;  // fast / main_term, absent when main_term == 0
};

CountReport count_report(std::int64_t k, std::int64_t lambda, bool with_brute,
                         std::int64_t brute_limit = kDefaultEnumerationLimit);

}  // namespace eigencount
