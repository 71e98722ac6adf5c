#include "eigencount/exact_count.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "eigencount/closed_form.hpp"

namespace eigencount {
namespace {

std::int64_t floor_div(std::int64_t p, std::int64_t q) {  // q > 0
    std::int64_t r = p / q;
    if (p % q != 0 && p < 0) --r;
    return r;
}

std::int64_t ceil_div(std::int64_t p, std::int64_t q) { return -floor_div(-p, q); }

// #{t integer, t != 0, lo <= t <= hi}
std::int64_t count_nonzero_between(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) return 0;
    return hi - lo + 1 - (lo <= 0 && 0 <= hi ? 1 : 0);
}

std::int64_t n_k_lambda_unchecked(std::int64_t k, std::int64_t lambda, std::int64_t x,
                                  std::int64_t y) {
    // c: |xc + lambda| <= k and |yc| <= k
    const std::int64_t c_hi = std::min(floor_div(k - lambda, x), floor_div(k, y));
    const std::int64_t c_lo = std::max(ceil_div(-k - lambda, x), ceil_div(-k, y));
    // d: |xd| <= k and |yd + lambda| <= k
    const std::int64_t d_hi = std::min(floor_div(k, x), floor_div(k - lambda, y));
    const std::int64_t d_lo = std::max(ceil_div(-k, x), ceil_div(-k - lambda, y));
    return count_nonzero_between(c_lo, c_hi) * count_nonzero_between(d_lo, d_hi);
}

// Matrices whose shift M - lambda I has a zero row or zero column (the
// singular-with-a-zero-entry class). Inclusion-exclusion over the four line
// patterns collapses to (4k+1)^2; a zero diagonal entry needs |lambda| <= k.
std::int64_t zero_pattern_count(std::int64_t k, std::int64_t lambda) {
    if (lambda > k) return 0;
    return (4 * k + 1) * (4 * k + 1);
}

}  // namespace

MobiusTable mobius_sieve(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("mobius_sieve: n must be positive");
    MobiusTable t;
    t.limit = n;
    t.values.assign(static_cast<std::size_t>(n) + 1, 0);
    t.values[1] = 1;
    std::vector<std::int64_t> primes;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t i = 2; i <= n; ++i) {
        if (!composite[static_cast<std::size_t>(i)]) {
            primes.push_back(i);
            t.values[static_cast<std::size_t>(i)] = -1;
        }
        for (std::int64_t p : primes) {
            if (i * p > n) break;
            composite[static_cast<std::size_t>(i * p)] = true;
            if (i % p == 0) {
                t.values[static_cast<std::size_t>(i * p)] = 0;
                break;
            }
            t.values[static_cast<std::size_t>(i * p)] =
                static_cast<std::int8_t>(-t.values[static_cast<std::size_t>(i)]);
        }
    }
    return t;
}

std::int64_t n_k_lambda(std::int64_t k, std::int64_t lambda, std::int64_t x, std::int64_t y) {
    if (k < 1 || lambda < 0 || lambda > 2 * k)
        throw std::invalid_argument("n_k_lambda: requires k >= 1 and 0 <= lambda <= 2k");
    if (x < 1 || x > y || y > k)
        throw std::invalid_argument("n_k_lambda: requires 1 <= x <= y <= k");
    return n_k_lambda_unchecked(k, lambda, x, y);
}

CDPair cd_factors(double delta, double x, double y) {
    if (!(delta >= 0 && delta <= 2)) throw std::invalid_argument("cd_factors: requires 0 <= delta <= 2");
    if (!(x > 0 && x <= y)) throw std::invalid_argument("cd_factors: requires 0 < x <= y");
    const double c = std::max(0.0, std::min((1 - delta) / x + 1 / y, 2 / y));
    const double d = std::min((1 - delta) / y + 1 / x, 2 / y);
    return {c, d};
}

double cd_partial_sum(double delta, std::int64_t beta) {
    if (beta < 1) throw std::invalid_argument("cd_partial_sum: requires beta >= 1");
    if (!(delta >= 0 && delta <= 2))
        throw std::invalid_argument("cd_partial_sum: requires 0 <= delta <= 2");
    double sum = 0;
    const double b = static_cast<double>(beta);
    for (std::int64_t alpha = 1; alpha < beta; ++alpha) {
        const double a = static_cast<double>(alpha);
        const double c = std::max(0.0, std::min((1 - delta) / a + 1 / b, 2 / b));
        const double d = std::min((1 - delta) / b + 1 / a, 2 / b);
        sum += c * d;
    }
    return sum;
}

std::int64_t brute_force_count_lambda(std::int64_t k, std::int64_t lambda, std::int64_t limit) {
    if (k < 0) throw std::invalid_argument("brute_force_count_lambda: requires k >= 0");
    const std::int64_t side = 2 * k + 1;
    const __int128 enumerated = static_cast<__int128>(side) * side * side * side;
    if (enumerated > static_cast<__int128>(limit))
        throw std::invalid_argument("brute_force_count_lambda: enumeration limit exceeded");
    std::int64_t count = 0;
    for (std::int64_t a = -k; a <= k; ++a)
        for (std::int64_t d = -k; d <= k; ++d) {
            const std::int64_t p = (a - lambda) * (d - lambda);
            for (std::int64_t b = -k; b <= k; ++b)
                for (std::int64_t c = -k; c <= k; ++c)
                    if (b * c == p) ++count;
        }
    return count;
}

std::int64_t fast_count_lambda(std::int64_t k, std::int64_t lambda) {
    if (k < 0) throw std::invalid_argument("fast_count_lambda: requires k >= 0");
    lambda = lambda < 0 ? -lambda : lambda;  // M -> -M symmetry
    if (lambda > 2 * k) return 0;
    if (k == 0) return 1;  // the zero matrix
    std::int64_t q = 4 * n_k_lambda_unchecked(k, lambda, 1, 1);
    for (std::int64_t a = 1; a <= k; ++a)
        for (std::int64_t b = a + 1; b <= k; ++b)
            if (std::gcd(a, b) == 1) q += 8 * n_k_lambda_unchecked(k, lambda, a, b);
    return zero_pattern_count(k, lambda) + q / 2;
}

std::vector<std::int64_t> fast_count_all(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("fast_count_all: requires k >= 0");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(2 * k) + 1, 0);
    if (k == 0) {
        counts[0] = 1;
        return counts;
    }
    std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
    for (std::int64_t a = 1; a <= k; ++a)
        for (std::int64_t b = a + 1; b <= k; ++b)
            if (std::gcd(a, b) == 1)
                pairs.emplace_back(static_cast<std::int32_t>(a), static_cast<std::int32_t>(b));
    for (std::int64_t lambda = 0; lambda <= 2 * k; ++lambda) {
        std::int64_t q = 4 * n_k_lambda_unchecked(k, lambda, 1, 1);
        for (const auto& [a, b] : pairs) q += 8 * n_k_lambda_unchecked(k, lambda, a, b);
        counts[static_cast<std::size_t>(lambda)] = zero_pattern_count(k, lambda) + q / 2;
    }
    return counts;
}

double asymptotic_count_lambda(std::int64_t k, std::int64_t lambda) {
    if (k < 1) throw std::invalid_argument("asymptotic_count_lambda: requires k >= 1");
    lambda = lambda < 0 ? -lambda : lambda;
    if (lambda > 2 * k)
        throw std::invalid_argument("asymptotic_count_lambda: requires |lambda| <= 2k");
    const double delta = static_cast<double>(lambda) / static_cast<double>(k);
    const double kk = static_cast<double>(k);
    return 24 * v_density(delta) / (std::numbers::pi * std::numbers::pi) * kk * kk * std::log(kk);
}

std::int64_t count_repeated_integer(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("count_repeated_integer: requires k >= 0");
    // disc = 0 means 4bc = -(a-d)^2. Trace gap a-d = 0: bc = 0, (4k+1)
    // choices; gap +/-2j: bc = -j^2, split over divisors of j^2 within [1, k].
    std::int64_t total = (2 * k + 1) * (4 * k + 1);
    for (std::int64_t j = 1; j <= k; ++j) {
        const std::int64_t m = j * j;
        std::int64_t ways = 0;
        for (std::int64_t u = std::max<std::int64_t>(1, ceil_div(m, k)); u <= k; ++u)
            if (m % u == 0 && m / u <= k) ++ways;
        total += 2 * (2 * k + 1 - 2 * j) * 2 * ways;
    }
    return total;
}

std::int64_t count_repeated_eigenvalue(std::int64_t k) {
    // 4 | (a-d)^2 forces a-d even, so the trace is always even here and the
    // repeated eigenvalue (a+d)/2 is automatically an integer.
    return count_repeated_integer(k);
}

std::int64_t count_integer_spectrum(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("count_integer_spectrum: requires k >= 0");
    const auto counts = fast_count_all(k);
    std::int64_t sum = counts[0];
    for (std::size_t lambda = 1; lambda < counts.size(); ++lambda) sum += 2 * counts[lambda];
    sum += count_repeated_integer(k);  // repeated eigenvalues appear once, not twice
    if (sum % 2 != 0)
        throw std::logic_error("count_integer_spectrum: internal parity check failed");
    return sum / 2;
}

CountReport count_report(std::int64_t k, std::int64_t lambda, bool with_brute,
                         std::int64_t brute_limit) {
    CountReport r;
    r.k = k;
    r.lambda = lambda;
    r.fast = fast_count_lambda(k, lambda);
    if (with_brute) r.brute = brute_force_count_lambda(k, lambda, brute_limit);
    const std::int64_t abs_lambda = lambda < 0 ? -lambda : lambda;
    r.main_term = abs_lambda <= 2 * k ? asymptotic_count_lambda(k, lambda) : 0.0;
    if (r.main_term != 0) r.ratio = static_cast<double>(r.fast) / r.main_term;
    return r;
}

}  // namespace eigencount
