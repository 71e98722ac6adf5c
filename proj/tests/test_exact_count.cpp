#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "eigencount/closed_form.hpp"
#include "eigencount/exact_count.hpp"
#include "eigencount/rng.hpp"

using namespace eigencount;

namespace {

// Enumeration oracle for the pair counts, independent of the interval
// arithmetic in n_k_lambda. Valid for any nonzero a, b.
std::int64_t n_enumerated(std::int64_t k, std::int64_t lambda, std::int64_t a, std::int64_t b) {
    std::int64_t cs = 0, ds = 0;
    for (std::int64_t c = -k; c <= k; ++c)
        if (c != 0 && std::llabs(a * c + lambda) <= k && std::llabs(b * c) <= k) ++cs;
    for (std::int64_t d = -k; d <= k; ++d)
        if (d != 0 && std::llabs(a * d) <= k && std::llabs(b * d + lambda) <= k) ++ds;
    return cs * ds;
}

// Brute scan for matrices with zero discriminant.
std::int64_t repeated_enumerated(std::int64_t k) {
    std::int64_t count = 0;
    for (std::int64_t a = -k; a <= k; ++a)
        for (std::int64_t b = -k; b <= k; ++b)
            for (std::int64_t c = -k; c <= k; ++c)
                for (std::int64_t d = -k; d <= k; ++d)
                    if ((a - d) * (a - d) + 4 * b * c == 0) ++count;
    return count;
}

bool is_square(std::int64_t n, std::int64_t& root) {
    if (n < 0) return false;
    root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    while (root * root > n) --root;
    while ((root + 1) * (root + 1) <= n) ++root;
    return root * root == n;
}

// Brute scan for matrices with an integer eigenvalue: the discriminant must be
// a perfect square with the right parity against the trace.
std::int64_t integer_spectrum_enumerated(std::int64_t k) {
    std::int64_t count = 0;
    for (std::int64_t a = -k; a <= k; ++a)
        for (std::int64_t b = -k; b <= k; ++b)
            for (std::int64_t c = -k; c <= k; ++c)
                for (std::int64_t d = -k; d <= k; ++d) {
                    std::int64_t root = 0;
                    if (is_square((a - d) * (a - d) + 4 * b * c, root) && (a + d + root) % 2 == 0)
                        ++count;
                }
    return count;
}

}  // namespace

TEST_CASE("mobius sieve basics") {
    const auto t = mobius_sieve(12);
    const int expect[] = {1, -1, -1, 0, -1, 1};
    for (int i = 1; i <= 6; ++i) CHECK(t(i) == expect[i - 1]);
    CHECK(t(12) == 0);

    CHECK_THROWS_AS(mobius_sieve(0), std::invalid_argument);
}

TEST_CASE("mobius divisor identity") {
    const auto t = mobius_sieve(10000);
    for (std::int64_t m = 1; m <= t.limit; ++m) {
        std::int64_t sum = 0;
        for (std::int64_t d = 1; d * d <= m; ++d) {
            if (m % d != 0) continue;
            sum += t(d);
            if (d != m / d) sum += t(m / d);
        }
        CHECK(sum == (m == 1 ? 1 : 0));
    }
}

TEST_CASE("mobius partial sum approaches 6/pi^2") {
    const auto t = mobius_sieve(1000);
    double sum = 0;
    for (std::int64_t d = 1; d <= 1000; ++d) sum += t(d) / static_cast<double>(d * d);
    CHECK(std::abs(sum - 6 / (std::numbers::pi * std::numbers::pi)) < 1e-3);
}

TEST_CASE("pair count examples") {
    CHECK(n_k_lambda(2, 0, 1, 2) == 4);
    CHECK(n_k_lambda(2, 2, 1, 2) == 2);
    CHECK(n_k_lambda(1, 2, 1, 1) == 1);
    CHECK_THROWS_AS(n_k_lambda(2, 5, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(n_k_lambda(2, 0, 2, 1), std::invalid_argument);
}

TEST_CASE("pair counts match enumeration and carry the expected symmetries") {
    for (std::int64_t k : {3, 5}) {
        for (std::int64_t lambda : {std::int64_t{0}, std::int64_t{1}, std::int64_t{2}, 2 * k}) {
            for (std::int64_t a = 1; a <= k; ++a)
                for (std::int64_t b = 1; b <= k; ++b) {
                    const std::int64_t n = n_enumerated(k, lambda, a, b);
                    CHECK(n == n_enumerated(k, lambda, -a, b));
                    CHECK(n == n_enumerated(k, lambda, a, -b));
                    CHECK(n == n_enumerated(k, lambda, -a, -b));
                    CHECK(n == n_enumerated(k, lambda, b, a));
                    if (a <= b) CHECK(n == n_k_lambda(k, lambda, a, b));
                }
        }
    }
}

TEST_CASE("interval factors C and D") {
    auto cd = cd_factors(0, 1, 2);
    CHECK(cd.c_factor == doctest::Approx(1.0));
    CHECK(cd.d_factor == doctest::Approx(1.0));

    cd = cd_factors(2, 1, 2);
    CHECK(cd.c_factor == doctest::Approx(0.0));
    CHECK(cd.d_factor == doctest::Approx(0.5));

    cd = cd_factors(1, 1, 3);
    CHECK(cd.c_factor == doctest::Approx(1.0 / 3));
    CHECK(cd.d_factor == doctest::Approx(2.0 / 3));

    CHECK_THROWS_AS(cd_factors(2.5, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(cd_factors(1, 2, 1), std::invalid_argument);
}

TEST_CASE("partial sums of C D") {
    CHECK(cd_partial_sum(0.7, 1) == 0.0);
    CHECK(cd_partial_sum(1, 4) == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(std::abs(1000 * cd_partial_sum(0, 1000) - 4.0) < 0.01);
}

TEST_CASE("partial sums approximate V within 8(1+log beta)/beta") {
    for (double delta : {0.0, 0.5, 1.0, 1.3, 1.8})
        for (std::int64_t beta : {10, 100, 1000}) {
            const double err = std::abs(beta * cd_partial_sum(delta, beta) - v_density(delta));
            CHECK(err <= 8 * (1 + std::log(static_cast<double>(beta))) / beta);
        }
}

TEST_CASE("pair count vs continuum factors (k^2 C D approximation)") {
    SplitMix64 rng(substream_state(21, 0));
    for (std::int64_t k : {20, 50, 100}) {
        for (std::int64_t lambda : {std::int64_t{0}, k / 2, k, 3 * k / 2}) {
            for (int trial = 0; trial < 200; ++trial) {
                const std::int64_t x = 1 + static_cast<std::int64_t>(rng.next_u64() % k);
                const std::int64_t y =
                    x + static_cast<std::int64_t>(rng.next_u64() % static_cast<std::uint64_t>(k - x + 1));
                const auto cd = cd_factors(static_cast<double>(lambda) / k, static_cast<double>(x),
                                           static_cast<double>(y));
                const double approx = static_cast<double>(k) * k * cd.c_factor * cd.d_factor;
                const double err = std::abs(static_cast<double>(n_k_lambda(k, lambda, x, y)) - approx);
                CHECK(err <= 8.0 * k / y);
            }
        }
    }
}

TEST_CASE("brute force counter") {
    CHECK(brute_force_count_lambda(1, 0) == 33);
    CHECK(brute_force_count_lambda(1, 1) == 27);
    CHECK(brute_force_count_lambda(3, 7) == 0);
    CHECK(brute_force_count_lambda(2, -1) == brute_force_count_lambda(2, 1));
    CHECK_THROWS_AS(brute_force_count_lambda(10, 0, 1000), std::invalid_argument);
}

TEST_CASE("fast counter equals the brute oracle") {
    CHECK(fast_count_lambda(1, 0) == 33);
    CHECK(fast_count_lambda(1, 1) == 27);
    CHECK(fast_count_lambda(3, 7) == 0);
    for (std::int64_t k = 1; k <= 5; ++k) {
        const auto all = fast_count_all(k);
        for (std::int64_t lambda = -2 * k; lambda <= 2 * k; ++lambda) {
            const auto fast = all[static_cast<std::size_t>(std::llabs(lambda))];
            CHECK(fast == fast_count_lambda(k, lambda));
            CHECK(fast == brute_force_count_lambda(k, lambda));
        }
    }
}

TEST_CASE("fast counter is even in lambda") {
    for (std::int64_t k : {2, 7, 19})
        for (std::int64_t lambda = 0; lambda <= 2 * k; ++lambda)
            CHECK(fast_count_lambda(k, lambda) == fast_count_lambda(k, -lambda));
}

TEST_CASE("asymptotic main term") {
    const double expected =
        96 / (std::numbers::pi * std::numbers::pi) * 1e4 * std::log(100.0);
    CHECK(asymptotic_count_lambda(100, 0) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(asymptotic_count_lambda(100, 0) == doctest::Approx(4.479e5).epsilon(1e-3));
    CHECK(asymptotic_count_lambda(7, 14) == 0.0);
    CHECK(asymptotic_count_lambda(17, 5) == asymptotic_count_lambda(17, -5));
    CHECK_THROWS_AS(asymptotic_count_lambda(3, 8), std::invalid_argument);
}

TEST_CASE("repeated eigenvalue counts") {
    CHECK(count_repeated_integer(0) == 1);
    CHECK(count_repeated_integer(1) == 19);
    for (std::int64_t k = 0; k <= 6; ++k) {
        CHECK(count_repeated_integer(k) == repeated_enumerated(k));
        // 4bc = -(a-d)^2 forces an even trace, so the integer-eigenvalue
        // restriction never removes anything
        CHECK(count_repeated_eigenvalue(k) == count_repeated_integer(k));
    }
    CHECK(count_repeated_integer(50) == 54333);  // frozen from the enumeration oracle
}

TEST_CASE("integer spectrum count") {
    CHECK(count_integer_spectrum(0) == 1);
    CHECK(count_integer_spectrum(1) == 55);
    for (std::int64_t k = 1; k <= 4; ++k)
        CHECK(count_integer_spectrum(k) == integer_spectrum_enumerated(k));
}

TEST_CASE("count report assembles the pieces") {
    const auto r = count_report(6, 2, true);
    REQUIRE(r.brute.has_value());
    CHECK(*r.brute == r.fast);
    CHECK(r.main_term == doctest::Approx(asymptotic_count_lambda(6, 2)));
    REQUIRE(r.ratio.has_value());
    CHECK(*r.ratio == doctest::Approx(r.fast / r.main_term));

    const auto edge = count_report(5, 10, false);  // V(2) = 0: no ratio
    CHECK(!edge.brute.has_value());
    CHECK(edge.main_term == 0.0);
    CHECK(!edge.ratio.has_value());
}
