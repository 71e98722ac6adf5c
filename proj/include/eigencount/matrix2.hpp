#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <variant>

namespace eigencount {

constexpr std::int64_t iabs64(std::int64_t v) { return v < 0 ? -v : v; }

/// 2x2 integer matrix ((a, b), (c, d)), row-major.
struct IntMatrix2 {
    std::int64_t a = 0, b = 0, c = 0, d = 0;

    constexpr bool operator==(const IntMatrix2&) const = default;
    constexpr IntMatrix2 operator-() const { return {-a, -b, -c, -d}; }

    /// True when every entry has absolute value at most k.
    constexpr bool within_bound(std::int64_t k) const {
        return iabs64(a) <= k && iabs64(b) <= k && iabs64(c) <= k && iabs64(d) <= k;
    }
};

/// 2x2 real matrix ((a, b), (c, d)); the sampling model draws entries from [-1, 1].
struct RealMatrix2 {
    double a = 0, b = 0, c = 0, d = 0;

    constexpr bool operator==(const RealMatrix2&) const = default;
};

template <typename T>
struct CharInvariants {
    T trace;
    T determinant;
    T discriminant;  // trace^2 - 4 det = (a-d)^2 + 4bc
};

constexpr CharInvariants<std::int64_t> char_invariants(const IntMatrix2& m) {
    return {m.a + m.d, m.a * m.d - m.b * m.c, (m.a - m.d) * (m.a - m.d) + 4 * m.b * m.c};
}

constexpr CharInvariants<double> char_invariants(const RealMatrix2& m) {
    return {m.a + m.d, m.a * m.d - m.b * m.c, (m.a - m.d) * (m.a - m.d) + 4 * m.b * m.c};
}

struct ComplexPair {};
struct RealDistinct {
    double lo, hi;  // lo < hi strictly
};
struct Repeated {
    double value;
};

using SpectrumClass = std::variant<ComplexPair, RealDistinct, Repeated>;

/// Classifies the eigenvalue pair by the sign of the discriminant.
/// Real eigenvalues come from the quadratic formula on (trace, determinant);
/// no general eigensolver is involved.
inline SpectrumClass classify_spectrum(const RealMatrix2& m) {
    const auto inv = char_invariants(m);
    if (inv.discriminant < 0) return ComplexPair{};
    if (inv.discriminant == 0) return Repeated{inv.trace / 2};
    const double s = std::sqrt(inv.discriminant);
    return RealDistinct{(inv.trace - s) / 2, (inv.trace + s) / 2};
}

inline SpectrumClass classify_spectrum(const IntMatrix2& m) {
    return classify_spectrum(RealMatrix2{static_cast<double>(m.a), static_cast<double>(m.b),
                                         static_cast<double>(m.c), static_cast<double>(m.d)});
}

struct ZeroPattern {};

/// Canonical factorization of a singular matrix with no zero entry:
/// M = ((a*c, b*c), (a*d, b*d)) with a,b,c,d nonzero, gcd(a,b) = 1, a > 0.
struct Quadruple {
    std::int64_t a, b, c, d;

    constexpr bool operator==(const Quadruple&) const = default;
    constexpr IntMatrix2 reconstruct() const { return {a * c, b * c, a * d, b * d}; }
};

using SingularForm = std::variant<ZeroPattern, Quadruple>;

/// Structure of a singular integer matrix: either some entry is zero (then a
/// second entry is zero as well, forming a zero row or column), or the matrix
/// factors uniquely (up to global negation) as a rank-1 product. The a > 0
/// convention picks one representative of the +/- pair.
inline SingularForm singular_representation(const IntMatrix2& m) {
    if (m.a * m.d != m.b * m.c) throw std::invalid_argument("singular_representation: matrix is nonsingular");
    if (m.a == 0 || m.b == 0 || m.c == 0 || m.d == 0) return ZeroPattern{};
    const std::int64_t c = std::gcd(m.a, m.b);  // gcd of the top row, positive
    std::int64_t a = m.a / c;
    std::int64_t b = m.b / c;
    std::int64_t d = m.c / a;  // bottom row is d times (a, b)
    if (a < 0) {
        a = -a;
        b = -b;
        d = -d;
        return Quadruple{a, b, -c, d};
    }
    return Quadruple{a, b, c, d};
}

/// Eigenvalue magnitude bound n*B for an n x n matrix with entries bounded by
/// B; here n = 2 and B is the largest entry magnitude.
inline double gershgorin_bound(const RealMatrix2& m) {
    return 2 * std::max(std::max(std::abs(m.a), std::abs(m.b)), std::max(std::abs(m.c), std::abs(m.d)));
}

constexpr std::int64_t gershgorin_bound(const IntMatrix2& m) {
    const std::int64_t p = std::max(iabs64(m.a), iabs64(m.b));
    const std::int64_t q = std::max(iabs64(m.c), iabs64(m.d));
    return 2 * std::max(p, q);
}

}  // namespace eigencount
