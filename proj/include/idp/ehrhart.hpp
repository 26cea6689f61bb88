#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "idp/checked.hpp"
#include "idp/error.hpp"
#include "idp/simplex.hpp"

namespace idp {

/// Coefficients h*_0..h*_d of the Ehrhart h*-polynomial.
struct HStarVector {
    std::vector<std::int64_t> coeffs;

    std::size_t dim() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    std::int64_t sum() const {
        std::int64_t s = 0;
        for (auto c : coeffs) s = checked_add(s, c);
        return s;
    }

    bool is_unimodal() const {
        std::size_t i = 1;
        while (i < coeffs.size() && coeffs[i] >= coeffs[i - 1]) ++i;
        while (i < coeffs.size() && coeffs[i] <= coeffs[i - 1]) ++i;
        return i >= coeffs.size();
    }

    friend bool operator==(const HStarVector&, const HStarVector&) = default;
};

/// w(q,b) = b - x1*floor(b/(1+x1*r1)) - (r1-1)*floor(b/r1), defined for 0 <= b < N(q).
inline std::int64_t weight(const QVector& q, std::int64_t b) {
    if (b < 0 || b >= q.volume())
        throw IndexOutOfRange("weight index " + std::to_string(b) + " outside [0, " + std::to_string(q.volume() - 1) + "]");
    return b - checked_mul(q.x1(), b / q.r2()) - checked_mul(q.r1() - 1, b / q.r1());
}

inline HStarVector hstar(const QVector& q) {
    HStarVector h;
    h.coeffs.assign(static_cast<std::size_t>(q.d()) + 1, 0);
    for (std::int64_t b = 0; b < q.volume(); ++b) {
        const std::int64_t w = weight(q, b);
        if (w < 0 || w > q.d()) throw InternalConsistency("weight out of degree range at b=" + std::to_string(b));
        ++h.coeffs[static_cast<std::size_t>(w)];
    }
    return h;
}

/// h*_1 + d + 1: the lattice point count read off the h*-vector.
inline std::int64_t lattice_point_count_from_h1(const QVector& q) {
    return checked_add(hstar(q).coeffs.at(1), q.d() + 1);
}

/// C(n, k) by the multiplicative formula, cancelling common factors before each multiply.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays integral; split i across both factors first.
        std::int64_t num = n - k + i;
        std::int64_t den = i;
        const std::int64_t g1 = std::gcd(num, den);
        num /= g1;
        den /= g1;
        const std::int64_t g2 = std::gcd(result, den);
        result /= g2;
        den /= g2;
        if (den != 1) throw InternalConsistency("binomial: non-integral intermediate");
        result = checked_mul(result, num);
    }
    return result;
}

/// L(t) = sum_i h*_i C(t + d - i, d), the number of lattice points in t*Delta.
inline std::int64_t ehrhart_value(const HStarVector& h, std::int64_t t) {
    if (t < 0) throw ParameterOutOfRange("dilation factor must be >= 0");
    const auto d = static_cast<std::int64_t>(h.dim());
    std::int64_t total = 0;
    for (std::int64_t i = 0; i <= d; ++i)
        total = checked_add(total, checked_mul(h.coeffs[static_cast<std::size_t>(i)], binomial(t + d - i, d)));
    return total;
}

/// Counts lattice points of t*Delta directly from the scaled halfspace description.
inline std::int64_t ehrhart_bruteforce(const QVector& q, std::int64_t t, const EnumerationBudget& budget = {}) {
    std::int64_t count = 0;
    for_each_dilate_point(q, t, budget, [&](const IntVector&) { ++count; });
    return count;
}

}  // namespace idp
