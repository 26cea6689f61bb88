#pragma once

/*
 * Exact linear algebra on small dense matrices.
 *
 * bareiss_determinant keeps every intermediate entry integral: after step k
 * each entry of the trailing block is a (k+1)x(k+1) minor of the input, so
 * the division by the previous pivot is exact. Row swaps flip the sign.
 *
 * solve_rational is plain Gauss-Jordan over exact rationals; it is only used
 * on (d+1)x(d+1) systems.
 */

#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "idp/error.hpp"
#include "idp/matrix.hpp"

namespace idp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class T>
T bareiss_determinant(Matrix<T> m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DimensionMismatch("determinant of a non-square matrix");
    if (n == 0) return T(1);

    T sign(1);
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == T(0)) ++p;
            if (p == n) return T(0);
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Determinant of an int64 matrix, computed in arbitrary precision.
inline BigInt determinant(const IntMatrix& m) {
    Matrix<BigInt> wide(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) wide(r, c) = m(r, c);
    return bareiss_determinant(std::move(wide));
}

/// Solves m * x = rhs exactly; nullopt when m is singular.
inline std::optional<std::vector<Rational>> solve_rational(Matrix<Rational> m, std::vector<Rational> rhs) {
    const std::size_t n = m.rows();
    if (m.cols() != n || rhs.size() != n) throw DimensionMismatch("solve_rational: shape mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != k) {
            m.swap_rows(k, p);
            std::swap(rhs[k], rhs[p]);
        }
        const Rational pivot = m(k, k);
        for (std::size_t j = k; j < n; ++j) m(k, j) /= pivot;
        rhs[k] /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0) continue;
            const Rational f = m(i, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            rhs[i] -= f * rhs[k];
        }
    }
    return rhs;
}

}  // namespace idp
