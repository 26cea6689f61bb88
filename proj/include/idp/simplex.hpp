#pragma once

/*
 * The simplex Delta(1,q) for the two-supported reflexive IDP family
 *
 *     q = (r1 repeated x1 times, (1 + r1*x1) repeated r1-1 times),  r1 >= 2,
 *
 * its halfspace description, its lattice points (closed form) and an
 * enumeration oracle that derives the lattice points from the halfspaces
 * alone.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "idp/bareiss.hpp"
#include "idp/checked.hpp"
#include "idp/error.hpp"
#include "idp/matrix.hpp"

namespace idp {

using IntVector = std::vector<std::int64_t>;

enum class Family { FamilyA, FamilyB, NotReflexiveIDP };

inline std::string_view to_string(Family f) {
    switch (f) {
        case Family::FamilyA: return "FamilyA";
        case Family::FamilyB: return "FamilyB";
        case Family::NotReflexiveIDP: return "NotReflexiveIDP";
    }
    return "?";
}

/// Classifies q = (r[0]^x[0], r[1]^x[1]) among the two-supported reflexive IDP simplices.
/// Inputs violating r[0] < r[1] or x > 0 are reported as NotReflexiveIDP.
inline Family classify_2supported(std::array<std::int64_t, 2> r, std::array<std::int64_t, 2> x) {
    if (r[0] < 1 || r[0] >= r[1] || x[0] < 1 || x[1] < 1) return Family::NotReflexiveIDP;
    if (r[0] > 1) {
        std::int64_t prod;
        if (__builtin_mul_overflow(r[0], x[0], &prod)) return Family::NotReflexiveIDP;
        if (r[1] == prod + 1 && x[1] == r[0] - 1) return Family::FamilyA;
        return Family::NotReflexiveIDP;
    }
    return r[1] == 1 + x[0] ? Family::FamilyB : Family::NotReflexiveIDP;
}

/// The weight vector q of the family, with its derived quantities.
class QVector {
public:
    static QVector build(std::int64_t r1, std::int64_t x1) {
        if (r1 < 2) throw ParameterOutOfRange("r1 must be >= 2, got " + std::to_string(r1));
        if (x1 < 1) throw ParameterOutOfRange("x1 must be >= 1, got " + std::to_string(x1));
        QVector q;
        q.r1_ = r1;
        q.x1_ = x1;
        q.d_ = checked_sub(checked_add(r1, x1), 1);
        const std::int64_t big = checked_add(checked_mul(r1, x1), 1);
        q.entries_.reserve(static_cast<std::size_t>(q.d_));
        q.entries_.insert(q.entries_.end(), static_cast<std::size_t>(x1), r1);
        q.entries_.insert(q.entries_.end(), static_cast<std::size_t>(r1 - 1), big);
        std::int64_t n = 1;
        for (auto e : q.entries_) n = checked_add(n, e);
        q.volume_ = n;
        return q;
    }

    std::int64_t r1() const noexcept { return r1_; }
    std::int64_t x1() const noexcept { return x1_; }
    std::int64_t d() const noexcept { return d_; }
    /// 1 + r1*x1, the larger support value.
    std::int64_t r2() const noexcept { return 1 + r1_ * x1_; }
    const IntVector& entries() const noexcept { return entries_; }
    /// N(q) = 1 + sum(q), the normalized volume.
    std::int64_t volume() const noexcept { return volume_; }

    /// Number of lattice points, r1 + d + 3; also the number of variables of the toric ring.
    std::size_t num_points() const noexcept { return static_cast<std::size_t>(r1_ + d_ + 3); }

    bool is_reflexive() const {
        return std::all_of(entries_.begin(), entries_.end(), [&](std::int64_t e) { return volume_ % e == 0; });
    }

    friend bool operator==(const QVector& a, const QVector& b) { return a.r1_ == b.r1_ && a.x1_ == b.x1_; }

private:
    QVector() = default;

    std::int64_t r1_ = 0;
    std::int64_t x1_ = 0;
    std::int64_t d_ = 0;
    IntVector entries_;
    std::int64_t volume_ = 0;
};

inline QVector build_q(std::int64_t r1, std::int64_t x1) { return QVector::build(r1, x1); }

inline std::int64_t dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

/// Irredundant description { p : functional_k(p) <= 1 for all k }.
struct HalfspaceDescription {
    std::vector<IntVector> functionals;  // d+1 rows; row k is lambda_{k+1}
    std::int64_t rhs = 1;

    std::size_t size() const noexcept { return functionals.size(); }

    /// lambda_k(p) with 1-based k.
    std::int64_t evaluate(std::size_t k, const IntVector& p) const {
        if (k < 1 || k > functionals.size()) throw IndexOutOfRange("functional index " + std::to_string(k));
        return dot(functionals[k - 1], p);
    }

    bool contains(const IntVector& p, std::int64_t dilation = 1) const {
        const std::int64_t bound = checked_mul(rhs, dilation);
        return std::all_of(functionals.begin(), functionals.end(),
                           [&](const IntVector& f) { return dot(f, p) <= bound; });
    }
};

inline HalfspaceDescription h_description(const QVector& q) {
    const auto d = static_cast<std::size_t>(q.d());
    const auto x1 = static_cast<std::size_t>(q.x1());
    HalfspaceDescription h;
    h.functionals.assign(d + 1, IntVector(d, 1));
    for (std::size_t k = 0; k < d; ++k)
        h.functionals[k][k] = k < x1 ? -checked_mul(q.x1(), q.r1()) : -(q.r1() - 1);
    return h;
}

/// Vertices e_1..e_d followed by -q.
inline std::vector<IntVector> simplex_vertices(const QVector& q) {
    const auto d = static_cast<std::size_t>(q.d());
    std::vector<IntVector> v;
    for (std::size_t i = 0; i < d; ++i) {
        IntVector e(d, 0);
        e[i] = 1;
        v.push_back(std::move(e));
    }
    IntVector neg(d);
    std::transform(q.entries().begin(), q.entries().end(), neg.begin(), [](std::int64_t e) { return -e; });
    v.push_back(std::move(neg));
    return v;
}

/// |det| of the homogenized vertex matrix; equals N(q).
inline BigInt vertex_simplex_volume(const QVector& q) {
    const auto verts = simplex_vertices(q);
    const std::size_t n = verts.size();
    IntMatrix m(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r + 1 < n; ++r) m(r, c) = verts[c][r];
        m(n - 1, c) = 1;
    }
    BigInt det = determinant(m);
    return det < 0 ? BigInt(-det) : det;
}

/// The ordered lattice points a'_1..a'_{r1+3}, b'_1..b'_d of Delta(1,q).
class PointConfiguration {
public:
    PointConfiguration(QVector q, std::vector<IntVector> columns) : q_(std::move(q)), columns_(std::move(columns)) {
        if (columns_.size() != q_.num_points()) throw DimensionMismatch("point configuration has wrong column count");
    }

    const QVector& q() const noexcept { return q_; }
    std::size_t size() const noexcept { return columns_.size(); }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(q_.d()); }
    const std::vector<IntVector>& columns() const noexcept { return columns_; }
    const IntVector& column(std::size_t idx) const { return columns_.at(idx); }

    /// a'_i, 1-based.
    const IntVector& a(std::size_t i) const { return columns_.at(i - 1); }
    /// b'_j, 1-based.
    const IntVector& b(std::size_t j) const { return columns_.at(static_cast<std::size_t>(q_.r1()) + 3 + j - 1); }

    std::string label(std::size_t idx) const {
        const auto na = static_cast<std::size_t>(q_.r1()) + 3;
        return idx < na ? "a" + std::to_string(idx + 1) : "b" + std::to_string(idx - na + 1);
    }

    /// The (d+1) x (r1+d+3) matrix of columns lifted to height 1.
    IntMatrix homogenized() const {
        const std::size_t d = dim();
        IntMatrix m(d + 1, size());
        for (std::size_t c = 0; c < size(); ++c) {
            for (std::size_t r = 0; r < d; ++r) m(r, c) = columns_[c][r];
            m(d, c) = 1;
        }
        return m;
    }

private:
    QVector q_;
    std::vector<IntVector> columns_;
};

inline PointConfiguration lattice_points_formula(const QVector& q) {
    const auto d = static_cast<std::size_t>(q.d());
    const auto x1 = static_cast<std::size_t>(q.x1());
    const std::int64_t r1 = q.r1();

    IntVector ray(d), base(d), origin(d, 0);
    for (std::size_t k = 0; k < d; ++k) {
        ray[k] = k < x1 ? -1 : -q.x1();
        base[k] = k < x1 ? 0 : -1;
    }

    std::vector<IntVector> cols;
    cols.reserve(q.num_points());
    for (std::int64_t i = 1; i <= r1; ++i) {
        IntVector v(d);
        for (std::size_t k = 0; k < d; ++k) v[k] = checked_add(checked_mul(r1 - i + 1, ray[k]), base[k]);
        cols.push_back(std::move(v));
    }
    cols.push_back(ray);
    cols.push_back(base);
    cols.push_back(origin);
    for (std::size_t j = 1; j <= d; ++j) {
        IntVector e(d, 0);
        e[d - j] = 1;
        cols.push_back(std::move(e));
    }
    return PointConfiguration(q, std::move(cols));
}

struct EnumerationBudget {
    std::uint64_t max_candidates = 10'000'000;

    /// Reads IDP_ENUM_BUDGET when set to a positive integer.
    static EnumerationBudget from_env() {
        EnumerationBudget b;
        if (const char* s = std::getenv("IDP_ENUM_BUDGET")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(s, &end, 10);
            if (end != s && *end == '\0' && v > 0) b.max_candidates = v;
        }
        return b;
    }
};

/// Visits every integer point p of the box prod_k [-t*q_k, t] with lambda_k(p) <= t for all k.
///
/// The box is swept in slices s = sum(p). Within a slice, lambda_k(p) = s + (c_k - 1) p_k where c_k is
/// the diagonal coefficient of lambda_k, so lambda_k <= t pins a lower bound on p_k and the slice
/// reduces to bounded compositions of the remaining slack. Each emitted point is re-checked against
/// the full description. Candidates (slices plus leaves) count against the budget.
template <class Visitor>
void for_each_dilate_point(const QVector& q, std::int64_t t, const EnumerationBudget& budget, Visitor&& visit) {
    if (t < 0) throw ParameterOutOfRange("dilation factor must be >= 0");
    const HalfspaceDescription h = h_description(q);
    const auto d = static_cast<std::size_t>(q.d());

    IntVector lo(d), hi(d, t), slope(d);
    for (std::size_t k = 0; k < d; ++k) {
        lo[k] = -checked_mul(t, q.entries()[k]);
        for (std::size_t j = 0; j < d; ++j)
            if (j != k && h.functionals[k][j] != 1) throw InternalConsistency("unexpected functional shape");
        slope[k] = 1 - h.functionals[k][k];  // lambda_k <= t  <=>  p_k >= (s - t) / slope_k
        if (slope[k] <= 0) throw InternalConsistency("functional without a lower bound");
    }

    std::uint64_t work = 0;
    auto charge = [&] {
        if (++work > budget.max_candidates)
            throw BudgetExceeded("enumeration exceeded " + std::to_string(budget.max_candidates) + " candidates");
    };

    std::int64_t s_min = 0;
    for (auto v : lo) s_min = checked_add(s_min, v);

    IntVector lower(d), point(d);
    for (std::int64_t s = s_min; s <= t; ++s) {
        charge();
        std::int64_t base = 0;
        for (std::size_t k = 0; k < d; ++k) {
            lower[k] = std::max(lo[k], ceil_div(s - t, slope[k]));
            base = checked_add(base, lower[k]);
        }
        const std::int64_t slack = s - base;
        if (slack < 0) continue;

        // Distribute the slack over coordinates 0..d-1, respecting the upper bounds.
        auto rec = [&](auto&& self, std::size_t k, std::int64_t rem) -> void {
            if (k + 1 == d) {
                charge();
                const std::int64_t v = lower[k] + rem;
                if (v > hi[k]) return;
                point[k] = v;
                if (!h.contains(point, t)) throw InternalConsistency("slice enumeration produced an exterior point");
                visit(static_cast<const IntVector&>(point));
                return;
            }
            const std::int64_t cap = std::min(rem, hi[k] - lower[k]);
            for (std::int64_t e = 0; e <= cap; ++e) {
                point[k] = lower[k] + e;
                self(self, k + 1, rem - e);
            }
        };
        rec(rec, 0, slack);
    }
}

/// All lattice points of Delta(1,q), derived from the halfspace description only.
inline std::set<IntVector> lattice_points_bruteforce(const QVector& q, const EnumerationBudget& budget = {}) {
    std::set<IntVector> out;
    for_each_dilate_point(q, 1, budget, [&](const IntVector& p) { out.insert(p); });
    return out;
}

/// 1-based indices k with lambda_k(p) = 1.
inline std::vector<std::size_t> tightness_profile(const QVector& q, const IntVector& p) {
    if (p.size() != static_cast<std::size_t>(q.d())) throw DimensionMismatch("point has wrong dimension");
    const HalfspaceDescription h = h_description(q);
    std::vector<std::size_t> tight;
    for (std::size_t k = 1; k <= h.size(); ++k) {
        const std::int64_t v = h.evaluate(k, p);
        if (v > h.rhs) throw PointOutsideSimplex("lambda_" + std::to_string(k) + "(p) = " + std::to_string(v) + " > 1");
        if (v == h.rhs) tight.push_back(k);
    }
    return tight;
}

}  // namespace idp
