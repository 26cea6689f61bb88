#pragma once

/*
 * The toric ideal of the homogenized lattice points A and the explicit
 * binomial family G in K[z_1..z_{r1+3}, y_1..y_d] with lex order
 * z_1 > ... > z_{r1+3} > y_1 > ... > y_d.
 *
 * Variable layout: z_i is index i-1, y_j is index r1+3+j-1, which is also
 * the column order of A.
 *
 * Generator groups:
 *   EQ1      z_i z_j - z_k z_l                       (i,j) in B, (k,l) its companion
 *   EQ2      z_{k+1} y_1..y_{r1-1} - z_{r1+1}^{r1-k} z_{r1+3}^k
 *   EQ3      z_{r1-k} y_{r1}..y_d - z_{r1}^k z_{r1+2}^{x1+1-k}        (x1 >= r1-2)
 *   EQ3star  z_{r1-k} y_{r1}..y_d - balanced split of k               (x1 <  r1-2)
 *   EQ4      z_{r1+2} y_1..y_{r1-1} - z_{r1+3}^{r1}
 *   EQ5      z_{r1+1} y_{r1}..y_d - z_{r1+2}^{x1} z_{r1+3}
 *
 * B is { (i,j) : j-i >= 2, 1 <= i <= r1, j <= r1+3, j != r1+1 } minus the
 * pair (r1, r1+2): its four-case companion is (r1, r1+1) and the resulting
 * binomial z_{r1} z_{r1+2} - z_{r1} z_{r1+1} is not in the toric ideal.
 * build_B(r1, BRule::Literal) keeps the pair so the failure can be audited.
 *
 * EQ3star: the two-branch formula's second branch z_{r1-1}^{k-x1-1} z_{r1}^{2x1+2-k}
 * has a negative exponent once k > 2x1+2 (possible when r1 > 2x1+3). Its
 * tail is the monomial whose k "units" are spread as evenly as possible over
 * x1+1 factors taken from the chain z_{r1+2} (0), z_{r1} (1), z_{r1-1} (2),
 * ...; this agrees with both branches wherever they are defined.
 * eq3star_literal_generator keeps the two-branch formula.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idp/checked.hpp"
#include "idp/error.hpp"
#include "idp/matrix.hpp"
#include "idp/monomial.hpp"
#include "idp/simplex.hpp"

namespace idp {

using PiImage = IntVector;

/// Index helpers for the toric ring of q.
class ToricRing {
public:
    explicit ToricRing(QVector q) : q_(std::move(q)) {}

    const QVector& q() const noexcept { return q_; }
    std::size_t r1() const noexcept { return static_cast<std::size_t>(q_.r1()); }
    std::size_t d() const noexcept { return static_cast<std::size_t>(q_.d()); }
    std::size_t num_z() const noexcept { return r1() + 3; }
    std::size_t num_vars() const noexcept { return num_z() + d(); }
    VariableNames names() const { return {num_z(), d()}; }

    /// Index of z_i, 1-based i.
    std::size_t z(std::size_t i) const {
        if (i < 1 || i > num_z()) throw IndexOutOfRange("z index " + std::to_string(i));
        return i - 1;
    }
    /// Index of y_j, 1-based j.
    std::size_t y(std::size_t j) const {
        if (j < 1 || j > d()) throw IndexOutOfRange("y index " + std::to_string(j));
        return num_z() + j - 1;
    }

    /// Monomial from (variable index, exponent) factors; negative exponents are rejected.
    Monomial monomial(std::initializer_list<std::pair<std::size_t, std::int64_t>> factors) const {
        std::vector<Exponent> e(num_vars(), 0);
        for (auto [idx, pw] : factors) add(e, idx, pw);
        return Monomial(std::move(e));
    }

    /// prod_{j=lo}^{hi} y_j times the given factors.
    Monomial with_y_range(std::size_t lo, std::size_t hi,
                          std::initializer_list<std::pair<std::size_t, std::int64_t>> factors) const {
        std::vector<Exponent> e(num_vars(), 0);
        for (auto [idx, pw] : factors) add(e, idx, pw);
        for (std::size_t j = lo; j <= hi; ++j) add(e, y(j), 1);
        return Monomial(std::move(e));
    }

private:
    void add(std::vector<Exponent>& e, std::size_t idx, std::int64_t pw) const {
        if (idx >= e.size()) throw IndexOutOfRange("variable index " + std::to_string(idx));
        if (pw < 0)
            throw InternalConsistency("negative exponent " + std::to_string(pw) + " on " + names()(idx));
        const std::int64_t v = checked_add(static_cast<std::int64_t>(e[idx]), pw);
        if (v > static_cast<std::int64_t>(UINT32_MAX)) throw OverflowError("exponent exceeds 32 bits");
        e[idx] = static_cast<Exponent>(v);
    }

    QVector q_;
};

inline IntMatrix homogenize(const PointConfiguration& cfg) { return cfg.homogenized(); }

/// A * exponents: the exponent vector of pi(m) in the Laurent ring.
inline PiImage pi_image(const IntMatrix& A, const Monomial& m) {
    if (m.size() != A.cols())
        throw DimensionMismatch("monomial has " + std::to_string(m.size()) + " variables, A has " +
                                std::to_string(A.cols()) + " columns");
    PiImage img(A.rows(), 0);
    for (std::size_t c = 0; c < A.cols(); ++c) {
        if (m[c] == 0) continue;
        const auto e = static_cast<std::int64_t>(m[c]);
        for (std::size_t r = 0; r < A.rows(); ++r) img[r] = checked_add(img[r], checked_mul(A(r, c), e));
    }
    return img;
}

/// pi(lead) = pi(tail) and equal degrees.
inline bool is_toric_member(const IntMatrix& A, const Binomial& b) {
    return b.is_homogeneous() && pi_image(A, b.lead()) == pi_image(A, b.tail());
}

enum class BRule { Corrected, Literal };

/// Pairs (i,j), 1-based z indices, in increasing (i,j) order.
inline std::vector<std::pair<std::size_t, std::size_t>> build_B(std::int64_t r1_in, BRule rule = BRule::Corrected) {
    if (r1_in < 2) throw ParameterOutOfRange("r1 must be >= 2");
    const auto r1 = static_cast<std::size_t>(r1_in);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 1; i <= r1; ++i) {
        for (std::size_t j = i + 2; j <= r1 + 3; ++j) {
            if (j == r1 + 1) continue;
            if (rule == BRule::Corrected && i == r1 && j == r1 + 2) continue;
            out.emplace_back(i, j);
        }
    }
    return out;
}

namespace detail {
inline bool satisfies_literal_B(std::size_t i, std::size_t j, std::size_t r1) {
    return j >= i + 2 && i >= 1 && i <= r1 && j <= r1 + 3 && j != r1 + 1;
}
}  // namespace detail

/// The four-case companion rule applied to any pair meeting the conditions that define B.
inline std::pair<std::size_t, std::size_t> literal_companion(std::size_t i, std::size_t j, std::int64_t r1_in) {
    const auto r1 = static_cast<std::size_t>(r1_in);
    if (r1_in < 2 || !detail::satisfies_literal_B(i, j, r1))
        throw InvalidPair("(" + std::to_string(i) + "," + std::to_string(j) + ") violates the B conditions");
    if (j < r1 + 1) return {(i + j) / 2, (i + j + 1) / 2};
    if (j == r1 + 2) return {(i + j - 1) / 2, (i + j) / 2};
    if (i != r1) return {i + 1, r1 + 1};
    return {r1 + 1, r1 + 2};
}

/// Companion (k,l) of a pair in B.
inline std::pair<std::size_t, std::size_t> companion(std::size_t i, std::size_t j, std::int64_t r1) {
    if (r1 >= 2 && i == static_cast<std::size_t>(r1) && j == static_cast<std::size_t>(r1) + 2)
        throw InvalidPair("(r1, r1+2) is excluded from B");
    return literal_companion(i, j, r1);
}

enum class Origin { Eq1, Eq2, Eq3, Eq3Star, Eq4, Eq5 };

inline std::string_view to_string(Origin o) {
    switch (o) {
        case Origin::Eq1: return "EQ1";
        case Origin::Eq2: return "EQ2";
        case Origin::Eq3: return "EQ3";
        case Origin::Eq3Star: return "EQ3star";
        case Origin::Eq4: return "EQ4";
        case Origin::Eq5: return "EQ5";
    }
    return "?";
}

struct Generator {
    Origin origin;
    std::size_t param;  // k for EQ2/EQ3/EQ3star, position in B for EQ1, 0 otherwise
    Binomial binomial;
};

struct BPair {
    std::size_t i, j, k, l;
};

// Individual generators. Each throws InternalConsistency if its formula yields a negative exponent.

inline Binomial eq1_generator(const ToricRing& R, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return Binomial(R.monomial({{R.z(i), 1}, {R.z(j), 1}}), R.monomial({{R.z(k), 1}, {R.z(l), 1}}));
}

inline Binomial eq2_generator(const ToricRing& R, std::int64_t k) {
    const auto r1 = static_cast<std::int64_t>(R.r1());
    return Binomial(R.with_y_range(1, R.r1() - 1, {{R.z(static_cast<std::size_t>(k) + 1), 1}}),
                    R.monomial({{R.z(R.r1() + 1), r1 - k}, {R.z(R.r1() + 3), k}}));
}

inline Monomial eq3_lead(const ToricRing& R, std::int64_t k) {
    return R.with_y_range(R.r1(), R.d(), {{R.z(R.r1() - static_cast<std::size_t>(k)), 1}});
}

inline Binomial eq3_generator(const ToricRing& R, std::int64_t k) {
    const std::int64_t x1 = R.q().x1();
    return Binomial(eq3_lead(R, k), R.monomial({{R.z(R.r1()), k}, {R.z(R.r1() + 2), x1 + 1 - k}}));
}

inline Binomial eq3star_literal_generator(const ToricRing& R, std::int64_t k) {
    const std::int64_t x1 = R.q().x1();
    if (k <= x1 + 1) return eq3_generator(R, k);
    return Binomial(eq3_lead(R, k),
                    R.monomial({{R.z(R.r1() - 1), k - x1 - 1}, {R.z(R.r1()), 2 * x1 + 2 - k}}));
}

inline Binomial eq3star_generator(const ToricRing& R, std::int64_t k) {
    const std::int64_t parts = R.q().x1() + 1;
    const std::int64_t lo = k / parts;
    const std::int64_t rem = k % parts;
    // Chain level c: 0 -> z_{r1+2}, c >= 1 -> z_{r1-c+1}.
    auto level = [&](std::int64_t c) {
        if (c == 0) return R.z(R.r1() + 2);
        if (c > static_cast<std::int64_t>(R.r1())) throw InternalConsistency("balanced split ran past z_1");
        return R.z(R.r1() - static_cast<std::size_t>(c) + 1);
    };
    std::vector<Exponent> e(R.num_vars(), 0);
    e[level(lo)] += static_cast<Exponent>(parts - rem);
    if (rem > 0) e[level(lo + 1)] += static_cast<Exponent>(rem);
    return Binomial(eq3_lead(R, k), Monomial(std::move(e)));
}

inline Binomial eq4_generator(const ToricRing& R) {
    return Binomial(R.with_y_range(1, R.r1() - 1, {{R.z(R.r1() + 2), 1}}),
                    R.monomial({{R.z(R.r1() + 3), static_cast<std::int64_t>(R.r1())}}));
}

inline Binomial eq5_generator(const ToricRing& R) {
    return Binomial(R.with_y_range(R.r1(), R.d(), {{R.z(R.r1() + 1), 1}}),
                    R.monomial({{R.z(R.r1() + 2), R.q().x1()}, {R.z(R.r1() + 3), 1}}));
}

enum class Eq3Rule { Auto, Plain, Star, StarLiteral };

struct FamilyOptions {
    BRule b_rule = BRule::Corrected;
    Eq3Rule eq3 = Eq3Rule::Auto;
};

struct GroebnerFamily {
    QVector q;
    std::vector<Generator> generators;
    std::vector<BPair> pairs;

    std::size_t num_vars() const noexcept { return q.num_points(); }

    std::vector<Binomial> binomials() const {
        std::vector<Binomial> out;
        out.reserve(generators.size());
        for (const auto& g : generators) out.push_back(g.binomial);
        return out;
    }

    std::size_t count(Origin o) const {
        std::size_t n = 0;
        for (const auto& g : generators) n += g.origin == o;
        return n;
    }
};

struct AuditFailure {
    std::size_t index;
    std::string reason;
};

/// Checks every generator for homogeneity, pi-balance and lex orientation.
inline std::optional<AuditFailure> audit_family(const std::vector<Generator>& gens, const IntMatrix& A) {
    for (std::size_t idx = 0; idx < gens.size(); ++idx) {
        const Binomial& b = gens[idx].binomial;
        if (b.num_vars() != A.cols()) return AuditFailure{idx, "variable count does not match A"};
        if (!b.is_homogeneous()) return AuditFailure{idx, "not homogeneous"};
        if (pi_image(A, b.lead()) != pi_image(A, b.tail())) return AuditFailure{idx, "not pi-balanced"};
        if (lex_cmp(b.lead(), b.tail()) != Cmp::Greater) return AuditFailure{idx, "lead is not lex-larger than tail"};
    }
    return std::nullopt;
}

inline GroebnerFamily groebner_family(const QVector& q, const FamilyOptions& opts = {}) {
    const ToricRing R(q);
    const std::int64_t r1 = q.r1();
    GroebnerFamily fam{q, {}, {}};

    const auto B = build_B(r1, opts.b_rule);
    for (std::size_t p = 0; p < B.size(); ++p) {
        const auto [i, j] = B[p];
        const auto [k, l] = literal_companion(i, j, r1);
        fam.pairs.push_back({i, j, k, l});
        fam.generators.push_back({Origin::Eq1, p, eq1_generator(R, i, j, k, l)});
    }
    for (std::int64_t k = 0; k < r1; ++k)
        fam.generators.push_back({Origin::Eq2, static_cast<std::size_t>(k), eq2_generator(R, k)});

    Eq3Rule rule = opts.eq3;
    if (rule == Eq3Rule::Auto) rule = q.x1() >= r1 - 2 ? Eq3Rule::Plain : Eq3Rule::Star;
    for (std::int64_t k = 0; k < r1; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        switch (rule) {
            case Eq3Rule::Plain: fam.generators.push_back({Origin::Eq3, kk, eq3_generator(R, k)}); break;
            case Eq3Rule::Star: fam.generators.push_back({Origin::Eq3Star, kk, eq3star_generator(R, k)}); break;
            case Eq3Rule::StarLiteral:
                fam.generators.push_back({Origin::Eq3Star, kk, eq3star_literal_generator(R, k)});
                break;
            case Eq3Rule::Auto: break;
        }
    }
    fam.generators.push_back({Origin::Eq4, 0, eq4_generator(R)});
    fam.generators.push_back({Origin::Eq5, 0, eq5_generator(R)});

    const IntMatrix A = lattice_points_formula(q).homogenized();
    if (auto bad = audit_family(fam.generators, A)) {
        const auto& g = fam.generators[bad->index];
        throw InternalConsistency(std::string(to_string(g.origin)) + " generator " +
                                  to_text(g.binomial, R.names()) + ": " + bad->reason);
    }
    return fam;
}

}  // namespace idp
