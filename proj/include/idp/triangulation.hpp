#pragma once

/*
 * The triangulation induced by a squarefree initial ideal.
 *
 * Non-faces of the initial complex are the supports of the minimal
 * generators; its facets are the maximal faces. With a squarefree initial
 * ideal of the toric ideal, the facets form the regular triangulation of A
 * given by lifting column p to height w_p for any weight vector w that
 * selects the same leads. A facet F of that triangulation is exactly a
 * (d+1)-set whose affine interpolant psi_F of the heights lies strictly
 * below every other lifted point.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idp/bareiss.hpp"
#include "idp/error.hpp"
#include "idp/groebner.hpp"
#include "idp/matrix.hpp"
#include "idp/monomial.hpp"
#include "idp/simplex.hpp"

namespace idp {

using Facet = std::vector<std::size_t>;

/// Maximal subsets of {0..n-1} containing no generator support, each required to have dim elements.
/// Facets come out in lexicographic order of their sorted index lists.
inline std::vector<Facet> initial_complex(const InitialIdeal& I, std::size_t n, std::size_t dim) {
    if (!I.squarefree) throw InternalConsistency("initial complex needs a squarefree initial ideal");
    std::vector<std::vector<std::size_t>> nonfaces;
    for (const auto& g : I.generators) {
        if (g.size() != n) throw DimensionMismatch("initial ideal generator has wrong variable count");
        nonfaces.push_back(g.support());
    }

    std::vector<bool> in(n, false);
    auto is_face_with = [&](std::size_t v) {
        in[v] = true;
        bool ok = true;
        for (const auto& nf : nonfaces) {
            if (std::all_of(nf.begin(), nf.end(), [&](std::size_t i) { return in[i]; })) {
                ok = false;
                break;
            }
        }
        in[v] = false;
        return ok;
    };

    std::vector<Facet> facets;
    Facet current;
    // Include-first backtracking. A leaf is kept only if no excluded vertex can be added back.
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == n) {
            for (std::size_t u = 0; u < n; ++u)
                if (!in[u] && is_face_with(u)) return;
            if (current.size() != dim)
                throw NonPureComplex("maximal face of size " + std::to_string(current.size()) + ", expected " +
                                     std::to_string(dim));
            facets.push_back(current);
            return;
        }
        if (is_face_with(v)) {
            in[v] = true;
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
            in[v] = false;
        }
        self(self, v + 1);
    };
    rec(rec, 0);
    return facets;
}

/// |det| of the selected columns of A.
inline BigInt facet_volume(const IntMatrix& A, const Facet& facet) {
    if (facet.size() != A.rows())
        throw DimensionMismatch("facet has " + std::to_string(facet.size()) + " vertices, expected " +
                                std::to_string(A.rows()));
    BigInt det = determinant(A.select_columns(facet));
    if (det == 0) throw SingularFacet("facet columns are affinely dependent");
    return det < 0 ? BigInt(-det) : det;
}

struct Triangulation {
    std::vector<Facet> facets;
    std::vector<BigInt> volumes;
    std::int64_t target_volume = 0;  // N(q)

    BigInt volume_sum() const {
        BigInt s = 0;
        for (const auto& v : volumes) s += v;
        return s;
    }
};

inline Triangulation make_triangulation(const IntMatrix& A, std::vector<Facet> facets, std::int64_t target_volume) {
    Triangulation T;
    T.target_volume = target_volume;
    T.volumes.reserve(facets.size());
    for (const auto& f : facets) T.volumes.push_back(facet_volume(A, f));
    T.facets = std::move(facets);
    return T;
}

inline bool verify_unimodular(const Triangulation& T) {
    const bool unit = std::all_of(T.volumes.begin(), T.volumes.end(), [](const BigInt& v) { return v == 1; });
    return unit && T.volume_sum() == T.target_volume;
}

/// Heights w_p per column; they must order every generator like the term order.
struct WeightCertificate {
    std::vector<BigInt> weights;
    BigInt base = 0;
};

inline BigInt weight_of(const WeightCertificate& w, const Monomial& m) {
    if (m.size() != w.weights.size()) throw DimensionMismatch("weight vector length mismatch");
    BigInt s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += w.weights[i] * m[i];
    return s;
}

inline bool separates(const WeightCertificate& w, const Binomial& b) {
    return weight_of(w, b.lead()) > weight_of(w, b.tail());
}

/// weights_i = M^(n-1-i) with M = 1 + max generator degree, doubling M until every lead outweighs its tail.
inline WeightCertificate make_weight_certificate(const std::vector<Binomial>& gens, unsigned max_retries = 8) {
    if (gens.empty()) throw CertificateFailure("empty generator set");
    const std::size_t n = gens.front().num_vars();
    std::uint64_t maxdeg = 0;
    for (const auto& g : gens) maxdeg = std::max({maxdeg, g.lead().degree(), g.tail().degree()});

    BigInt M = maxdeg + 1;
    for (unsigned attempt = 0; attempt <= max_retries; ++attempt, M *= 2) {
        WeightCertificate w;
        w.base = M;
        w.weights.assign(n, 0);
        BigInt p = 1;
        for (std::size_t i = n; i-- > 0;) {
            w.weights[i] = p;
            p *= M;
        }
        if (std::all_of(gens.begin(), gens.end(), [&](const Binomial& g) { return separates(w, g); })) return w;
    }
    throw CertificateFailure("no lex-compatible weight vector after " + std::to_string(max_retries) + " retries");
}

inline WeightCertificate make_weight_certificate(const GroebnerFamily& G) {
    return make_weight_certificate(G.binomials());
}

/// Coefficients c with c . a_j = w_j for every column j of the facet; nullopt if singular.
inline std::optional<std::vector<Rational>> interpolate_heights(const IntMatrix& A, const WeightCertificate& w,
                                                                const Facet& facet) {
    const std::size_t n = A.rows();
    if (facet.size() != n) throw DimensionMismatch("facet size does not match the row count of A");
    Matrix<Rational> M(n, n);
    std::vector<Rational> rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) M(r, k) = A(k, facet[r]);
        rhs[r] = Rational(w.weights.at(facet[r]));
    }
    return solve_rational(std::move(M), std::move(rhs));
}

/// w_p - psi_F(a_p).
inline Rational lifted_gap(const IntMatrix& A, const WeightCertificate& w, const std::vector<Rational>& psi,
                           std::size_t p) {
    Rational v = 0;
    for (std::size_t k = 0; k < A.rows(); ++k) v += psi[k] * A(k, p);
    return Rational(w.weights.at(p)) - v;
}

enum class LiftSide { Strict, Degenerate, Below };

/// Strict: every other lifted point is above psi. Below: some point is under it. Degenerate: otherwise.
inline LiftSide classify_facet(const IntMatrix& A, const WeightCertificate& w, const std::vector<Rational>& psi,
                               const Facet& facet) {
    bool touching = false;
    for (std::size_t p = 0; p < A.cols(); ++p) {
        if (std::find(facet.begin(), facet.end(), p) != facet.end()) continue;
        const Rational gap = lifted_gap(A, w, psi, p);
        if (gap < 0) return LiftSide::Below;
        if (gap == 0) touching = true;
    }
    return touching ? LiftSide::Degenerate : LiftSide::Strict;
}

/// True iff every facet's interpolant lies strictly below all other lifted points.
/// Throws DegenerateLift when a point lies exactly on a facet's lifted hyperplane.
inline bool regularity_check(const Triangulation& T, const WeightCertificate& w, const IntMatrix& A) {
    if (w.weights.size() != A.cols()) throw DimensionMismatch("weight vector length differs from column count");
    for (const auto& F : T.facets) {
        const auto psi = interpolate_heights(A, w, F);
        if (!psi) throw SingularFacet("facet columns are affinely dependent");
        switch (classify_facet(A, w, *psi, F)) {
            case LiftSide::Below: return false;
            case LiftSide::Degenerate: throw DegenerateLift("a column lies on a lifted facet hyperplane");
            case LiftSide::Strict: break;
        }
    }
    return true;
}

/// Lower facets of the lifted configuration found by trying every (d+1)-subset. Small cases only.
inline std::vector<Facet> lower_envelope_facets(const IntMatrix& A, const WeightCertificate& w,
                                                std::size_t max_dim = 4) {
    const std::size_t k = A.rows();
    const std::size_t n = A.cols();
    if (k == 0 || k - 1 > max_dim) throw ParameterOutOfRange("lower envelope oracle limited to small dimension");
    std::vector<Facet> out;
    Facet sub;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (sub.size() == k) {
            if (determinant(A.select_columns(sub)) == 0) return;
            const auto psi = interpolate_heights(A, w, sub);
            switch (classify_facet(A, w, *psi, sub)) {
                case LiftSide::Below: return;
                case LiftSide::Degenerate: throw DegenerateLift("heights are not generic");
                case LiftSide::Strict: out.push_back(sub); break;
            }
            return;
        }
        for (std::size_t v = start; v + (k - sub.size()) <= n; ++v) {
            sub.push_back(v);
            self(self, v + 1);
            sub.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace idp
