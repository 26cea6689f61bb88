#pragma once

/*
 * Binomial Groebner basis machinery: reduction, S-pairs, the Buchberger
 * criterion, initial ideals, standard monomials and the standard-monomial
 * injectivity test.
 *
 * Binomials carry coefficients +1/-1 only, so reduction acts term-wise: a
 * binomial u - v reduces to zero iff the normal forms of u and v coincide.
 * The resulting checks are independent of the coefficient field.
 */

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "idp/ehrhart.hpp"
#include "idp/error.hpp"
#include "idp/monomial.hpp"
#include "idp/toric.hpp"

namespace idp {

/// Rewrites monomials with a fixed binomial set. The applicable generator with the lex-largest lead
/// wins; ties go to the lower construction index.
class Reducer {
public:
    explicit Reducer(std::vector<Binomial> gens) : gens_(std::move(gens)), order_(gens_.size()) {
        for (const auto& g : gens_) {
            if (lex_cmp(g.lead(), g.tail()) != Cmp::Greater)
                throw InternalConsistency("reducer generator whose lead is not lex-larger than its tail");
        }
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            return lex_cmp(gens_[a].lead(), gens_[b].lead()) == Cmp::Greater;
        });
    }

    const std::vector<Binomial>& generators() const noexcept { return gens_; }

    /// Index of the generator used to rewrite m, or nullopt if m is standard.
    std::optional<std::size_t> pick(const Monomial& m) const {
        for (std::size_t idx : order_)
            if (gens_[idx].lead().divides(m)) return idx;
        return std::nullopt;
    }

    bool is_standard(const Monomial& m) const { return !pick(m).has_value(); }

    /// Each step replaces lead(g) by tail(g), strictly decreasing m in lex.
    Monomial normal_form(Monomial m) const {
        while (auto idx = pick(m)) {
            const Binomial& g = gens_[*idx];
            m = (m / g.lead()) * g.tail();
        }
        return m;
    }

private:
    std::vector<Binomial> gens_;
    std::vector<std::size_t> order_;
};

inline Monomial normal_form(const Monomial& m, const GroebnerFamily& G) {
    return Reducer(G.binomials()).normal_form(m);
}

/// (lcm/lead1)*tail1 - (lcm/lead2)*tail2, lex-oriented; nullopt when the two terms coincide.
inline std::optional<Binomial> s_polynomial(const Binomial& g1, const Binomial& g2) {
    const Monomial l = g1.lead().lcm(g2.lead());
    Monomial u = (l / g1.lead()) * g1.tail();
    Monomial v = (l / g2.lead()) * g2.tail();
    if (u == v) return std::nullopt;
    return Binomial::oriented(std::move(u), std::move(v));
}

struct BuchbergerOptions {
    /// Skip pairs with coprime leads (Buchberger's first criterion). Off for verification runs.
    bool skip_coprime = false;
    unsigned threads = 1;
};

struct BuchbergerReport {
    std::size_t num_generators = 0;
    std::size_t spairs_total = 0;
    std::size_t reduced_to_zero = 0;
    std::size_t skipped_coprime = 0;
    std::vector<std::pair<std::size_t, std::size_t>> failures;  // generator index pairs, sorted

    bool pass() const { return failures.empty(); }
};

inline BuchbergerReport buchberger_verify(const std::vector<Binomial>& gens, const BuchbergerOptions& opts = {}) {
    const Reducer red(gens);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) pairs.emplace_back(a, b);

    // 0 = reduced to zero, 1 = skipped, 2 = nonzero remainder
    std::vector<unsigned char> outcome(pairs.size(), 0);
    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t p = begin; p < pairs.size(); p += stride) {
            const Binomial& g1 = gens[pairs[p].first];
            const Binomial& g2 = gens[pairs[p].second];
            if (opts.skip_coprime && g1.lead().coprime(g2.lead())) {
                outcome[p] = 1;
                continue;
            }
            const auto s = s_polynomial(g1, g2);
            if (!s) continue;
            outcome[p] = red.normal_form(s->lead()) == red.normal_form(s->tail()) ? 0 : 2;
        }
    };
    const unsigned nthreads = std::max(1u, opts.threads);
    if (nthreads == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t, nthreads);
    }

    BuchbergerReport rep;
    rep.num_generators = gens.size();
    rep.spairs_total = pairs.size();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (outcome[p] == 0) ++rep.reduced_to_zero;
        else if (outcome[p] == 1) ++rep.skipped_coprime;
        else rep.failures.push_back(pairs[p]);
    }
    return rep;
}

inline BuchbergerReport buchberger_verify(const GroebnerFamily& G, const BuchbergerOptions& opts = {}) {
    return buchberger_verify(G.binomials(), opts);
}

/// Minimal generators of the monomial ideal spanned by the leads.
struct InitialIdeal {
    std::vector<Monomial> generators;
    bool squarefree = true;
};

inline InitialIdeal initial_ideal(const std::vector<Binomial>& gens) {
    std::vector<Monomial> leads;
    for (const auto& g : gens)
        if (std::find(leads.begin(), leads.end(), g.lead()) == leads.end()) leads.push_back(g.lead());
    InitialIdeal I;
    for (std::size_t a = 0; a < leads.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < leads.size() && minimal; ++b)
            if (a != b && leads[b].divides(leads[a])) minimal = false;
        if (minimal) I.generators.push_back(leads[a]);
    }
    I.squarefree = std::all_of(I.generators.begin(), I.generators.end(),
                               [](const Monomial& m) { return m.is_squarefree(); });
    return I;
}

inline InitialIdeal initial_ideal(const GroebnerFamily& G) { return initial_ideal(G.binomials()); }

struct MonomialBudget {
    std::uint64_t max_nodes = 10'000'000;
};

/// Degree-`degree` monomials in `num_vars` variables divisible by none of `leads`, in lex-descending order.
inline std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leads, std::size_t num_vars,
                                                std::size_t degree, const MonomialBudget& budget = {}) {
    std::vector<Monomial> out;
    std::vector<Exponent> e(num_vars, 0);
    std::uint64_t nodes = 0;

    auto divisible = [&](const std::vector<Exponent>& v) {
        for (const auto& l : leads) {
            bool div = true;
            for (std::size_t i = 0; i < num_vars && div; ++i) div = l[i] <= v[i];
            if (div) return true;
        }
        return false;
    };

    // A prefix divisible by a lead only grows, so such branches are pruned.
    auto rec = [&](auto&& self, std::size_t var, std::size_t rem) -> void {
        if (++nodes > budget.max_nodes)
            throw BudgetExceeded("standard monomial enumeration exceeded " + std::to_string(budget.max_nodes) + " nodes");
        if (var + 1 == num_vars || rem == 0) {
            if (num_vars == 0 && rem > 0) return;
            if (num_vars > 0) e[var] = static_cast<Exponent>(rem);
            if (!divisible(e)) out.emplace_back(e);
            if (num_vars > 0) e[var] = 0;
            return;
        }
        for (std::size_t k = rem + 1; k-- > 0;) {
            e[var] = static_cast<Exponent>(k);
            if (!divisible(e)) self(self, var + 1, rem - k);
        }
        e[var] = 0;
    };
    if (num_vars == 0) {
        if (degree == 0) out.emplace_back(std::vector<Exponent>{});
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

inline std::vector<Monomial> standard_monomials(const GroebnerFamily& G, std::size_t degree,
                                                const MonomialBudget& budget = {}) {
    return standard_monomials(initial_ideal(G).generators, G.num_vars(), degree, budget);
}

struct DegreeStat {
    std::size_t degree = 0;
    std::size_t standard = 0;      // number of standard monomials
    std::size_t distinct = 0;      // number of distinct pi-images among them
    std::int64_t ehrhart = 0;      // L(degree)
};

struct InjectivityReport {
    std::vector<DegreeStat> degrees;

    bool pass() const {
        return std::all_of(degrees.begin(), degrees.end(), [](const DegreeStat& s) {
            return s.distinct == s.standard && static_cast<std::int64_t>(s.standard) == s.ehrhart;
        });
    }
};

struct PiImageHash {
    std::size_t operator()(const PiImage& v) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
        return h;
    }
};

/// For each degree t <= max_degree: pi is injective on standard monomials of degree t, and their number
/// equals L(t). Together these certify the Groebner property of the family for the toric ideal in
/// those degrees.
inline InjectivityReport injectivity_report(const GroebnerFamily& G, const IntMatrix& A, std::size_t max_degree,
                                            const MonomialBudget& budget = {}) {
    const HStarVector h = hstar(G.q);
    const auto leads = initial_ideal(G).generators;
    InjectivityReport rep;
    for (std::size_t t = 0; t <= max_degree; ++t) {
        const auto std_monos = standard_monomials(leads, G.num_vars(), t, budget);
        std::unordered_set<PiImage, PiImageHash> images;
        for (const auto& m : std_monos) images.insert(pi_image(A, m));
        rep.degrees.push_back({t, std_monos.size(), images.size(), ehrhart_value(h, static_cast<std::int64_t>(t))});
    }
    return rep;
}

inline bool injectivity_check(const GroebnerFamily& G, const IntMatrix& A, std::size_t max_degree,
                              const MonomialBudget& budget = {}) {
    return injectivity_report(G, A, max_degree, budget).pass();
}

enum class ShapeCase { None, Case1, Case2, Case3, Violation };

inline std::string_view to_string(ShapeCase c) {
    switch (c) {
        case ShapeCase::None: return "none";
        case ShapeCase::Case1: return "case1";
        case ShapeCase::Case2: return "case2";
        case ShapeCase::Case3: return "case3";
        case ShapeCase::Violation: return "violation";
    }
    return "?";
}

struct SupportShape {
    std::vector<std::size_t> zsupp;  // 1-based z indices
    std::size_t min_index = 0;       // m; 0 when zsupp is empty
    ShapeCase shape = ShapeCase::None;
};

/// z-support of a standard monomial and the support pattern it falls under:
///   case1: 1 <= m <= r1-1, zsupp within {m, m+1, r1+1}
///   case2: m = r1,         zsupp within {r1, r1+1, r1+2}
///   case3: m >= r1+1       (nothing below m)
inline SupportShape zsupport_shape(const Monomial& m, std::int64_t r1_in) {
    const auto r1 = static_cast<std::size_t>(r1_in);
    if (m.size() < r1 + 3) throw DimensionMismatch("monomial has fewer than r1+3 variables");
    SupportShape s;
    for (std::size_t i = 1; i <= r1 + 3; ++i)
        if (m[i - 1] > 0) s.zsupp.push_back(i);
    if (s.zsupp.empty()) return s;
    s.min_index = s.zsupp.front();
    const std::size_t mi = s.min_index;

    auto within = [&](std::initializer_list<std::size_t> allowed) {
        return s.zsupp.size() <= 3 && std::all_of(s.zsupp.begin(), s.zsupp.end(), [&](std::size_t i) {
                   return std::find(allowed.begin(), allowed.end(), i) != allowed.end();
               });
    };
    if (mi <= r1 - 1) s.shape = within({mi, mi + 1, r1 + 1}) ? ShapeCase::Case1 : ShapeCase::Violation;
    else if (mi == r1) s.shape = within({r1, r1 + 1, r1 + 2}) ? ShapeCase::Case2 : ShapeCase::Violation;
    else s.shape = s.zsupp.size() <= 3 ? ShapeCase::Case3 : ShapeCase::Violation;
    return s;
}

}  // namespace idp
