#pragma once

/*
 * End-to-end verification runs shared by the command line tool, the sweep
 * and the acceptance suite. Each report knows its process exit code:
 *   0 pass, 1 usage/parameter error, 2 verification failure, 3 budget exceeded.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "idp/ehrhart.hpp"
#include "idp/error.hpp"
#include "idp/groebner.hpp"
#include "idp/simplex.hpp"
#include "idp/toric.hpp"
#include "idp/triangulation.hpp"

namespace idp {

namespace exit_code {
inline constexpr int pass = 0;
inline constexpr int usage = 1;
inline constexpr int verification = 2;
inline constexpr int budget = 3;
}  // namespace exit_code

// ---------------------------------------------------------------- points

struct PointsReport {
    PointConfiguration config;
    std::optional<std::size_t> bruteforce_count;  // set when verified
    bool match = true;

    int exit_code() const { return match ? exit_code::pass : exit_code::verification; }
};

inline PointsReport run_points(const QVector& q, bool verify, const EnumerationBudget& budget = {}) {
    PointsReport rep{lattice_points_formula(q), std::nullopt, true};
    if (!verify) return rep;
    const auto brute = lattice_points_bruteforce(q, budget);
    const std::set<IntVector> formula(rep.config.columns().begin(), rep.config.columns().end());
    rep.bruteforce_count = brute.size();
    rep.match = formula == brute && rep.config.size() == q.num_points();
    return rep;
}

// ---------------------------------------------------------------- h*

struct DilationCheck {
    std::int64_t t = 0;
    std::int64_t formula = 0;
    std::optional<std::int64_t> bruteforce;  // nullopt when the budget did not permit it
};

struct HStarReport {
    QVector q;
    HStarVector h;
    bool verified = false;
    bool sum_ok = true, h0_ok = true, h1_ok = true, unimodal = true;
    std::vector<DilationCheck> dilations;

    bool pass() const {
        return sum_ok && h0_ok && h1_ok && unimodal &&
               std::all_of(dilations.begin(), dilations.end(),
                           [](const DilationCheck& c) { return !c.bruteforce || *c.bruteforce == c.formula; });
    }
    int exit_code() const { return pass() ? exit_code::pass : exit_code::verification; }
};

inline HStarReport run_hstar(const QVector& q, bool verify, std::int64_t max_t = 2,
                             const EnumerationBudget& budget = {}) {
    HStarReport rep{q, hstar(q)};
    if (!verify) return rep;
    rep.verified = true;
    rep.sum_ok = rep.h.sum() == q.volume();
    rep.h0_ok = rep.h.coeffs.at(0) == 1;
    rep.h1_ok = rep.h.coeffs.at(1) == q.r1() + 2;
    rep.unimodal = rep.h.is_unimodal();
    for (std::int64_t t = 0; t <= max_t; ++t) {
        DilationCheck c{t, ehrhart_value(rep.h, t), std::nullopt};
        try {
            c.bruteforce = ehrhart_bruteforce(q, t, budget);
        } catch (const BudgetExceeded&) {
        }
        rep.dilations.push_back(c);
    }
    return rep;
}

// ---------------------------------------------------------------- Groebner family

/// Moves one unit of the tail's first variable to the next variable. Degree is kept; pi-balance is
/// broken because the columns of A are pairwise distinct.
inline Binomial sabotage_tail(const Binomial& g) {
    const std::size_t n = g.num_vars();
    const auto supp = g.tail().support();
    const std::size_t from = supp.empty() ? 0 : supp.front();
    for (std::size_t step = 1; step < n; ++step) {
        std::vector<Exponent> e = g.tail().exponents();
        if (e[from] == 0) break;
        --e[from];
        ++e[(from + step) % n];
        Monomial t(std::move(e));
        if (t != g.lead()) return Binomial(g.lead(), std::move(t));
    }
    throw InternalConsistency("could not mutate generator tail");
}

struct GbVerifyOptions {
    std::size_t max_degree = 3;
    BuchbergerOptions buchberger;
    MonomialBudget budget;
};

struct GbVerifyReport {
    QVector q;
    std::size_t num_generators = 0;
    std::optional<BuchbergerReport> buchberger;
    bool squarefree = false;
    std::size_t injectivity_max_degree = 0;
    std::optional<InjectivityReport> injectivity;
    bool budget_exceeded = false;

    // Failure locus, when any.
    std::string failure_stage;
    std::string failure_detail;

    bool pass() const { return failure_stage.empty(); }
    int exit_code() const {
        if (pass()) return exit_code::pass;
        return budget_exceeded ? exit_code::budget : exit_code::verification;
    }
};

/// Audit, Buchberger, squarefreeness and injectivity, in that order; stops at the first failing stage.
inline GbVerifyReport verify_family(const GroebnerFamily& G, const GbVerifyOptions& opts = {}) {
    GbVerifyReport rep{G.q};
    rep.num_generators = G.generators.size();
    rep.injectivity_max_degree = opts.max_degree;
    const ToricRing R(G.q);
    const IntMatrix A = lattice_points_formula(G.q).homogenized();

    if (auto bad = audit_family(G.generators, A)) {
        rep.failure_stage = "pi_balance";
        rep.failure_detail = "generator " + std::to_string(bad->index) + " (" +
                             to_text(G.generators[bad->index].binomial, R.names()) + "): " + bad->reason;
        return rep;
    }

    rep.buchberger = buchberger_verify(G, opts.buchberger);
    if (!rep.buchberger->pass()) {
        const auto [a, b] = rep.buchberger->failures.front();
        rep.failure_stage = "buchberger";
        rep.failure_detail = "S-pair (" + std::to_string(a) + "," + std::to_string(b) + ") has a nonzero remainder";
        return rep;
    }

    const InitialIdeal I = initial_ideal(G);
    rep.squarefree = I.squarefree;
    if (!rep.squarefree) {
        rep.failure_stage = "squarefree";
        rep.failure_detail = "initial ideal has a non-squarefree generator";
        return rep;
    }

    try {
        rep.injectivity = injectivity_report(G, A, opts.max_degree, opts.budget);
    } catch (const BudgetExceeded& e) {
        rep.budget_exceeded = true;
        rep.failure_stage = "injectivity";
        rep.failure_detail = e.what();
        return rep;
    }
    if (!rep.injectivity->pass()) {
        for (const auto& s : rep.injectivity->degrees) {
            if (s.distinct == s.standard && static_cast<std::int64_t>(s.standard) == s.ehrhart) continue;
            rep.failure_stage = "injectivity";
            rep.failure_detail = "degree " + std::to_string(s.degree) + ": " + std::to_string(s.standard) +
                                 " standard monomials, " + std::to_string(s.distinct) + " distinct images, L(t) = " +
                                 std::to_string(s.ehrhart);
            break;
        }
    }
    return rep;
}

struct GbRunOptions {
    FamilyOptions family;
    GbVerifyOptions verify;
    std::optional<std::size_t> mutate_tail;  // sabotage: generator index whose tail is mutated
};

/// Builds the family (construction failures become a "construction" failure) and verifies it.
inline GbVerifyReport run_gb_verify(const QVector& q, const GbRunOptions& opts = {}) {
    GroebnerFamily G{q, {}, {}};
    try {
        G = groebner_family(q, opts.family);
    } catch (const InternalConsistency& e) {
        GbVerifyReport rep{q};
        rep.injectivity_max_degree = opts.verify.max_degree;
        rep.failure_stage = "construction";
        rep.failure_detail = e.what();
        return rep;
    }
    if (opts.mutate_tail) {
        if (*opts.mutate_tail >= G.generators.size())
            throw ParameterOutOfRange("generator index " + std::to_string(*opts.mutate_tail) + " out of range");
        auto& g = G.generators[*opts.mutate_tail];
        g.binomial = sabotage_tail(g.binomial);
    }
    return verify_family(G, opts.verify);
}

// ---------------------------------------------------------------- triangulation

struct TriangulateOptions {
    std::optional<std::size_t> drop_facet;  // sabotage: remove this facet before verification
};

struct TriangulationReport {
    QVector q;
    Triangulation triangulation;
    bool all_unimodular = false;
    bool volume_ok = false;
    bool regular_certified = false;
    std::optional<WeightCertificate> certificate;
    std::string failure_stage;
    std::string failure_detail;

    bool pass() const { return failure_stage.empty(); }
    int exit_code() const { return pass() ? exit_code::pass : exit_code::verification; }
};

inline TriangulationReport run_triangulate(const GroebnerFamily& G, const TriangulateOptions& opts = {}) {
    TriangulationReport rep{G.q};
    const IntMatrix A = lattice_points_formula(G.q).homogenized();
    auto fail = [&](std::string stage, std::string detail) {
        if (rep.failure_stage.empty()) {
            rep.failure_stage = std::move(stage);
            rep.failure_detail = std::move(detail);
        }
    };
    try {
        const InitialIdeal I = initial_ideal(G);
        auto facets = initial_complex(I, G.num_vars(), static_cast<std::size_t>(G.q.d()) + 1);
        if (opts.drop_facet) {
            if (*opts.drop_facet >= facets.size())
                throw ParameterOutOfRange("facet index " + std::to_string(*opts.drop_facet) + " out of range");
            facets.erase(facets.begin() + static_cast<std::ptrdiff_t>(*opts.drop_facet));
        }
        rep.triangulation = make_triangulation(A, std::move(facets), G.q.volume());
        const auto& T = rep.triangulation;
        rep.all_unimodular = std::all_of(T.volumes.begin(), T.volumes.end(), [](const BigInt& v) { return v == 1; });
        rep.volume_ok = T.volume_sum() == T.target_volume;
        if (!rep.all_unimodular) fail("unimodular", "a facet has normalized volume > 1");
        if (!rep.volume_ok)
            fail("volume", "facet volumes sum to " + T.volume_sum().str() + ", expected " + std::to_string(T.target_volume));

        rep.certificate = make_weight_certificate(G);
        rep.regular_certified = regularity_check(T, *rep.certificate, A);
        if (!rep.regular_certified) fail("regularity", "a lifted point lies below a facet's interpolating hyperplane");
    } catch (const NonPureComplex& e) {
        fail("purity", e.what());
    } catch (const SingularFacet& e) {
        fail("volume", e.what());
    } catch (const CertificateFailure& e) {
        fail("certificate", e.what());
    } catch (const DegenerateLift& e) {
        fail("regularity", e.what());
    }
    return rep;
}

// ---------------------------------------------------------------- sweep

struct PointTimings {
    std::int64_t points_ms = 0, hstar_ms = 0, gb_ms = 0, triangulation_ms = 0;
};

struct SweepPoint {
    std::int64_t r1 = 0, x1 = 0;
    bool latticePointsOK = false;
    bool hstarOK = false;
    bool gbConstructed = false;
    bool buchbergerPass = false;
    bool squarefree = false;
    bool injectivityPass = false;
    bool supportShapeOK = false;
    bool triangulationUnimodular = false;
    bool regularCertified = false;
    bool budgetExceeded = false;
    std::string error;
    PointTimings timings;

    bool pass() const {
        return latticePointsOK && hstarOK && gbConstructed && buchbergerPass && squarefree && injectivityPass &&
               supportShapeOK && triangulationUnimodular && regularCertified;
    }
};

struct SweepOptions {
    std::size_t max_degree = 3;
    unsigned jobs = 1;
    bool fail_fast = false;
    EnumerationBudget budget;
    MonomialBudget monomial_budget;
};

struct SweepReport {
    std::vector<std::pair<std::int64_t, std::int64_t>> grid;
    std::vector<SweepPoint> points;

    bool overallPass() const {
        return !points.empty() && points.size() == grid.size() &&
               std::all_of(points.begin(), points.end(), [](const SweepPoint& p) { return p.pass(); });
    }
    int exit_code() const {
        if (overallPass()) return exit_code::pass;
        const bool only_budget = !points.empty() && std::all_of(points.begin(), points.end(), [](const SweepPoint& p) {
            return p.pass() || p.budgetExceeded;
        });
        return only_budget && points.size() == grid.size() ? exit_code::budget : exit_code::verification;
    }
};

/// Every standard monomial of degree 1..max_degree with nonempty z-support fits one support case.
inline bool support_shapes_ok(const GroebnerFamily& G, std::size_t max_degree, const MonomialBudget& budget = {}) {
    const auto leads = initial_ideal(G).generators;
    for (std::size_t t = 1; t <= max_degree; ++t) {
        for (const auto& m : standard_monomials(leads, G.num_vars(), t, budget))
            if (zsupport_shape(m, G.q.r1()).shape == ShapeCase::Violation) return false;
    }
    return true;
}

inline SweepPoint run_point(std::int64_t r1, std::int64_t x1, const SweepOptions& opts = {}) {
    using clock = std::chrono::steady_clock;
    auto ms = [](clock::time_point a) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - a).count();
    };
    SweepPoint p;
    p.r1 = r1;
    p.x1 = x1;
    try {
        const QVector q = build_q(r1, x1);

        auto t0 = clock::now();
        p.latticePointsOK = run_points(q, true, opts.budget).match;
        p.timings.points_ms = ms(t0);

        t0 = clock::now();
        const auto hs = run_hstar(q, true, 2, opts.budget);
        p.hstarOK = hs.pass() && hs.h.coeffs.size() == static_cast<std::size_t>(q.d()) + 1;
        p.timings.hstar_ms = ms(t0);

        t0 = clock::now();
        const GroebnerFamily G = groebner_family(q);
        p.gbConstructed = true;
        GbVerifyOptions vo;
        vo.max_degree = opts.max_degree;
        vo.budget = opts.monomial_budget;
        const auto gb = verify_family(G, vo);
        p.buchbergerPass = gb.buchberger && gb.buchberger->pass();
        p.squarefree = gb.squarefree;
        p.injectivityPass = gb.injectivity && gb.injectivity->pass();
        p.budgetExceeded = gb.budget_exceeded;
        if (!gb.pass()) p.error = gb.failure_stage + ": " + gb.failure_detail;
        p.supportShapeOK = support_shapes_ok(G, opts.max_degree, opts.monomial_budget);
        p.timings.gb_ms = ms(t0);

        t0 = clock::now();
        const auto tri = run_triangulate(G);
        p.triangulationUnimodular = tri.all_unimodular && tri.volume_ok;
        p.regularCertified = tri.regular_certified;
        if (!tri.pass() && p.error.empty()) p.error = tri.failure_stage + ": " + tri.failure_detail;
        p.timings.triangulation_ms = ms(t0);
    } catch (const BudgetExceeded& e) {
        p.budgetExceeded = true;
        p.error = e.what();
    } catch (const Error& e) {
        p.error = e.what();
    }
    return p;
}

inline SweepReport run_sweep(std::vector<std::pair<std::int64_t, std::int64_t>> grid, const SweepOptions& opts = {}) {
    SweepReport rep;
    rep.grid = std::move(grid);
    if (opts.fail_fast || opts.jobs <= 1) {
        for (const auto& [r1, x1] : rep.grid) {
            rep.points.push_back(run_point(r1, x1, opts));
            if (opts.fail_fast && !rep.points.back().pass()) break;
        }
        return rep;
    }
    rep.points.resize(rep.grid.size());
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < opts.jobs; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < rep.grid.size(); i += opts.jobs)
                    rep.points[i] = run_point(rep.grid[i].first, rep.grid[i].second, opts);
            });
        }
    }
    return rep;
}

inline std::vector<std::pair<std::int64_t, std::int64_t>> make_grid(std::int64_t r1_lo, std::int64_t r1_hi,
                                                                    std::int64_t x1_lo, std::int64_t x1_hi) {
    std::vector<std::pair<std::int64_t, std::int64_t>> grid;
    for (std::int64_t r1 = r1_lo; r1 <= r1_hi; ++r1)
        for (std::int64_t x1 = x1_lo; x1 <= x1_hi; ++x1) grid.emplace_back(r1, x1);
    return grid;
}

}  // namespace idp
