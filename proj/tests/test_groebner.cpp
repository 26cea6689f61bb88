#include <gtest/gtest.h>

#include <map>
#include <random>

#include "idp/idp.hpp"
#include "oracles.hpp"

using namespace idp;

namespace {

std::vector<std::pair<int, int>> grid() {
    std::vector<std::pair<int, int>> g;
    for (int r1 = 2; r1 <= 6; ++r1)
        for (int x1 = 1; x1 <= 5; ++x1) g.emplace_back(r1, x1);
    return g;
}

std::vector<std::pair<int, int>> small_grid() {
    return {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}, {5, 1}, {6, 1}, {4, 2}};
}

IntMatrix matrix_for(const QVector& q) { return lattice_points_formula(q).homogenized(); }

Monomial random_monomial(std::mt19937& rng, std::size_t n, std::size_t degree) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<Exponent> e(n, 0);
    for (std::size_t i = 0; i < degree; ++i) ++e[pick(rng)];
    return Monomial(std::move(e));
}

}  // namespace

TEST(SPolynomial, SmallCaseExample) {
    const auto q = build_q(2, 1);
    const ToricRing R(q);
    const auto G = groebner_family(q);
    const auto& g1 = G.generators[0].binomial;  // z1*z4 - z2^2
    const auto& g2 = G.generators[7].binomial;  // z4*y1 - z5^2
    const auto s = s_polynomial(g1, g2);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(to_text(*s, R.names()), "z1*z5^2 - z2^2*y1");
    const Reducer red(G.binomials());
    EXPECT_EQ(red.normal_form(s->lead()), red.normal_form(s->tail()));
}

TEST(SPolynomial, CoincidingTerms) {
    const Binomial a(Monomial({1, 1, 0}), Monomial({0, 0, 2}));
    EXPECT_FALSE(s_polynomial(a, a).has_value());
}

TEST(NormalForm, SmallCaseExample) {
    const auto q = build_q(2, 1);
    const ToricRing R(q);
    const auto G = groebner_family(q);
    const auto m = R.monomial({{R.z(1), 1}, {R.z(4), 1}, {R.y(1), 1}});
    const auto nf = normal_form(m, G);
    EXPECT_EQ(to_text(nf, R.names()), "z3^2*z4");
    EXPECT_EQ(pi_image(matrix_for(q), nf), (PiImage{-2, -3, 3}));
}

TEST(NormalForm, PreservesPiAndDegree) {
    std::mt19937 rng(5);
    for (auto [r1, x1] : grid()) {
        const auto q = build_q(r1, x1);
        const auto A = matrix_for(q);
        const auto G = groebner_family(q);
        const Reducer red(G.binomials());
        for (int trial = 0; trial < 40; ++trial) {
            const auto m = random_monomial(rng, G.num_vars(), 1 + static_cast<std::size_t>(trial % 4));
            const auto nf = red.normal_form(m);
            EXPECT_EQ(pi_image(A, nf), pi_image(A, m));
            EXPECT_EQ(nf.degree(), m.degree());
            EXPECT_TRUE(red.is_standard(nf));
            EXPECT_NE(lex_cmp(m, nf), Cmp::Less);
        }
    }
}

TEST(NormalForm, ConfluentUnderEveryRewriteOrder) {
    // A Groebner basis rewrites every monomial to the same standard monomial however reductions are chosen.
    std::mt19937 rng(9);
    for (auto [r1, x1] : small_grid()) {
        const auto G = groebner_family(build_q(r1, x1));
        const auto gens = G.binomials();
        const Reducer red(gens);
        for (int trial = 0; trial < 30; ++trial) {
            const auto m = random_monomial(rng, G.num_vars(), 2 + static_cast<std::size_t>(trial % 3));
            const auto nfs = oracle::reachable_normal_forms(m, gens);
            ASSERT_EQ(nfs.size(), 1u) << r1 << "," << x1;
            EXPECT_EQ(*nfs.begin(), red.normal_form(m).exponents());
        }
    }
}

TEST(NormalForm, NonBasisIsNotConfluent) {
    // x*y - z^2 and x*z - y^2 under x > y > z: x*y*z has two distinct normal forms.
    const std::vector<Binomial> gens{Binomial(Monomial({1, 1, 0}), Monomial({0, 0, 2})),
                                     Binomial(Monomial({1, 0, 1}), Monomial({0, 2, 0}))};
    EXPECT_EQ(oracle::reachable_normal_forms(Monomial({1, 1, 1}), gens).size(), 2u);
}

TEST(Reducer, RejectsMisorientedGenerator) {
    EXPECT_THROW(Reducer({Binomial(Monomial({0, 2}), Monomial({1, 1}))}), InternalConsistency);
}

TEST(Buchberger, SmallCase) {
    const auto rep = buchberger_verify(groebner_family(build_q(2, 1)));
    EXPECT_EQ(rep.num_generators, 9u);
    EXPECT_EQ(rep.spairs_total, 36u);
    EXPECT_EQ(rep.reduced_to_zero, 36u);
    EXPECT_TRUE(rep.pass());
}

TEST(Buchberger, DetectsNonBasis) {
    const std::vector<Binomial> gens{Binomial(Monomial({1, 1, 0}), Monomial({0, 0, 2})),
                                     Binomial(Monomial({1, 0, 1}), Monomial({0, 2, 0}))};
    const auto rep = buchberger_verify(gens);
    EXPECT_FALSE(rep.pass());
    EXPECT_EQ(rep.failures, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
}

TEST(Buchberger, FullGrid) {
    for (auto [r1, x1] : grid()) {
        const auto G = groebner_family(build_q(r1, x1));
        const auto rep = buchberger_verify(G);
        const auto n = G.generators.size();
        EXPECT_EQ(rep.spairs_total, n * (n - 1) / 2);
        EXPECT_EQ(rep.reduced_to_zero, rep.spairs_total) << r1 << "," << x1;
        EXPECT_TRUE(rep.pass());
    }
}

TEST(Buchberger, ThreadedMatchesSequential) {
    for (auto [r1, x1] : small_grid()) {
        const auto G = groebner_family(build_q(r1, x1));
        const auto seq = buchberger_verify(G);
        const auto par = buchberger_verify(G, {false, 4});
        EXPECT_EQ(par.reduced_to_zero, seq.reduced_to_zero);
        EXPECT_EQ(par.failures, seq.failures);
    }
}

TEST(Buchberger, CoprimeSkipAccounting) {
    const auto G = groebner_family(build_q(4, 2));
    const auto rep = buchberger_verify(G, {true, 1});
    EXPECT_GT(rep.skipped_coprime, 0u);
    EXPECT_EQ(rep.reduced_to_zero + rep.skipped_coprime, rep.spairs_total);
}

TEST(Buchberger, SabotagedTailFails) {
    const auto G = groebner_family(build_q(3, 1));
    auto gens = G.binomials();
    gens[0] = sabotage_tail(gens[0]);
    EXPECT_FALSE(buchberger_verify(gens).pass());
}

TEST(InitialIdeal, SmallCase) {
    const auto q = build_q(2, 1);
    const ToricRing R(q);
    const auto I = initial_ideal(groebner_family(q));
    std::vector<std::string> leads;
    for (const auto& m : I.generators) leads.push_back(to_text(m, R.names()));
    EXPECT_EQ(leads, (std::vector<std::string>{"z1*z4", "z1*z5", "z2*z5", "z1*y1", "z2*y1", "z2*y2", "z1*y2",
                                               "z4*y1", "z3*y2"}));
    EXPECT_TRUE(I.squarefree);
}

TEST(InitialIdeal, DropsNonMinimalLeads) {
    const std::vector<Binomial> gens{Binomial(Monomial({1, 1, 0}), Monomial({0, 0, 2})),
                                     Binomial(Monomial({2, 1, 0}), Monomial({0, 3, 0}))};
    const auto I = initial_ideal(gens);
    ASSERT_EQ(I.generators.size(), 1u);
    EXPECT_TRUE(I.squarefree);
}

TEST(InitialIdeal, SquarefreeOnGrid) {
    for (auto [r1, x1] : grid()) EXPECT_TRUE(initial_ideal(groebner_family(build_q(r1, x1))).squarefree);
}

TEST(StandardMonomials, FrozenCounts) {
    const std::map<std::pair<int, int>, std::vector<std::size_t>> expected{
        {{2, 1}, {7, 19, 37}}, {{2, 2}, {8, 30, 77}}, {{3, 1}, {9, 35, 91}},
        {{3, 2}, {10, 49, 160}}, {{6, 1}, {15, 92, 372}}};
    for (const auto& [rx, counts] : expected) {
        const auto G = groebner_family(build_q(rx.first, rx.second));
        for (std::size_t t = 1; t <= 3; ++t) EXPECT_EQ(standard_monomials(G, t).size(), counts[t - 1]);
    }
}

TEST(StandardMonomials, PrunedMatchesExhaustive) {
    for (auto [r1, x1] : small_grid()) {
        const auto G = groebner_family(build_q(r1, x1));
        for (std::size_t t = 0; t <= 3; ++t)
            EXPECT_EQ(standard_monomials(G, t).size(), oracle::standard_count(G.binomials(), G.num_vars(), t));
    }
}

TEST(StandardMonomials, LexDescendingAndStandard) {
    const auto G = groebner_family(build_q(3, 2));
    const Reducer red(G.binomials());
    const auto monos = standard_monomials(G, 3);
    for (std::size_t i = 0; i + 1 < monos.size(); ++i) EXPECT_EQ(lex_cmp(monos[i], monos[i + 1]), Cmp::Greater);
    for (const auto& m : monos) EXPECT_TRUE(red.is_standard(m));
}

TEST(StandardMonomials, DegreeZero) {
    const auto G = groebner_family(build_q(2, 1));
    const auto monos = standard_monomials(G, 0);
    ASSERT_EQ(monos.size(), 1u);
    EXPECT_TRUE(monos[0].is_one());
}

TEST(StandardMonomials, BudgetIsEnforced) {
    EXPECT_THROW(standard_monomials(groebner_family(build_q(6, 5)), 3, MonomialBudget{100}), BudgetExceeded);
}

TEST(Injectivity, SmallCase) {
    const auto q = build_q(2, 1);
    const auto rep = injectivity_report(groebner_family(q), matrix_for(q), 3);
    ASSERT_EQ(rep.degrees.size(), 4u);
    EXPECT_EQ(rep.degrees[3].standard, 37u);
    EXPECT_EQ(rep.degrees[3].distinct, 37u);
    EXPECT_EQ(rep.degrees[3].ehrhart, 37);
    EXPECT_TRUE(rep.pass());
}

TEST(Injectivity, GridDegreeTwo) {
    for (auto [r1, x1] : grid()) {
        const auto q = build_q(r1, x1);
        EXPECT_TRUE(injectivity_check(groebner_family(q), matrix_for(q), 2)) << r1 << "," << x1;
    }
}

TEST(Injectivity, MissingGeneratorDetected) {
    const auto q = build_q(2, 1);
    auto G = groebner_family(q);
    G.generators.erase(G.generators.begin() + 7);  // z4*y1 - z5^2
    const auto rep = injectivity_report(G, matrix_for(q), 2);
    EXPECT_FALSE(rep.pass());
    EXPECT_EQ(rep.degrees[2].standard, 20u);
    EXPECT_EQ(rep.degrees[2].distinct, 19u);
}

TEST(SupportShape, Examples) {
    const ToricRing R(build_q(2, 1));
    const auto m = R.monomial({{R.z(2), 1}, {R.z(3), 1}, {R.z(4), 1}});
    const auto s = zsupport_shape(m, 2);
    EXPECT_EQ(s.shape, ShapeCase::Case2);
    EXPECT_EQ(s.min_index, 2u);
    EXPECT_EQ(s.zsupp, (std::vector<std::size_t>{2, 3, 4}));
    for (std::int64_t k = 1; k <= 3; ++k) EXPECT_EQ(zsupport_shape(R.monomial({{R.z(5), k}}), 2).shape, ShapeCase::Case3);
    EXPECT_EQ(zsupport_shape(R.monomial({{R.y(1), 2}}), 2).shape, ShapeCase::None);
    EXPECT_EQ(zsupport_shape(R.monomial({{R.z(1), 1}, {R.z(4), 1}}), 2).shape, ShapeCase::Violation);
    EXPECT_THROW(zsupport_shape(Monomial(3), 2), DimensionMismatch);
}

TEST(SupportShape, StandardMonomialsNeverViolate) {
    for (auto [r1, x1] : small_grid()) {
        const auto G = groebner_family(build_q(r1, x1));
        for (std::size_t t = 1; t <= 3; ++t)
            for (const auto& m : standard_monomials(G, t))
                EXPECT_NE(zsupport_shape(m, r1).shape, ShapeCase::Violation) << to_text(m, ToricRing(G.q).names());
    }
}
