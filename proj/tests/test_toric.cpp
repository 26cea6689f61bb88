#include <gtest/gtest.h>

#include "idp/idp.hpp"

using namespace idp;

namespace {

std::vector<std::pair<int, int>> grid() {
    std::vector<std::pair<int, int>> g;
    for (int r1 = 2; r1 <= 6; ++r1)
        for (int x1 = 1; x1 <= 5; ++x1) g.emplace_back(r1, x1);
    return g;
}

IntMatrix matrix_for(const QVector& q) { return lattice_points_formula(q).homogenized(); }

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

}  // namespace

TEST(Ring, Indexing) {
    const ToricRing R(build_q(2, 1));
    EXPECT_EQ(R.num_z(), 5u);
    EXPECT_EQ(R.num_vars(), 7u);
    EXPECT_EQ(R.z(1), 0u);
    EXPECT_EQ(R.y(1), 5u);
    EXPECT_THROW(R.z(6), IndexOutOfRange);
    EXPECT_THROW(R.y(0), IndexOutOfRange);
    EXPECT_THROW(R.monomial({{0, -1}}), InternalConsistency);
    EXPECT_EQ(R.names()(6), "y2");
}

TEST(PiImage, SmallCase) {
    const auto q = build_q(2, 1);
    const ToricRing R(q);
    const auto A = matrix_for(q);
    const auto z2z4 = R.monomial({{R.z(2), 1}, {R.z(4), 1}});
    const auto z1y2 = R.monomial({{R.z(1), 1}, {R.y(2), 1}});
    EXPECT_EQ(pi_image(A, z2z4), (PiImage{-1, -3, 2}));
    EXPECT_EQ(pi_image(A, z1y2), (PiImage{-1, -3, 2}));
    EXPECT_EQ(pi_image(A, R.monomial({{R.z(2), 1}, {R.z(3), 1}})), (PiImage{-2, -3, 2}));
    EXPECT_EQ(pi_image(A, R.monomial({{R.z(1), 1}, {R.z(4), 1}, {R.y(1), 1}})), (PiImage{-2, -3, 3}));
    EXPECT_THROW(pi_image(A, Monomial(3)), DimensionMismatch);
}

TEST(PiImage, Additive) {
    for (auto [r1, x1] : grid()) {
        const auto A = matrix_for(build_q(r1, x1));
        const std::size_t n = A.cols();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                const auto a = Monomial::variable(n, i), b = Monomial::variable(n, j);
                auto sum = pi_image(A, a);
                const auto pb = pi_image(A, b);
                for (std::size_t r = 0; r < sum.size(); ++r) sum[r] += pb[r];
                EXPECT_EQ(pi_image(A, a * b), sum);
            }
        }
    }
}

TEST(BSet, SmallCases) {
    EXPECT_EQ(build_B(2), (Pairs{{1, 4}, {1, 5}, {2, 5}}));
    EXPECT_EQ(build_B(3), (Pairs{{1, 3}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 6}}));
    EXPECT_EQ(build_B(2, BRule::Literal), (Pairs{{1, 4}, {1, 5}, {2, 4}, {2, 5}}));
    EXPECT_THROW(build_B(1), ParameterOutOfRange);
}

TEST(BSet, Companions) {
    EXPECT_EQ(companion(1, 4, 2), (std::pair<std::size_t, std::size_t>{2, 2}));
    EXPECT_EQ(companion(1, 5, 2), (std::pair<std::size_t, std::size_t>{2, 3}));
    EXPECT_EQ(companion(2, 5, 2), (std::pair<std::size_t, std::size_t>{3, 4}));
    EXPECT_EQ(literal_companion(2, 4, 2), (std::pair<std::size_t, std::size_t>{2, 3}));
    EXPECT_THROW(companion(2, 4, 2), InvalidPair);
    EXPECT_THROW(companion(1, 3, 2), InvalidPair);
    EXPECT_THROW(companion(1, 2, 4), InvalidPair);
    EXPECT_THROW(companion(5, 7, 4), InvalidPair);
}

TEST(BSet, CompanionBinomialsAreBalanced) {
    for (auto [r1, x1] : grid()) {
        const auto q = build_q(r1, x1);
        const ToricRing R(q);
        const auto A = matrix_for(q);
        for (auto [i, j] : build_B(r1)) {
            const auto [k, l] = companion(i, j, r1);
            EXPECT_TRUE(is_toric_member(A, eq1_generator(R, i, j, k, l))) << i << "," << j;
        }
    }
}

TEST(BSet, ExcludedPairIsNotBalanced) {
    for (auto [r1, x1] : grid()) {
        const auto q = build_q(r1, x1);
        const ToricRing R(q);
        const auto ri = static_cast<std::size_t>(r1);
        const auto [k, l] = literal_companion(ri, ri + 2, r1);
        EXPECT_EQ(k, ri);
        EXPECT_EQ(l, ri + 1);
        EXPECT_FALSE(is_toric_member(matrix_for(q), eq1_generator(R, ri, ri + 2, k, l)));
    }
}

TEST(Generators, SmallCaseText) {
    const ToricRing R(build_q(2, 1));
    const auto names = R.names();
    EXPECT_EQ(to_text(eq4_generator(R), names), "z4*y1 - z5^2");
    EXPECT_EQ(to_text(eq5_generator(R), names), "z3*y2 - z4*z5");
    EXPECT_EQ(to_text(eq3_generator(R, 1), names), "z1*y2 - z2*z4");
    EXPECT_EQ(to_text(eq2_generator(R, 0), names), "z1*y1 - z3^2");
}

TEST(Generators, SmallCaseFamily) {
    const auto G = groebner_family(build_q(2, 1));
    const std::vector<std::string> expected{
        "z1*z4 - z2^2", "z1*z5 - z2*z3", "z2*z5 - z3*z4", "z1*y1 - z3^2", "z2*y1 - z3*z5",
        "z2*y2 - z4^2", "z1*y2 - z2*z4", "z4*y1 - z5^2", "z3*y2 - z4*z5"};
    ASSERT_EQ(G.generators.size(), expected.size());
    const auto names = ToricRing(G.q).names();
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(to_text(G.generators[i].binomial, names), expected[i]);
    EXPECT_EQ(G.count(Origin::Eq1), 3u);
    EXPECT_EQ(G.count(Origin::Eq3), 2u);
    EXPECT_EQ(G.count(Origin::Eq3Star), 0u);
}

TEST(Generators, CountFormula) {
    const std::vector<std::size_t> by_r1{9, 14, 20, 27, 35};
    for (auto [r1, x1] : grid()) {
        const auto G = groebner_family(build_q(r1, x1));
        EXPECT_EQ(G.generators.size(), build_B(r1).size() + 2 * static_cast<std::size_t>(r1) + 2);
        EXPECT_EQ(G.generators.size(), by_r1[static_cast<std::size_t>(r1 - 2)]);
    }
}

TEST(Generators, AllBalancedHomogeneousOriented) {
    for (auto [r1, x1] : grid()) {
        const auto q = build_q(r1, x1);
        const auto G = groebner_family(q);
        EXPECT_FALSE(audit_family(G.generators, matrix_for(q)).has_value()) << r1 << "," << x1;
        for (const auto& g : G.generators) {
            EXPECT_TRUE(g.binomial.is_homogeneous());
            std::int64_t deg = x1 + 1;
            if (g.origin == Origin::Eq1) deg = 2;
            if (g.origin == Origin::Eq2 || g.origin == Origin::Eq4) deg = r1;
            EXPECT_EQ(g.binomial.lead().degree(), static_cast<std::uint64_t>(deg));
        }
    }
}

TEST(Generators, OriginOnlyInQuadraticLeads) {
    for (auto [r1, x1] : grid()) {
        const auto G = groebner_family(build_q(r1, x1));
        const std::size_t origin = static_cast<std::size_t>(r1) + 2;
        std::size_t hits = 0;
        for (const auto& g : G.generators) {
            if (g.binomial.lead()[origin] == 0) continue;
            EXPECT_EQ(g.origin, Origin::Eq1);
            ++hits;
        }
        EXPECT_EQ(hits, static_cast<std::size_t>(r1));
    }
}

TEST(Generators, StarSelection) {
    for (auto [r1, x1] : grid()) {
        const auto G = groebner_family(build_q(r1, x1));
        const bool star = x1 < r1 - 2;
        EXPECT_EQ(G.count(Origin::Eq3Star), star ? static_cast<std::size_t>(r1) : 0u);
        EXPECT_EQ(G.count(Origin::Eq3), star ? 0u : static_cast<std::size_t>(r1));
    }
}

TEST(Generators, PlainAndStarShareLeads) {
    for (auto [r1, x1] : grid()) {
        const ToricRing R(build_q(r1, x1));
        for (std::int64_t k = 0; k < r1; ++k) {
            const auto star = eq3star_generator(R, k);
            EXPECT_EQ(star.lead(), eq3_lead(R, k));
            if (k <= x1 + 1) {
                EXPECT_EQ(eq3_generator(R, k).lead(), star.lead());
            }
        }
    }
}

TEST(Generators, BalancedSplitAgreesWithTwoBranchFormula) {
    for (auto [r1, x1] : grid()) {
        const ToricRing R(build_q(r1, x1));
        for (std::int64_t k = 0; k < r1 && k <= 2 * x1 + 2; ++k) {
            EXPECT_EQ(eq3star_generator(R, k), eq3star_literal_generator(R, k)) << r1 << "," << x1 << " k=" << k;
            if (k <= x1 + 1) {
                EXPECT_EQ(eq3star_generator(R, k), eq3_generator(R, k));
            }
        }
    }
}

TEST(Generators, TwoBranchFormulaBreaksPastRange) {
    const ToricRing R(build_q(6, 1));
    EXPECT_THROW(eq3star_literal_generator(R, 5), InternalConsistency);
    EXPECT_THROW(groebner_family(build_q(6, 1), {BRule::Corrected, Eq3Rule::StarLiteral}), InternalConsistency);
    EXPECT_NO_THROW(groebner_family(build_q(5, 1), {BRule::Corrected, Eq3Rule::StarLiteral}));
}

TEST(Generators, PlainFormulaNeedsLargeX1) {
    EXPECT_THROW(groebner_family(build_q(5, 1), {BRule::Corrected, Eq3Rule::Plain}), InternalConsistency);
}

TEST(Generators, StarFamilyValidEverywhere) {
    for (auto [r1, x1] : grid()) {
        const auto q = build_q(r1, x1);
        EXPECT_NO_THROW(groebner_family(q, {BRule::Corrected, Eq3Rule::Star})) << r1 << "," << x1;
    }
}

TEST(Generators, LiteralBRejectedByAudit) {
    for (auto [r1, x1] : grid())
        EXPECT_THROW(groebner_family(build_q(r1, x1), {BRule::Literal, Eq3Rule::Auto}), InternalConsistency);
}

TEST(Audit, ReportsFirstBadGenerator) {
    const auto q = build_q(2, 1);
    auto G = groebner_family(q);
    G.generators[4].binomial = sabotage_tail(G.generators[4].binomial);
    const auto bad = audit_family(G.generators, matrix_for(q));
    ASSERT_TRUE(bad.has_value());
    EXPECT_EQ(bad->index, 4u);
}

TEST(Serialize, FamilyJson) {
    const auto j = to_json(groebner_family(build_q(2, 1)));
    EXPECT_EQ(j["num_generators"], 9);
    EXPECT_EQ(j["params"]["N"], 6);
    EXPECT_EQ(j["generators"][7]["text"], "z4*y1 - z5^2");
    EXPECT_EQ(j["generators"][7]["tag"], "EQ4");
    EXPECT_EQ(j["B"].size(), 3u);
    EXPECT_EQ(j["variables"][5], "y1");
}
