#include <gtest/gtest.h>

#include "helpers.hpp"
#include "sp/characterization.hpp"
#include "sp/families.hpp"
#include "sp/oracle.hpp"

using namespace sp;
using sp::test::plane;

namespace {

// v in cluster 2 with neighbours a, c in cluster 1 and b, d in cluster 3, in the given clockwise order.
EmbeddedGraph cross_at_v(const std::vector<int>& order) {
    ClusteredGraph g;
    g.add_vertex("v", 2);
    g.add_vertex("a", 1);
    g.add_vertex("b", 3);
    g.add_vertex("c", 1);
    g.add_vertex("d", 3);
    for (int i = 1; i <= 4; ++i) g.add_edge(0, i);
    std::vector<std::vector<int>> rot(5);
    for (int x : order) rot[0].push_back(make_dart(x - 1, 0));
    for (int i = 1; i <= 4; ++i) rot[i] = {make_dart(i - 1, 1)};
    return EmbeddedGraph(g, rot, 0);
}

ClusteredGraph raw_path(const std::vector<int>& labels) {
    ClusteredGraph g;
    for (size_t i = 0; i < labels.size(); ++i) g.add_vertex("p" + std::to_string(i), labels[i]);
    for (size_t i = 1; i < labels.size(); ++i) g.add_edge(i - 1, i);
    return g;
}

std::vector<int> iota_vec(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

TEST(Characterization, DisjointPathsDoNotIntersect) {
    EmbeddedGraph emb = plane({{"a", 1, 0, 0}, {"b", 2, 1, 0.1}, {"c", 1, 0, 2}, {"d", 2, 1, 2.1}}, {{0, 1}, {2, 3}});
    Walk w1 = walk_from_vertices(emb.graph(), {0, 1}), w2 = walk_from_vertices(emb.graph(), {2, 3});
    EXPECT_EQ(algebraic_intersection_half(emb, w1, w2), 0);
}

TEST(Characterization, TransversalCrossingCountsOnce) {
    EmbeddedGraph emb = cross_at_v({1, 2, 3, 4});
    Walk w1 = walk_from_vertices(emb.graph(), {1, 0, 3}), w2 = walk_from_vertices(emb.graph(), {2, 0, 4});
    EXPECT_EQ(std::abs(algebraic_intersection_half(emb, w1, w2)), 2);
    EmbeddedGraph touch = cross_at_v({1, 3, 2, 4});
    EXPECT_EQ(algebraic_intersection_half(touch, w1, w2), 0);
}

TEST(Characterization, ClosedWalksHaveZeroIntersection) {
    EmbeddedGraph emb = sp::test::wheel(2, 2);
    Walk rim = walk_from_vertices(emb.graph(), {0, 1, 2, 3}, true);
    Walk tri = walk_from_vertices(emb.graph(), {4, 0, 1}, true);
    Walk tri2 = walk_from_vertices(emb.graph(), {4, 2, 3}, true);
    EXPECT_EQ(algebraic_intersection_half(emb, rim, tri), 0);
    EXPECT_EQ(algebraic_intersection_half(emb, tri, tri2), 0);
}

TEST(Characterization, CapAndCupClassification) {
    ClusteredGraph cap = raw_path({1, 2, 3, 2, 1});
    auto c = classify_cap_cup(cap, iota_vec(5));
    ASSERT_TRUE(c);
    EXPECT_EQ(c->kind, CapCupKind::Cap);
    EXPECT_EQ(c->level, 1);
    ClusteredGraph cup = raw_path({4, 2, 3, 4});
    auto u = classify_cap_cup(cup, iota_vec(4));
    ASSERT_TRUE(u);
    EXPECT_EQ(u->kind, CapCupKind::Cup);
    EXPECT_EQ(u->level, 4);
    EXPECT_FALSE(classify_cap_cup(raw_path({1, 2, 3}), iota_vec(3)));
}

TEST(Characterization, AlternatingCapAndCupAreInfeasible) {
    Verdict v = check_embedded(cross_at_v({1, 2, 3, 4}));
    EXPECT_FALSE(v.planar);
    EXPECT_TRUE(std::holds_alternative<PairWitness>(v.witness));
    EXPECT_TRUE(check_embedded(cross_at_v({1, 3, 2, 4})).planar);
}

TEST(Characterization, InterleavingPairIsReturnedUnchanged) {
    EmbeddedGraph emb = cross_at_v({1, 2, 3, 4});
    InterleavingPair p = extract_interleaving(emb, {1, 0, 3}, {2, 0, 4});
    EXPECT_EQ(p.shared, std::vector<int>{0});
    EXPECT_EQ(p.cap.kind, CapCupKind::Cap);
    EXPECT_EQ(p.cup.kind, CapCupKind::Cup);
    EXPECT_FALSE(pair_feasibility(emb, p).feasible);
    EXPECT_TRUE(pair_feasibility(cross_at_v({1, 3, 2, 4}), p).feasible);
}

TEST(Characterization, HubAboveTheRimIsTrapped) {
    auto t = find_trapped_vertex(sp::test::wheel(3, 4));
    ASSERT_TRUE(t);
    EXPECT_EQ(t->vertex, 4);
    EXPECT_EQ(t->cycle.size(), 4u);
}

TEST(Characterization, HubInsideTheRimRangeIsFree) {
    EXPECT_FALSE(find_trapped_vertex(sp::test::wheel(2, 2)));
}

TEST(Characterization, HubOutsideTheRimIsFree) {
    EXPECT_FALSE(find_trapped_vertex(sp::test::wheel(3, 4, false)));
}

TEST(Characterization, NestedTrianglesTrapTheInnerOnes) {
    std::vector<sp::test::PlaneVertex> vs = {{"o0", 2, 0, 0}, {"o1", 3, 10, 0.2}, {"o2", 3, 5, 9},
                                             {"i0", 4, 4, 2}, {"i1", 4, 6, 2.1}, {"i2", 4, 5, 4}};
    EmbeddedGraph emb = plane(vs, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {1, 4}, {2, 5}, {2, 3}});
    auto t = find_trapped_vertex(emb);
    ASSERT_TRUE(t);
    EXPECT_GE(t->vertex, 3);
}

TEST(Characterization, StripCycleIsPlanar) {
    EmbeddedGraph emb = plane({{"a", 1, 0, 0}, {"b", 2, 1, 1}, {"c", 3, 2, 0.1}, {"d", 2, 1, -1}},
                              {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    EXPECT_TRUE(check_embedded(emb).planar);
    EXPECT_TRUE(check_embedded(emb, CheckMode::Constructive).planar);
}

TEST(Characterization, TrappedWheelHasATrappedWitness) {
    Verdict v = check_embedded(sp::test::wheel(2, 1));
    EXPECT_FALSE(v.planar);
    EXPECT_TRUE(std::holds_alternative<TrappedWitness>(v.witness));
    EXPECT_EQ(witness_kind(v.witness), "TrappedVertex");
}

TEST(Characterization, ExhaustiveAndConstructiveModesAgree) {
    Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        EmbeddedGraph emb = random_plane_strip_graph(rng, 5 + rng() % 6, 3, rng() % 4);
        EXPECT_EQ(check_embedded(emb).planar, check_embedded(emb, CheckMode::Constructive).planar) << "instance " << i;
    }
}

TEST(Characterization, GeometricInstancesArePlanar) {
    Rng rng(12);
    for (int i = 0; i < 40; ++i) {
        EmbeddedGraph emb = random_strip_planar_embedding(rng, 6 + rng() % 10, 2 + rng() % 4, 14, 1);
        EXPECT_TRUE(check_embedded(emb).planar) << "instance " << i;
    }
}

TEST(Oracle, SingleEdgeAndCyclesArePlanar) {
    ClusteredGraph e = raw_path({1, 2});
    EXPECT_EQ(oracle_decide(e).status, OracleStatus::Planar);
    ClusteredGraph c = raw_path({1, 2, 3, 3, 2});
    c.add_edge(4, 0);
    OracleResult r = oracle_decide(c);
    EXPECT_EQ(r.status, OracleStatus::Planar);
    ASSERT_TRUE(r.embedding);
    EXPECT_TRUE(check_embedded(*r.embedding).planar);
}

TEST(Oracle, ReportsBudgetExceeded) {
    OracleLimits lim;
    lim.max_vertices = 3;
    EXPECT_EQ(oracle_decide(raw_path({1, 2, 3, 2, 1}), lim).status, OracleStatus::BudgetExceeded);
}

TEST(Oracle, IsDeterministic) {
    ClusteredGraph g = make_theta(1, 3, {{2}, {2, 1, 2}, {2, 3, 2}});
    OracleResult a = oracle_decide(g), b = oracle_decide(g);
    ASSERT_TRUE(a.embedding && b.embedding);
    EXPECT_EQ(a.embedding->rotations(), b.embedding->rotations());
    EXPECT_EQ(a.embedding->outer_dart(), b.embedding->outer_dart());
}
