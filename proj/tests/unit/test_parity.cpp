#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "sp/parity.hpp"

using namespace sp;
using sp::test::plane;

namespace {

EmbeddedGraph k4() {
    return plane({{"a", 1, 0, 0}, {"b", 2, 4, 0.5}, {"c", 2, 2, 3}, {"d", 2, 2, 1}},
                 {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
}

EmbeddedGraph star4() {
    return plane({{"v", 2, 0, 0}, {"n", 2, 0.1, 2}, {"e", 3, 2, 0.1}, {"s", 2, -0.1, -2}, {"w", 1, -2, -0.1}},
                 {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

int flipped_pairs(const ParityDrawing& a, const ParityDrawing& b) {
    int n = 0, m = a.graph.num_edges();
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) n += a.cr[e][f] != b.cr[e][f];
    return n;
}

bool same_cyclic(std::vector<int> a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(a.begin(), a.end(), b[0]);
    if (it == a.end()) return false;
    std::rotate(a.begin(), it, a.end());
    return a == b;
}

}  // namespace

TEST(Parity, CrossingFreeDrawingIsEven) {
    ParityDrawing d = ParityDrawing::from_embedding(k4());
    EvennessReport r = evenness_report(d);
    EXPECT_EQ(r.kind, Evenness::Even);
    EXPECT_TRUE(r.odd_independent.empty());
}

TEST(Parity, EvennessClassesFollowTheOddPairs) {
    ParityDrawing d = ParityDrawing::from_embedding(k4());
    d.flip(0, 1);  // a-b and b-c share b
    EXPECT_EQ(evenness_report(d).kind, Evenness::IndependentlyEven);
    d.flip(0, 5);  // a-b and c-d are independent
    EvennessReport r = evenness_report(d);
    EXPECT_EQ(r.kind, Evenness::Neither);
    EXPECT_EQ(r.odd_independent.size(), 1u);
}

TEST(Parity, PullFlipsPairsAtTheVertex) {
    ParityDrawing d = ParityDrawing::from_embedding(k4());
    // edge 0 = a-b is incident to a (degree 3): two other edges at a
    EXPECT_EQ(flipped_pairs(d, pull_edge_over_vertex(d, 0, 0)), 2);
    // edge 5 = c-d is not incident to a: all three edges at a
    EXPECT_EQ(flipped_pairs(d, pull_edge_over_vertex(d, 5, 0)), 3);
}

TEST(Parity, DoublePullIsTheIdentity) {
    ParityDrawing d = ParityDrawing::from_embedding(k4());
    ParityDrawing twice = pull_edge_over_vertex(pull_edge_over_vertex(d, 5, 0), 5, 0);
    EXPECT_EQ(twice.cr, d.cr);
    EXPECT_EQ(twice.ray, d.ray);
}

TEST(Parity, PullsOverNonEndpointsKeepEvenness) {
    ParityDrawing d = ParityDrawing::from_embedding(k4());
    EXPECT_EQ(evenness_report(pull_edge_over_vertex(d, 5, 0)).kind, Evenness::Neither);
    EXPECT_EQ(evenness_report(pull_edge_over_vertex(d, 0, 0)).kind, Evenness::IndependentlyEven);
    EXPECT_EQ(evenness_report(wrap_edge_around_graph(d, 5)).kind, Evenness::Even);
}

TEST(Parity, LongEdgesAreSubdivided) {
    ClusteredGraph g;
    g.add_vertex("x", 1);
    g.add_vertex("y", 4);
    g.add_edge(0, 1);
    ParityDrawing d;
    d.graph = g;
    d.rotation = {{make_dart(0, 0)}, {make_dart(0, 1)}};
    d.cr = {{0}};
    d.ray = {{0, 0}};
    ParityDrawing s = subdivide_bounded_edges(d);
    EXPECT_EQ(s.graph.num_edges(), 3);
    EXPECT_EQ(s.graph.num_vertices(), 4);
    EXPECT_NO_THROW(s.graph.validate_strip());
}

TEST(Parity, CrossingFreeDrawingHasOneOuterFace) {
    EXPECT_EQ(count_outer_faces(ParityDrawing::from_embedding(k4())).count, 1);
    EXPECT_EQ(count_outer_faces(ParityDrawing::from_embedding(sp::test::wheel(2, 2))).count, 1);
}

TEST(Parity, WrappingKeepsAnOddOuterFaceCount) {
    ParityDrawing d = wrap_edge_around_graph(ParityDrawing::from_embedding(sp::test::wheel(2, 2)), 2);
    EXPECT_EQ(count_outer_faces(d).count % 2, 1);
}

TEST(Parity, ThreeConnectedDetection) {
    EXPECT_TRUE(is_subdivision_of_3connected(k4().graph()));
    EXPECT_FALSE(is_subdivision_of_3connected(star4().graph()));
}

TEST(Parity, OddRemovalIsTheIdentityOnEvenDrawings) {
    ParityDrawing d = ParityDrawing::from_embedding(k4());
    OddRemovalResult r = remove_odd_crossings_3connected(d);
    EXPECT_TRUE(r.splits.empty());
    EXPECT_EQ(r.drawing.cr, d.cr);
}

TEST(Parity, OddAdjacentPairIsRemoved) {
    ParityDrawing d = ParityDrawing::from_embedding(k4());
    d.flip(0, 1);
    OddRemovalResult r = remove_odd_crossings_3connected(d);
    EXPECT_EQ(evenness_report(r.drawing).kind, Evenness::Even);
}

TEST(Parity, SeparationParityOfACrossingFreeStar) {
    ParityDrawing d = ParityDrawing::from_embedding(star4());
    EXPECT_EQ(separation_parity(d, 0, 0, 1, 2, 3), 0);
    d.flip(0, 2);
    EXPECT_EQ(separation_parity(d, 0, 0, 1, 2, 3), 1);
}

TEST(Parity, AllOnesBlockIsCleared) {
    ParityDrawing d = ParityDrawing::from_embedding(star4());
    std::vector<int> rot;
    for (int dart : d.rotation[0]) rot.push_back(dart_edge(dart));
    std::vector<int> L = {rot[0], rot[1]}, R = {rot[2], rot[3]};
    for (int e : L)
        for (int f : R) d.flip(e, f);
    BlockNormalization b = normalize_rotation_block(d, 0, L, R);
    for (int e : L)
        for (int f : R) EXPECT_EQ(b.drawing.parity(e, f), 0);
    EXPECT_EQ(b.switches, 0);
}

TEST(Parity, OddQuadrupleRaisesAnObstruction) {
    ParityDrawing d = ParityDrawing::from_embedding(star4());
    std::vector<int> rot;
    for (int dart : d.rotation[0]) rot.push_back(dart_edge(dart));
    d.flip(rot[0], rot[2]);
    try {
        normalize_rotation_block(d, 0, {rot[0], rot[1]}, {rot[2], rot[3]});
        FAIL() << "expected ParityObstruction";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParityObstruction);
    }
}

TEST(Parity, WeakHtOnAPlaneDrawingKeepsTheRotation) {
    EmbeddedGraph emb = plane({{"a", 1, 0, 0}, {"b", 2, 1, 1}, {"c", 3, 2, 0.1}, {"d", 2, 1, -1}, {"e", 2, 1, 0}},
                              {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 2}});
    WeakHtResult r = weak_ht_embed(ParityDrawing::from_embedding(emb));
    EXPECT_EQ(r.outer_face_count, 1);
    for (int v = 0; v < emb.graph().num_vertices(); ++v)
        EXPECT_TRUE(same_cyclic(r.embedding.rotation(v), emb.rotation(v))) << "vertex " << v;
    EXPECT_TRUE(verify_strip_embedding(r.drawing).ok());
    EXPECT_TRUE(verify_realizes(r.drawing, r.embedding).ok());
}

TEST(Parity, WeakHtSurvivesEvenPerturbations) {
    Rng rng(21);
    for (int i = 0; i < 25; ++i) {
        EmbeddedGraph emb = random_strip_planar_embedding(rng, 6 + rng() % 6, 3, 12, 1);
        ParityDrawing d = perturb_even(ParityDrawing::from_embedding(emb), rng);
        ASSERT_EQ(evenness_report(d).kind, Evenness::Even);
        WeakHtResult r = weak_ht_embed(d);
        for (int v = 0; v < emb.graph().num_vertices(); ++v)
            EXPECT_TRUE(same_cyclic(r.embedding.rotation(v), d.rotation[v])) << "instance " << i;
        EXPECT_TRUE(verify_strip_embedding(r.drawing).ok()) << "instance " << i;
    }
}
