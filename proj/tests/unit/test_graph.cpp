#include <gtest/gtest.h>

#include "helpers.hpp"
#include "sp/graph.hpp"

using namespace sp;
using sp::test::plane;

namespace {

EmbeddedGraph k4() {
    return plane({{"a", 1, 0, 0}, {"b", 2, 4, 0.5}, {"c", 2, 2, 3}, {"d", 2, 2, 1}},
                 {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
}

}  // namespace

TEST(GraphCore, TriangleIsValidWithTwoClusters) {
    ClusteredGraph g = build_clustered_graph({{{"a", 1}, {"b", 1}, {"c", 2}}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}});
    EXPECT_EQ(g.num_vertices(), 3);
    EXPECT_EQ(g.num_clusters(), 2);
    EXPECT_NO_THROW(g.validate_strip());
}

TEST(GraphCore, EdgeSkippingAClusterIsRejected) {
    try {
        build_clustered_graph({{{"a", 1}, {"b", 3}}, {{"a", "b"}}});
        FAIL() << "expected StripViolation";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::StripViolation);
    }
}

TEST(GraphCore, ClusterIndicesAreCompacted) {
    ClusteredGraph g = build_clustered_graph({{{"a", 7}, {"b", 8}, {"c", 9}}, {{"a", "b"}, {"b", "c"}}});
    EXPECT_EQ(g.gamma(0), 1);
    EXPECT_EQ(g.gamma(2), 3);
}

TEST(GraphCore, DuplicateAndDanglingIdsAreRejected) {
    EXPECT_THROW(build_clustered_graph({{{"a", 1}, {"a", 1}}, {}}), Error);
    EXPECT_THROW(build_clustered_graph({{{"a", 1}}, {{"a", "z"}}}), Error);
}

TEST(GraphCore, K4HasFourFaces) {
    EmbeddedGraph emb = k4();
    EXPECT_EQ(trace_faces(emb).faces.size(), 4u);
    EXPECT_EQ(emb.euler_characteristic(), 2);
}

TEST(GraphCore, PathHasOneFaceOfLengthFour) {
    EmbeddedGraph emb = plane({{"a", 1, 0, 0}, {"b", 2, 1, 0.2}, {"c", 3, 2, 0}}, {{0, 1}, {1, 2}});
    FaceMap fm = trace_faces(emb);
    ASSERT_EQ(fm.faces.size(), 1u);
    EXPECT_EQ(fm.faces[0].size(), 4);
}

TEST(GraphCore, CubeHasSixQuadrilaterals) {
    std::vector<sp::test::PlaneVertex> vs = {{"o0", 1, 0, 0},   {"o1", 1, 6, 0.1}, {"o2", 1, 6.2, 6}, {"o3", 1, 0.1, 6.1},
                                             {"i0", 1, 2, 2},   {"i1", 1, 4, 2.1}, {"i2", 1, 4.1, 4}, {"i3", 1, 2.1, 4.2}};
    std::vector<std::pair<int, int>> es = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                                           {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    FaceMap fm = trace_faces(plane(vs, es));
    ASSERT_EQ(fm.faces.size(), 6u);
    for (const auto& f : fm.faces) EXPECT_EQ(f.size(), 4);
}

TEST(GraphCore, OuterFaceIsATracedFace) {
    EmbeddedGraph emb = k4();
    FaceMap fm = trace_faces(emb);
    ASSERT_GE(fm.outer, 0);
    EXPECT_EQ(fm.face_of_dart[emb.outer_dart()], fm.outer);
}

TEST(GraphCore, ContractingADigonEdgeLeavesALoop) {
    ClusteredGraph g;
    g.add_vertex("u", 1);
    g.add_vertex("v", 1);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    EmbeddedGraph emb(g, {{0, 2}, {1, 3}}, 0);
    ContractResult r = contract_intra_cluster_edge(emb, 0);
    EXPECT_EQ(r.embedding.graph().num_vertices(), 1);
    EXPECT_EQ(r.embedding.graph().num_edges(), 1);
    EXPECT_TRUE(r.embedding.graph().has_loops());
}

TEST(GraphCore, ContractingAK4EdgeKeepsTheFaceCount) {
    EmbeddedGraph base = k4();
    EmbeddedGraph emb(build_clustered_graph({{{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}},
                                             {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "d"}, {"b", "d"}, {"c", "d"}}}),
                      base.rotations(), base.outer_dart());
    size_t before = trace_faces(emb).faces.size();
    ContractResult r = contract_intra_cluster_edge(emb, 3);
    EXPECT_EQ(trace_faces(r.embedding).faces.size(), before);
    EXPECT_EQ(r.embedding.euler_characteristic(), 2);
}

TEST(GraphCore, ContractingAcrossClustersIsRejected) {
    EXPECT_THROW(contract_intra_cluster_edge(k4(), 0), Error);
}

TEST(GraphCore, PendantContractionKeepsNeighboursContiguous) {
    EmbeddedGraph emb = plane({{"c", 1, 0, 0}, {"p", 1, 1, 0.1}, {"x", 2, 2, 1}, {"y", 2, 2, -1}, {"z", 1, -1, 0.5}},
                              {{0, 1}, {1, 2}, {1, 3}, {0, 4}});
    ContractResult r = contract_intra_cluster_edge(emb, 0);
    int c = r.vertex_map[0];
    EXPECT_EQ(r.embedding.graph().degree(c), 3);
    EXPECT_EQ(r.embedding.euler_characteristic(), 2);
}

TEST(GraphCore, SplitThenContractRestoresTheMap) {
    EmbeddedGraph emb = plane({{"v", 2, 0, 0}, {"n", 2, 0.1, 2}, {"e", 3, 2, 0.1}, {"s", 2, -0.1, -2}, {"w", 1, -2, -0.1}},
                              {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const auto& r0 = emb.rotation(0);
    SplitResult s = split_vertex(emb, 0, {r0[0], r0[1]});
    EXPECT_EQ(s.embedding.graph().degree(0), 3);
    EXPECT_EQ(s.embedding.graph().degree(s.new_vertex), 3);
    ContractResult c = contract_intra_cluster_edge(s.embedding, s.new_edge);
    const EmbeddedGraph& back = c.embedding;
    ASSERT_EQ(back.graph().num_edges(), 4);
    // cyclic rotation at the merged vertex matches the original up to the edge map
    int v = c.vertex_map[0];
    std::vector<int> got;
    for (int d : back.rotation(v)) got.push_back(dart_edge(d));
    std::vector<int> want;
    for (int d : r0) want.push_back(c.edge_map[dart_edge(d)]);
    auto it = std::find(got.begin(), got.end(), want[0]);
    ASSERT_NE(it, got.end());
    std::rotate(got.begin(), it, got.end());
    EXPECT_EQ(got, want);
}

TEST(GraphCore, WheelRimEnclosesTheHub) {
    EmbeddedGraph emb = sp::test::wheel(2, 2);
    auto inside = interior_vertices_of_cycle(emb, {0, 1, 2, 3});
    EXPECT_EQ(inside, std::set<int>{4});
}

TEST(GraphCore, FacialTriangleEnclosesNothing) {
    EmbeddedGraph emb = sp::test::wheel(2, 2);
    auto inside = interior_vertices_of_cycle(emb, cycle_edges_from_vertices(emb.graph(), {4, 0, 1}));
    EXPECT_TRUE(inside.empty());
}

TEST(GraphCore, NestedTrianglesEncloseTheInnerTriangle) {
    std::vector<sp::test::PlaneVertex> vs = {{"o0", 1, 0, 0}, {"o1", 1, 10, 0.2}, {"o2", 1, 5, 9},
                                             {"i0", 1, 4, 2}, {"i1", 1, 6, 2.1}, {"i2", 1, 5, 4}};
    EmbeddedGraph emb = plane(vs, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    EXPECT_EQ(interior_vertices_of_cycle(emb, {0, 1, 2}), (std::set<int>{3, 4, 5}));
}

TEST(GraphCore, MonotonePathHasOneSourceAndOneSink) {
    ClusteredGraph g = build_clustered_graph({{{"a", 1}, {"b", 2}, {"c", 3}}, {{"a", "b"}, {"b", "c"}}});
    DirectedStripGraph d = orient_by_labels(g);
    EXPECT_EQ(d.sources(), std::vector<int>{0});
    EXPECT_EQ(d.sinks(), std::vector<int>{2});
}

TEST(GraphCore, OrientationOfTiesIsDeterministic) {
    ClusteredGraph g = build_clustered_graph({{{"a", 1}, {"b", 2}, {"c", 2}, {"d", 1}}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}});
    EXPECT_EQ(orient_by_labels(g).tail, orient_by_labels(g).tail);
}

TEST(GraphCore, StarCentreIsNeitherSourceNorSink) {
    ClusteredGraph g = build_clustered_graph({{{"v", 2}, {"u", 3}, {"d", 1}}, {{"v", "u"}, {"v", "d"}}});
    DirectedStripGraph d = orient_by_labels(g);
    EXPECT_FALSE(d.is_source(0));
    EXPECT_FALSE(d.is_sink(0));
}

TEST(GraphCore, SuppressingAPathKeepsItsLabelRange) {
    ClusteredGraph g = build_clustered_graph({{{"a", 1}, {"b", 2}, {"c", 1}}, {{"a", "b"}, {"b", "c"}}});
    SuppressResult r = suppress_degree_two(g, {0, 2});
    ASSERT_EQ(r.graph.num_edges(), 1);
    EXPECT_EQ(r.paths[0].min_label, 1);
    EXPECT_EQ(r.paths[0].max_label, 2);
    EXPECT_EQ(r.paths[0].vertices.size(), 3u);
}

TEST(GraphCore, SuppressingWithoutDegreeTwoIsIdentity) {
    ClusteredGraph g = build_clustered_graph({{{"v", 2}, {"a", 1}, {"b", 2}, {"c", 3}}, {{"v", "a"}, {"v", "b"}, {"v", "c"}}});
    SuppressResult r = suppress_degree_two(g, {});
    EXPECT_EQ(r.graph.num_vertices(), 4);
    EXPECT_EQ(r.graph.num_edges(), 3);
}
