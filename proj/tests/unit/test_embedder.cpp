#include <gtest/gtest.h>

#include "helpers.hpp"
#include "sp/characterization.hpp"
#include "sp/embedder.hpp"
#include "sp/io.hpp"

using namespace sp;
using sp::test::plane;

namespace {

Point pt(int xn, int xd, int y) { return {Rational(xn, xd), Rational(y)}; }

StripDrawing two_edges(Point a, Point b, Point c, Point d) {
    StripDrawing s;
    for (auto [n, k] : {std::pair{"a", 1}, {"b", 2}, {"c", 1}, {"d", 2}}) s.graph.add_vertex(n, k);
    s.graph.add_edge(0, 1);
    s.graph.add_edge(2, 3);
    s.position = {a, b, c, d};
    s.bends.assign(2, {});
    return s;
}

}  // namespace

TEST(Embedder, AlternatingQuadrilateralIsSemiSimple) {
    EmbeddedGraph emb = plane({{"a", 1, 0, 0}, {"b", 2, 1, 1}, {"c", 1, 2, 0.1}, {"d", 2, 1, -1}},
                              {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto faces = classify_faces(emb);
    ASSERT_EQ(faces.size(), 2u);
    for (const auto& f : faces) EXPECT_EQ(f.kind, FaceKind::SemiSimple);
}

TEST(Embedder, MonotoneFaceIsSimple) {
    EmbeddedGraph emb = plane({{"a", 1, 0, 0}, {"b", 2, 1, 1}, {"c", 3, 2, 0.1}, {"d", 2, 1, -1}},
                              {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (const auto& f : classify_faces(emb)) EXPECT_EQ(f.kind, FaceKind::Simple);
}

TEST(Embedder, AlternatingRotationIsNotACandidate) {
    ClusteredGraph g;
    g.add_vertex("v", 2);
    for (auto [n, k] : {std::pair{"a", 1}, {"b", 3}, {"c", 1}, {"d", 3}}) g.add_vertex(n, k);
    for (int i = 1; i <= 4; ++i) g.add_edge(0, i);
    std::vector<std::vector<int>> rot = {{0, 2, 4, 6}, {1}, {3}, {5}, {7}};
    EmbeddedGraph emb(g, rot, 0);
    EXPECT_EQ(find_alternating_vertex(emb), 0);
    try {
        classify_faces(emb);
        FAIL() << "expected NotCandidateEmbedding";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotCandidateEmbedding);
    }
    EXPECT_FALSE(embedder_decide(emb).planar);
}

TEST(Embedder, MonotonePathIsDrawn) {
    EmbeddedGraph emb = plane({{"a", 1, 0, 0}, {"b", 2, 1, 0.2}, {"c", 3, 2, 0}, {"d", 4, 3, 0.3}},
                              {{0, 1}, {1, 2}, {2, 3}});
    EmbedResult r = embed(emb);
    ASSERT_TRUE(r.verdict.planar);
    ASSERT_TRUE(r.drawing);
    EXPECT_TRUE(verify_strip_embedding(*r.drawing).ok());
    EXPECT_TRUE(verify_realizes(*r.drawing, emb).ok());
}

TEST(Embedder, TrappedWheelIsRejected) {
    EmbedResult r = embed(sp::test::wheel(2, 1));
    EXPECT_FALSE(r.verdict.planar);
    EXPECT_FALSE(r.drawing);
}

TEST(Embedder, AgreesWithTheCharacterizationOnRandomInstances) {
    Rng rng(41);
    int planar = 0;
    for (int i = 0; i < 100; ++i) {
        EmbeddedGraph emb = random_plane_strip_graph(rng, 5 + rng() % 8, 2 + rng() % 3, rng() % 5);
        bool want = check_embedded(emb).planar;
        EmbedResult r = embed(emb);
        EXPECT_EQ(r.verdict.planar, want) << "instance " << i;
        if (!r.verdict.planar) continue;
        ++planar;
        ASSERT_TRUE(r.drawing) << "instance " << i;
        EXPECT_TRUE(verify_strip_embedding(*r.drawing).ok()) << "instance " << i;
        EXPECT_TRUE(verify_realizes(*r.drawing, emb).ok()) << "instance " << i;
    }
    EXPECT_GT(planar, 0);
}

TEST(Embedder, NormalizedFacesAreSimpleOrSemiSimple) {
    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
        EmbeddedGraph emb = random_strip_planar_embedding(rng, 6 + rng() % 10, 3 + rng() % 3, 16, 1);
        NormalizedInstance n = normalize(emb);
        ASSERT_TRUE(n.valid);
        for (const auto& f : classify_faces(n.embedding)) {
            if (f.outer) EXPECT_EQ(f.kind, FaceKind::Simple) << "instance " << i;
            else EXPECT_NE(f.kind, FaceKind::Other) << "instance " << i;
        }
    }
}

TEST(Embedder, VerifierReportsOutOfStripVertices) {
    StripDrawing s = two_edges(pt(3, 2, 0), pt(5, 2, 0), pt(3, 2, 2), pt(5, 2, 2));
    EXPECT_TRUE(verify_strip_embedding(s).ok());
    s.position[2] = pt(5, 1, 2);
    EXPECT_EQ(verify_strip_embedding(s).kind, ViolationKind::OutOfStrip);
}

TEST(Embedder, VerifierReportsCrossings) {
    StripDrawing s = two_edges(pt(3, 2, 0), pt(5, 2, 1), pt(3, 2, 1), pt(5, 2, 0));
    Violation v = verify_strip_embedding(s);
    EXPECT_EQ(v.kind, ViolationKind::Crossing);
    EXPECT_FALSE(v.describe().empty());
}

TEST(Embedder, SvgMentionsEveryVertex) {
    EmbeddedGraph emb = plane({{"a", 1, 0, 0}, {"b", 2, 1, 0.2}}, {{0, 1}});
    EmbedResult r = embed(emb);
    ASSERT_TRUE(r.drawing);
    std::string svg = render_svg(*r.drawing);
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find(">a<"), std::string::npos);
}

TEST(Io, RoundTripKeepsTheEmbedding) {
    EmbeddedGraph emb = sp::test::wheel(2, 2);
    Instance in = parse_instance(embedding_to_json(emb));
    ASSERT_TRUE(in.embedded());
    EmbeddedGraph back = in.embedding();
    EXPECT_EQ(back.rotations(), emb.rotations());
    EXPECT_EQ(trace_faces(back).face_of_dart[back.outer_dart()], trace_faces(back).face_of_dart[emb.outer_dart()]);
}

TEST(Io, ParsesIntegerIdsAndParities) {
    Instance in = parse_instance_text(
        R"({"vertices":[{"id":0,"cluster":1},{"id":1,"cluster":2}],"edges":[[0,1]],"crossing_parities":[]})");
    EXPECT_EQ(in.graph.num_vertices(), 2);
    EXPECT_FALSE(in.embedded());
    EXPECT_EQ(in.graph.name(1), "1");
}

TEST(Io, MalformedInputIsRejected) {
    auto kind_of = [](const std::string& text) -> std::optional<ErrorKind> {
        try {
            parse_instance_text(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return std::nullopt;
    };
    EXPECT_EQ(kind_of("{"), ErrorKind::InvalidInput);
    EXPECT_EQ(kind_of(R"({"edges":[]})"), ErrorKind::InvalidInput);
    EXPECT_EQ(kind_of(R"({"vertices":[{"id":"a"}],"edges":[]})"), ErrorKind::InvalidInput);
    EXPECT_EQ(kind_of(R"({"vertices":[{"id":"a","cluster":1},{"id":"b","cluster":3}],"edges":[["a","b"]]})"),
              ErrorKind::StripViolation);
}

TEST(Io, NonStripInputIsAllowedWhenRequested) {
    ParseOptions opt;
    opt.strip = false;
    Instance in = parse_instance_text(
        R"({"vertices":[{"id":"a","cluster":0},{"id":"b","cluster":2}],"edges":[["a","b"]]})", opt);
    EXPECT_EQ(in.graph.gamma(1), 2);
}

TEST(Io, MatrixTextWithComments) {
    AmbiguousMatrix m = parse_matrix("# comment\n10*\n011\n\n");
    EXPECT_EQ(m.rows.size(), 2u);
    EXPECT_EQ(m.num_columns, 3);
    EXPECT_FALSE(is_binary(m));
    AmbiguousMatrix b = parse_matrix("10\n01\n");
    ASSERT_TRUE(is_binary(b));
    EXPECT_EQ(format_matrix(to_binary(b)), "10\n01\n");
    EXPECT_THROW(parse_matrix("10\n1\n"), Error);
}
