#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "sp/characterization.hpp"
#include "sp/graph.hpp"

namespace sp {

using Rational = boost::multiprecision::cpp_rational;

struct Point {
    Rational x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// Strip drawing: vertex x(v) lies strictly between gamma(v) and gamma(v)+1; edges are polylines.
struct StripDrawing {
    ClusteredGraph graph;
    std::vector<Point> position;             // per vertex
    std::vector<std::vector<Point>> bends;   // per edge, interior points from edge.u to edge.v
    std::vector<Point> polyline(int e) const;
};

enum class ViolationKind { None, Crossing, VertexOnEdge, DoubleBoundaryHit, OutOfStrip, RotationMismatch, OuterFaceMismatch };

struct Violation {
    ViolationKind kind = ViolationKind::None;
    int a = -1;  // edge or vertex
    int b = -1;  // second edge
    int line = 0;
    bool ok() const { return kind == ViolationKind::None; }
    std::string describe() const;
};

Violation verify_strip_embedding(const StripDrawing& d);
// Checks that the drawing realizes the rotation system and outer face of emb (same graph ids).
Violation verify_realizes(const StripDrawing& d, const EmbeddedGraph& emb);

// ---- normalization

// Normalized instance: every intra-cluster component of the input is contracted to one vertex,
// edges spanning several clusters are subdivided, and monotone chord paths split faces until
// every internal face is simple or semi-simple and the outer face is simple.
struct NormalizedInstance {
    EmbeddedGraph input;
    EmbeddedGraph embedding;  // the normalized graph
    bool valid = true;        // false when an intra-cluster cycle encloses other clusters
    std::string invalid_reason;

    std::vector<int> component_of;                // input vertex -> component
    std::vector<std::vector<int>> components;     // component -> input vertices
    std::vector<int> vertex_component;            // normalized vertex -> component, -1 for added vertices
    std::vector<int> origin_dart;                 // normalized dart -> input dart at a component vertex, else -1
    std::vector<int> edge_origin;                 // normalized edge -> input edge, -1 for chords
    std::vector<std::vector<int>> pieces;         // input edge -> normalized edges from edge.u to edge.v
    int subdivision_vertices = 0;
    int chord_paths = 0;
};

NormalizedInstance normalize(const EmbeddedGraph& emb);

enum class FaceKind { Simple, SemiSimple, Other };

struct FaceInfo {
    int face = -1;
    FaceKind kind = FaceKind::Other;
    bool outer = false;
    int length = 0;
    std::vector<int> minima;  // local minimum vertices along the walk, one per corner
    std::vector<int> maxima;
};

// Throws NotCandidateEmbedding when in/out darts alternate at some vertex.
std::vector<FaceInfo> classify_faces(const EmbeddedGraph& emb);

// Vertex whose incoming and outgoing darts alternate, or -1.
int find_alternating_vertex(const EmbeddedGraph& emb);

struct ExtremeAssignment {
    bool saturated = false;
    std::vector<std::pair<int, int>> pairs;  // (source or sink vertex, face)
    std::vector<int> hall_violator;          // faces, when not saturated
    int num_extremes = 0;                    // sources + sinks
    int demand = 0;                          // internal semi-simple faces + 2
};

ExtremeAssignment assign_extremes(const EmbeddedGraph& emb, const std::vector<FaceInfo>& faces);

// Euler identity on the subgraph spanned by the internal semi-simple faces F of a normalized
// instance, after suppressing degree-2 vertices that are no extreme of a face in F. Per connected
// piece: |V| = |F| + sum over the other faces f' of (|f'|/2 - 1) + 2, checked in doubled form.
struct FancyEuler {
    bool holds = true;
    bool quadrilaterals = true;  // every face of F has four corners after suppression
    int pieces = 0;
    int fancy_faces = 0;
    std::vector<std::pair<long, long>> sides;  // per piece: 2|V| and 2|F| + sum(|f'| - 2) + 4
};

FancyEuler fancy_face_euler(const EmbeddedGraph& normalized, const std::vector<FaceInfo>& faces);

// Drawing of the normalized instance followed by undoing the normalization.
StripDrawing build_strip_drawing(const NormalizedInstance& n, const std::vector<FaceInfo>& faces,
                                 const ExtremeAssignment& a);

struct EmbedResult {
    Verdict verdict;
    std::optional<StripDrawing> drawing;
};

EmbedResult embed(const EmbeddedGraph& emb);
Verdict embedder_decide(const EmbeddedGraph& emb);

std::string render_svg(const StripDrawing& d);

}  // namespace sp
