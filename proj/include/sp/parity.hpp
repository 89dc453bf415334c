#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "sp/embedder.hpp"
#include "sp/graph.hpp"

namespace sp {

// Combinatorial drawing: rotation system, crossing parity per edge pair, and for every
// vertex x the parity of crossings between each edge and a fixed ray from x to infinity.
// The ray leaves x in the corner just before rotation[x][0].
struct ParityDrawing {
    ClusteredGraph graph;
    std::vector<std::vector<int>> rotation;     // darts leaving each vertex, clockwise
    std::vector<std::vector<uint8_t>> cr;       // edge x edge, symmetric; diagonal unused
    std::vector<std::vector<uint8_t>> ray;      // edge x vertex
    // Optional cluster range visited by each edge; empty means within its endpoints' labels.
    std::vector<std::pair<int, int>> edge_span;

    static ParityDrawing from_embedding(const EmbeddedGraph& emb);
    int parity(int e, int f) const { return cr[e][f]; }
    void flip(int e, int f);
    EmbeddedGraph as_embedding(int outer_dart) const;
};

enum class Evenness { Even, IndependentlyEven, Neither };
const char* evenness_name(Evenness e);

struct EvennessReport {
    Evenness kind = Evenness::Even;
    std::vector<std::pair<int, int>> odd_independent;
    std::vector<std::pair<int, int>> odd_adjacent;
};

EvennessReport evenness_report(const ParityDrawing& d);

// Flips cr(e, f) for every edge f != e incident to v, and the ray parity of e at v.
ParityDrawing pull_edge_over_vertex(const ParityDrawing& d, int e, int v);
void pull_in_place(ParityDrawing& d, int e, int v);

// Swaps two edge ends that are consecutive in the rotation at v and flips their parity.
void switch_in_place(ParityDrawing& d, int v, int pos);

// Replaces every edge joining clusters more than one apart by a strictly monotone path.
// Old edge ids are kept by the piece ending at edge.v; new vertices sit next to edge.u.
ParityDrawing subdivide_bounded_edges(const ParityDrawing& d);

// Per face (in trace_faces order) the winding parity of its facial curve around each vertex.
std::vector<std::vector<int>> face_windings(const ParityDrawing& d);

struct OuterFaceCount {
    int count = 0;
    std::vector<int> outer_faces;  // face ids in trace_faces order
    FaceMap faces;
};

// Faces whose curve winds an odd number of times around the reference vertex 0.
OuterFaceCount count_outer_faces(const ParityDrawing& d);

struct SplitRecord {
    int vertex = -1;      // vertex that keeps the cycle edges
    int new_vertex = -1;
    int new_edge = -1;
    long potential_before = 0, potential_after = 0;  // sum of cubed degrees
};

struct OddRemovalResult {
    ParityDrawing drawing;
    std::vector<SplitRecord> splits;
};

// True if g is a subdivision of a simple 3-connected graph.
bool is_subdivision_of_3connected(const ClusteredGraph& g);

// Local redrawings and vertex splits turning an independently even drawing into an even one.
OddRemovalResult remove_odd_crossings_3connected(const ParityDrawing& d);

// cr(e1,e3) + cr(e1,e4) + cr(e2,e3) + cr(e2,e4) mod 2.
int separation_parity(const ParityDrawing& d, int v, int e1, int e2, int e3, int e4);

struct BlockNormalization {
    ParityDrawing drawing;
    int switches = 0;
    std::vector<int> pulled;  // edges pulled over v
};

// Makes every edge of L cross every edge of R evenly by pulling edges over v. When L and R
// are not two consecutive blocks of the rotation, switchings first move them into blocks.
// Throws ParityObstruction when the four-term sum is odd for some quadruple.
BlockNormalization normalize_rotation_block(const ParityDrawing& d, int v, const std::vector<int>& L,
                                            const std::vector<int>& R);

struct WeakHtResult {
    EmbeddedGraph embedding;
    StripDrawing drawing;
    int outer_face = -1;
    int outer_face_count = 0;
};

// Embedding with the rotation system of an even drawing and one of its outer faces.
WeakHtResult weak_ht_embed(const ParityDrawing& d);

// Moves the ray of v clockwise past the first k darts of its rotation (the rotation list is
// rotated accordingly). The drawing is unchanged; only its description changes.
void reanchor_ray(ParityDrawing& d, int v, int k);

// Random evenness-preserving perturbation that stays local to vertices: full twists of all
// edges around a vertex, and ray re-anchoring.
ParityDrawing perturb_even(const ParityDrawing& d, std::mt19937_64& rng, int k = 32);

// Random pulls of edges over their own endpoints; keeps independent evenness.
ParityDrawing perturb_independently_even(const ParityDrawing& d, std::mt19937_64& rng, int k = 32);

// Pulls one edge over every vertex of the graph; keeps evenness but changes the windings.
ParityDrawing wrap_edge_around_graph(const ParityDrawing& d, int e);

}  // namespace sp
