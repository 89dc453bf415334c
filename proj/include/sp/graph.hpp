#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sp/errors.hpp"

namespace sp {

struct Edge {
    int u = -1;
    int v = -1;
};

// Darts are edge ends: dart 2e leaves edges[e].u, dart 2e+1 leaves edges[e].v.
inline int dart_edge(int d) { return d >> 1; }
inline int dart_rev(int d) { return d ^ 1; }
inline int make_dart(int e, int side) { return 2 * e + side; }

class ClusteredGraph {
public:
    int add_vertex(const std::string& name, int cluster);
    int add_edge(int u, int v);

    int num_vertices() const { return static_cast<int>(names_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_darts() const { return 2 * num_edges(); }

    const std::string& name(int v) const { return names_[v]; }
    int gamma(int v) const { return gamma_[v]; }
    void set_gamma(int v, int c) { gamma_[v] = c; }
    const std::vector<int>& gammas() const { return gamma_; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    int tail(int d) const { return (d & 1) ? edges_[d >> 1].v : edges_[d >> 1].u; }
    int head(int d) const { return tail(d ^ 1); }
    int other(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }
    bool is_loop(int e) const { return edges_[e].u == edges_[e].v; }

    // Darts leaving v in insertion order (a loop contributes both of its darts).
    const std::vector<int>& darts_at(int v) const { return darts_at_[v]; }
    int degree(int v) const { return static_cast<int>(darts_at_[v].size()); }

    std::optional<int> find_vertex(const std::string& name) const;
    int min_cluster() const;
    int max_cluster() const;
    int num_clusters() const { return num_vertices() == 0 ? 0 : max_cluster() - min_cluster() + 1; }

    std::vector<std::vector<int>> components() const;
    bool is_connected() const;
    bool is_tree() const;
    bool has_loops() const;
    // Edge between u and v with the smallest id, if any.
    std::optional<int> find_edge(int u, int v) const;
    // Darts of a path given by its vertex sequence (first matching edge per step).
    std::vector<int> darts_of_vertex_path(const std::vector<int>& vertices) const;

    // Throws StripViolation if some edge joins clusters more than one apart.
    void validate_strip() const;

private:
    std::vector<std::string> names_;
    std::vector<int> gamma_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> darts_at_;
    std::unordered_map<std::string, int> index_;
};

struct GraphSpec {
    std::vector<std::pair<std::string, int>> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    bool allow_loops = false;
};

// Validates the description and compacts occupied cluster indices to 1..k.
ClusteredGraph build_clustered_graph(const GraphSpec& spec);

struct FacialWalk {
    int id = -1;
    std::vector<int> darts;
    int size() const { return static_cast<int>(darts.size()); }
};

struct FaceMap {
    std::vector<FacialWalk> faces;
    std::vector<int> face_of_dart;
    int outer = -1;
};

class EmbeddedGraph {
public:
    EmbeddedGraph() = default;
    // rotation[v] lists the darts leaving v in clockwise order; outer_dart is any dart of the outer face.
    EmbeddedGraph(ClusteredGraph g, std::vector<std::vector<int>> rotation, int outer_dart);

    const ClusteredGraph& graph() const { return g_; }
    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rot_; }
    int outer_dart() const { return outer_dart_; }
    void set_outer_dart(int d) { outer_dart_ = d; }

    int position(int d) const { return pos_[d]; }
    int cw_next(int d) const;
    int cw_prev(int d) const;
    // Next dart along the facial walk containing d.
    int face_next(int d) const { return cw_next(dart_rev(d)); }

    FaceMap faces() const;
    int euler_characteristic() const;

private:
    ClusteredGraph g_;
    std::vector<std::vector<int>> rot_;
    std::vector<int> pos_;
    int outer_dart_ = -1;
};

FaceMap trace_faces(const EmbeddedGraph& emb);

struct ContractResult {
    EmbeddedGraph embedding;
    std::vector<int> vertex_map;  // old vertex -> new vertex
    std::vector<int> edge_map;    // old edge -> new edge, -1 for the contracted edge
};

ContractResult contract_intra_cluster_edge(const EmbeddedGraph& emb, int e);

struct SplitResult {
    EmbeddedGraph embedding;
    int new_vertex = -1;
    int new_edge = -1;
};

// Moves the darts in `moved` (a contiguous arc of v's rotation) to a new vertex joined to v.
SplitResult split_vertex(const EmbeddedGraph& emb, int v, const std::vector<int>& moved);

// Vertices strictly inside the cycle given by its edge ids.
std::set<int> interior_vertices_of_cycle(const EmbeddedGraph& emb, const std::vector<int>& cycle_edges);

// Ordered edge list of a simple cycle given by vertex sequence (consecutive, closing back).
std::vector<int> cycle_edges_from_vertices(const ClusteredGraph& g, const std::vector<int>& cycle);

struct DirectedStripGraph {
    ClusteredGraph base;
    std::vector<int> tail;  // per edge
    int head(int e) const { return base.other(e, tail[e]); }
    std::vector<int> sources() const;
    std::vector<int> sinks() const;
    bool is_source(int v) const;
    bool is_sink(int v) const;
};

DirectedStripGraph orient_by_labels(const ClusteredGraph& g);
// Orientation of a single edge under the same rule; returns the tail.
int oriented_tail(const ClusteredGraph& g, int e);

struct SuppressedPath {
    std::vector<int> vertices;  // original ids, endpoint to endpoint
    int min_label = 0;
    int max_label = 0;
};

struct SuppressResult {
    ClusteredGraph graph;
    std::vector<int> vertex_map;         // original -> new, -1 if suppressed
    std::vector<int> original_vertex;    // new -> original
    std::vector<SuppressedPath> paths;   // per new edge
};

SuppressResult suppress_degree_two(const ClusteredGraph& g, const std::set<int>& keep);

// Canonical rotation: darts at v in the given order, rotated so the smallest dart comes first.
std::vector<std::vector<int>> default_rotation(const ClusteredGraph& g);

}  // namespace sp
