#pragma once

#include <optional>
#include <vector>

#include "sp/graph.hpp"
#include "sp/pctree.hpp"

namespace sp {

// One interval (s,b) of restrictions on the rotation at the center, with the legs
// (column indices) that reach s before b (E) and b before s (E').
struct StarInterval {
    int s = 0;
    int b = 0;
    std::vector<int> E;
    std::vector<int> Eprime;
};

// Intervals of a star given by the center label and the label sequence of each leg
// (excluding the center), sorted into the block order described in the README.
std::vector<StarInterval> star_intervals(int center_label, const std::vector<std::vector<int>>& legs);

// Same, from first-reach tables: reach[leg][label - min_label] is the index along the leg of the
// first vertex with that label (a large value if none).
std::vector<StarInterval> star_intervals_from_reach(int center_label, int min_label,
                                                   const std::vector<std::vector<int>>& reach);

// Rows 0 on E, 1 on E', * elsewhere, in the given order, with the stair closure applied.
AmbiguousMatrix matrix_from_intervals(int num_columns, const std::vector<StarInterval>& intervals);

// Rows of the ambiguous matrix over the leg columns, in interval order, with the stair closure applied.
AmbiguousMatrix star_matrix(int center_label, const std::vector<std::vector<int>>& legs);

struct StarInfo {
    int center = -1;                         // -1 for a path
    std::vector<int> leg_darts;              // dart at the center per leg
    std::vector<std::vector<int>> leg_vertices;  // vertices along each leg, excluding the center
    std::vector<std::vector<int>> leg_labels;
};

// Throws NotASubdividedStar unless g is a tree with at most one vertex of degree >= 3.
StarInfo analyze_star(const ClusteredGraph& g);

std::vector<StarInterval> interval_order(const ClusteredGraph& g);
AmbiguousMatrix build_star_matrix(const ClusteredGraph& g);

struct StarSolution {
    bool planar = false;
    std::vector<int> center_rotation;  // darts at the center, clockwise
    std::optional<EmbeddedGraph> embedding;
    AmbiguousMatrix matrix;
    int failing_row = -1;
};

StarSolution solve_star(const ClusteredGraph& g);

// Embedding of a tree whose rotations come from a circular order of its leaves.
EmbeddedGraph tree_embedding_from_leaf_order(const ClusteredGraph& g, const std::vector<int>& leaf_order);

}  // namespace sp
