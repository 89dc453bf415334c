#pragma once

#include "sp/graph.hpp"

namespace sp {

// Same vertices and edges; cluster of v becomes gamma(v) mod 3 (values 0, 1, 2).
ClusteredGraph strip_to_three_clusters(const ClusteredGraph& g);

// Strip instance of a tree with clusters {0,1,2}: breadth-first propagation from the
// lexicographically least vertex of each component, then compaction to 1..k.
// Throws NotATree or BadClusterRange.
ClusteredGraph three_cluster_tree_to_strip(const ClusteredGraph& g);

// Rank-compresses occupied cluster indices to 1..k (relative order kept).
ClusteredGraph compact_clusters(const ClusteredGraph& g);

}  // namespace sp
