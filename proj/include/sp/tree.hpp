#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sp/graph.hpp"
#include "sp/pctree.hpp"

namespace sp {

// Subdivided star with one leg per path from v to a leaf of the tree; leg labels copied by distance.
ClusteredGraph build_gv_star(const ClusteredGraph& g, int v);

// Leaves of a tree (degree-1 vertices) in increasing id order.
std::vector<int> tree_leaves(const ClusteredGraph& g);

// One row per edge whose both sides contain at least two leaves; columns follow tree_leaves.
BinaryMatrix build_bridge_rows(const ClusteredGraph& g);

struct MasterOptions {
    int root = -1;                // -1: degree >= 3 vertex with the least name
    std::set<int> star_exempt;    // leaves whose columns are * in every star row
};

struct MasterMatrix {
    AmbiguousMatrix matrix;
    std::vector<int> columns;            // leaf vertex per column
    std::vector<std::string> blocks;     // per row: "bridge" or the star center name
    int root = -1;
    int bridge_rows = 0;
};

MasterMatrix assemble_master(const ClusteredGraph& g, const MasterOptions& opt = {});

struct TreeSolution {
    bool planar = false;
    std::vector<int> leaf_order;  // leaf vertices in circular order
    std::optional<EmbeddedGraph> embedding;
    MasterMatrix master;
    int failing_row = -1;
};

TreeSolution solve_tree(const ClusteredGraph& g);

// c-planarity of a tree with clusters {0,1,2} via the reduction to a strip instance.
bool cplanarity_three_cluster_tree(const ClusteredGraph& g);

}  // namespace sp
