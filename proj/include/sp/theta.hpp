#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sp/graph.hpp"
#include "sp/pctree.hpp"
#include "sp/tree.hpp"

namespace sp {

struct ThetaInstance {
    int u = -1, v = -1;                          // poles in G
    std::vector<std::vector<int>> paths;         // vertex sequences from u to v
    std::vector<int> u_darts, v_darts;           // per path: dart leaving u, dart leaving v
    std::vector<std::pair<int, int>> intervals;  // per path: (min label, max label)
    int alpha = -1;

    // Tree made of the two stars around the poles joined by path alpha, plus a dummy
    // leaf at u marking the outer face.
    ClusteredGraph gprime;
    int gp_u = -1, gp_v = -1, gp_outer = -1;
    std::vector<int> u_leaf, v_leaf;             // per path (-1 for alpha): leaf vertex in gprime
    MasterMatrix master;                         // rows of gprime, outer leaf * in star rows
    BinaryMatrix trap;                           // rows keeping interior vertices inside their label range
    AmbiguousMatrix combined;                    // bridge rows, trap rows, star rows, closed
};

// Throws NotATheta unless g consists of two poles joined by at least three internally
// disjoint paths, at most one of them a direct edge.
ThetaInstance build_theta_instance(const ClusteredGraph& g);

// Trap rows over the columns of the instance's master matrix.
BinaryMatrix build_trap_matrix(const ClusteredGraph& g);

struct ThetaOptions {
    int max_paths = 10;
};

struct ThetaSolution {
    bool planar = false;
    std::vector<int> u_rotation, v_rotation;  // darts, clockwise
    std::optional<EmbeddedGraph> embedding;
    long orders_tried = 0;
};

// Throws SearchBudgetExceeded when the theta has more than max_paths paths.
ThetaSolution solve_theta(const ClusteredGraph& g, const ThetaOptions& opt = {});

}  // namespace sp
