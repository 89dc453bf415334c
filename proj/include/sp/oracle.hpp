#pragma once

#include <optional>
#include <vector>

#include "sp/characterization.hpp"
#include "sp/graph.hpp"

namespace sp {

enum class OracleStatus { Planar, NotPlanar, BudgetExceeded };

struct OracleLimits {
    int max_vertices = 10;
    long max_rotation_systems = 20'000'000;  // leaves of the rotation search, summed over components
    CheckOptions check;
};

struct OracleResult {
    OracleStatus status = OracleStatus::NotPlanar;
    std::optional<EmbeddedGraph> embedding;  // a strip planar embedding when planar
    long rotation_systems = 0;               // complete rotation systems examined
};

// Brute force: tries every rotation system and outer face, deciding each by the
// forbidden-substructure characterization. Components are decided independently.
OracleResult oracle_decide(const ClusteredGraph& g, const OracleLimits& limits = {});

const char* oracle_status_name(OracleStatus s);

struct Subgraph {
    ClusteredGraph graph;
    std::vector<int> vertex_to_parent;
    std::vector<int> edge_to_parent;
};

// Subgraph induced by a vertex set (vertices keep their relative order).
Subgraph induced_subgraph(const ClusteredGraph& g, const std::vector<int>& vertices);

}  // namespace sp
