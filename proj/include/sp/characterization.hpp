#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sp/graph.hpp"

namespace sp {

// Oriented walk as a dart sequence; closed walks wrap around.
struct Walk {
    std::vector<int> darts;
    bool closed = false;
    std::vector<int> vertices(const ClusteredGraph& g) const;
};

Walk walk_from_vertices(const ClusteredGraph& g, const std::vector<int>& vertices, bool closed = false);

// Algebraic intersection number in half units (so +-1 crossing = +-2).
int algebraic_intersection_half(const EmbeddedGraph& emb, const Walk& w1, const Walk& w2);

enum class CapCupKind { Cap, Cup };

struct CapCup {
    std::vector<int> path;   // vertices
    std::vector<int> darts;  // darts along the path
    CapCupKind kind = CapCupKind::Cap;
    int level = 0;
};

std::optional<CapCup> classify_cap_cup(const ClusteredGraph& g, const std::vector<int>& path);
std::optional<CapCup> classify_cap_cup_darts(const ClusteredGraph& g, const std::vector<int>& darts);

struct InterleavingPair {
    CapCup cap;
    CapCup cup;
    std::vector<int> shared;  // shared vertices in cap order
};

// Checks the interleaving conditions and fills in the shared path.
std::optional<InterleavingPair> make_interleaving_pair(const ClusteredGraph& g, const CapCup& cap, const CapCup& cup);

struct Feasibility {
    bool feasible = true;
    int ia_half = 0;
};

Feasibility pair_feasibility(const EmbeddedGraph& emb, const InterleavingPair& pair);

struct TrappedWitness {
    int vertex = -1;
    std::vector<int> cycle;  // vertices
    std::vector<int> cycle_edges;
};

struct PairWitness {
    InterleavingPair pair;
    int ia_half = 0;
};

struct HallWitness {
    std::vector<int> faces;  // deficient set of face ids in the normalized instance
};

struct CandidateWitness {
    int vertex = -1;  // vertex whose in/out darts alternate
};

using WitnessVariant = std::variant<std::monostate, PairWitness, TrappedWitness, HallWitness, CandidateWitness>;

struct Verdict {
    bool planar = true;
    WitnessVariant witness;
};

struct CheckOptions {
    long path_budget = 20000;     // cap/cup paths per level pair
    long cycle_budget = 200000;   // simple cycles for the trapped-vertex search
};

std::optional<TrappedWitness> find_trapped_vertex(const EmbeddedGraph& emb, const CheckOptions& opt = {});

InterleavingPair extract_interleaving(const EmbeddedGraph& emb, const std::vector<int>& p1, const std::vector<int>& p2);

enum class CheckMode { Exhaustive, Constructive };

Verdict check_embedded(const EmbeddedGraph& emb, CheckMode mode = CheckMode::Exhaustive, const CheckOptions& opt = {});

// ---- rotation-independent catalogue used by the oracle and the exhaustive check

// Half-unit contribution at one vertex: P1 passes with darts p (toward its predecessor) and q
// (toward its successor), P2 with r and t likewise; -1 marks a missing dart.
struct LocalTerm {
    int vertex = -1;
    int p = -1, q = -1, r = -1, t = -1;
};

struct PairSignature {
    std::vector<LocalTerm> terms;
    int example = -1;  // index into the catalogue pair list
};

struct PairCatalog {
    std::vector<InterleavingPair> pairs;       // one representative per signature
    std::vector<PairSignature> signatures;
    bool budget_exceeded = false;
};

PairCatalog build_pair_catalog(const ClusteredGraph& g, const CheckOptions& opt = {});

// Evaluates a local term with position lookup pos[d] and vertex degrees.
int local_term_half(const LocalTerm& t, const std::vector<int>& pos, const ClusteredGraph& g);
int signature_half(const PairSignature& s, const std::vector<int>& pos, const ClusteredGraph& g);

// Simple cycles as edge lists, capped by budget (returns false when the cap is hit).
bool enumerate_simple_cycles(const ClusteredGraph& g, long budget, std::vector<std::vector<int>>& out);

// Vertex sequence of a cycle given as an edge list.
std::vector<int> cycle_vertices(const ClusteredGraph& g, const std::vector<int>& edges);

std::string witness_kind(const WitnessVariant& w);

}  // namespace sp
