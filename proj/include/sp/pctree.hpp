#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sp/errors.hpp"

namespace sp {

// Unrooted PC-tree over leaves labelled by column ids.
class PCTree {
public:
    enum class NodeType { Leaf, P, C };

    PCTree() = default;
    explicit PCTree(int num_columns);  // star over columns 0..n-1
    explicit PCTree(const std::vector<int>& columns);

    // Restricts the captured orders to those where `zeros` and `ones` are circular arcs.
    // zeros and ones must partition the current leaves. Returns false (tree unchanged) if infeasible.
    bool apply_row(const std::vector<int>& zeros, const std::vector<int>& ones);

    void delete_leaves(const std::vector<int>& columns);

    std::vector<int> leaves() const;
    int num_leaves() const;
    bool has_leaf(int column) const;

    // One captured circular order.
    std::vector<int> some_order() const;
    // Every captured circular order once, as its canonical representative.
    std::vector<std::vector<int>> allowed_orders(int bound = 12) const;
    // Order of all leaves captured by the tree whose restriction to the given columns is `partial`
    // (cyclically, up to reflection). Returns nullopt if none exists.
    std::optional<std::vector<int>> extend_order(const std::vector<int>& partial) const;

    // Leaf sets forced to be consecutive: both sides of internal edges and runs of C-node neighbours.
    std::vector<std::vector<int>> extract_constraints() const;

    // Node inspection (used by tests and the CLI report).
    int num_nodes() const;
    int count_type(NodeType t) const;
    std::string to_string() const;

private:
    struct Node {
        NodeType type = NodeType::P;
        int column = -1;
        std::vector<int> adj;  // cyclic order for C-nodes
        bool alive = true;
    };

    int new_node(NodeType t, int column = -1);
    void replace_neighbor(int x, int old_nb, int new_nb);
    void remove_neighbor(int x, int nb);
    void reset_star(const std::vector<int>& columns);
    int any_internal() const;
    void emit(int x, int parent, std::vector<int>& out) const;
    void collect_leaves(int x, int parent, std::vector<int>& out) const;

    std::vector<Node> nodes_;
    std::vector<int> leaf_node_;  // column -> node id, -1 if absent
};

// Lexicographically least rotation/reflection of a circular order.
std::vector<int> canonical_circular(const std::vector<int>& order);

// True if `set` occupies a circular arc of `order` (restricted to the columns in order).
bool is_circular_arc(const std::vector<int>& order, const std::vector<int>& set);

using BinaryMatrix = std::vector<std::vector<int>>;  // rows of 0/1

struct CircularResult {
    bool feasible = false;
    std::vector<int> order;
    int failing_row = -1;
};

CircularResult test_circular_ones(const BinaryMatrix& m, int num_columns);

// Rows over {0,1,*}; * is stored as 2.
struct AmbiguousMatrix {
    int num_columns = 0;
    std::vector<std::vector<int>> rows;
    std::vector<std::string> row_tags;  // optional provenance per row

    static constexpr int kStar = 2;
    static AmbiguousMatrix parse(const std::vector<std::string>& lines);
    bool stair_property() const;
    // Replaces entries by * so that every * has only * below it.
    void stair_closure();
    std::string row_string(int i) const;
};

CircularResult test_ambiguous(const AmbiguousMatrix& m);

// True if the order satisfies every row of the matrix on its non-* columns.
bool order_satisfies(const AmbiguousMatrix& m, const std::vector<int>& order);
bool order_satisfies(const BinaryMatrix& m, const std::vector<int>& order);

enum class TuckerType { None, M1, M2, Other };

struct TuckerObstruction {
    TuckerType type = TuckerType::None;
    std::vector<int> rows;
    std::vector<int> columns;
};

TuckerObstruction tucker_scan(const BinaryMatrix& m, int num_columns);
const char* tucker_type_name(TuckerType t);

// Matrix families used by tests and the CLI.
BinaryMatrix tucker_m1(int num_columns);
BinaryMatrix tucker_m2();

// Consecutive-ones test by brute force over column permutations (small inputs only).
bool brute_force_consecutive_ones(const BinaryMatrix& m, int num_columns);
// Circular-ones test by brute force over circular orders (small inputs only).
std::optional<std::vector<int>> brute_force_circular_ones(const BinaryMatrix& m, int num_columns);
std::optional<std::vector<int>> brute_force_ambiguous(const AmbiguousMatrix& m);

}  // namespace sp
