#include "sp/tree.hpp"

#include <algorithm>
#include <map>

#include "sp/reductions.hpp"
#include "sp/star.hpp"

namespace sp {

namespace {

constexpr int kFar = 1 << 30;

struct Rooted {
    std::vector<int> parent;        // -1 at the root
    std::vector<int> parent_dart;   // dart from parent to vertex
    std::vector<int> order;         // preorder
};

Rooted root_tree(const ClusteredGraph& g, int root) {
    Rooted r;
    int n = g.num_vertices();
    r.parent.assign(n, -2);
    r.parent_dart.assign(n, -1);
    r.parent[root] = -1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        r.order.push_back(x);
        for (int d : g.darts_at(x)) {
            int y = g.head(d);
            if (r.parent[y] != -2) continue;
            r.parent[y] = x;
            r.parent_dart[y] = d;
            stack.push_back(y);
        }
    }
    return r;
}

int default_root(const ClusteredGraph& g) {
    int root = -1;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) >= 3 && (root < 0 || g.name(v) < g.name(root))) root = v;
    return root;
}

}  // namespace

std::vector<int> tree_leaves(const ClusteredGraph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

ClusteredGraph build_gv_star(const ClusteredGraph& g, int v) {
    if (!g.is_tree()) throw Error(ErrorKind::NotATree, "input is not a tree");
    if (g.degree(v) < 3) throw Error(ErrorKind::LowDegree, g.name(v) + " has degree below three");
    Rooted r = root_tree(g, v);
    ClusteredGraph s;
    int c = s.add_vertex(g.name(v), g.gamma(v));
    for (int leaf : tree_leaves(g)) {
        std::vector<int> path;
        for (int x = leaf; x != v; x = r.parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        int prev = c;
        for (size_t i = 0; i < path.size(); ++i) {
            int y = s.add_vertex(g.name(leaf) + "/" + std::to_string(i + 1), g.gamma(path[i]));
            s.add_edge(prev, y);
            prev = y;
        }
    }
    return s;
}

BinaryMatrix build_bridge_rows(const ClusteredGraph& g) {
    if (!g.is_tree()) throw Error(ErrorKind::NotATree, "input is not a tree");
    std::vector<int> leaves = tree_leaves(g);
    int L = static_cast<int>(leaves.size());
    std::vector<int> col(g.num_vertices(), -1);
    for (int i = 0; i < L; ++i) col[leaves[i]] = i;
    Rooted r = root_tree(g, 0);
    std::vector<std::vector<int>> below(g.num_vertices());
    BinaryMatrix rows;
    std::set<std::vector<int>> seen;
    for (int i = static_cast<int>(r.order.size()) - 1; i >= 0; --i) {
        int x = r.order[i];
        if (col[x] >= 0) below[x].push_back(col[x]);
        if (r.parent[x] >= 0) {
            int cnt = static_cast<int>(below[x].size());
            if (cnt >= 2 && L - cnt >= 2) {
                std::vector<int> row(L, 0);
                for (int c : below[x]) row[c] = 1;
                if (seen.insert(row).second) rows.push_back(row);
            }
            auto& pb = below[r.parent[x]];
            pb.insert(pb.end(), below[x].begin(), below[x].end());
        }
    }
    return rows;
}

MasterMatrix assemble_master(const ClusteredGraph& g, const MasterOptions& opt) {
    if (!g.is_tree()) throw Error(ErrorKind::NotATree, "input is not a tree");
    MasterMatrix mm;
    mm.columns = tree_leaves(g);
    int L = static_cast<int>(mm.columns.size());
    mm.matrix.num_columns = L;
    for (const auto& row : build_bridge_rows(g)) {
        mm.matrix.rows.push_back(row);
        mm.matrix.row_tags.push_back("bridge");
        mm.blocks.push_back("bridge");
    }
    mm.bridge_rows = static_cast<int>(mm.matrix.rows.size());
    mm.root = opt.root >= 0 ? opt.root : default_root(g);
    if (mm.root < 0) return mm;

    int n = g.num_vertices();
    Rooted r = root_tree(g, mm.root);
    auto in_suppressed = [&](int x) { return x == mm.root || g.degree(x) != 2; };
    // parent in the suppressed tree, depth there, and the connecting path
    std::vector<int> sdepth(n, 0);
    std::vector<std::vector<int>> up_path(n);
    for (int x : r.order) {
        if (x == mm.root || !in_suppressed(x)) continue;
        std::vector<int> path{x};
        int y = r.parent[x];
        while (!in_suppressed(y)) {
            path.push_back(y);
            y = r.parent[y];
        }
        path.push_back(y);
        sdepth[x] = sdepth[y] + 1;
        up_path[x] = path;
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) centers.push_back(v);
    std::stable_sort(centers.begin(), centers.end(), [&](int a, int b) { return sdepth[a] > sdepth[b]; });

    int lo = g.min_cluster(), hi = g.max_cluster(), W = hi - lo + 1;
    std::vector<int> col(n, -1);
    for (int i = 0; i < L; ++i) col[mm.columns[i]] = i;
    for (int v : centers) {
        // first-reach tables along every path from v
        Rooted rv = root_tree(g, v);
        std::vector<std::vector<int>> reach_at(n);
        std::vector<int> dist(n, 0);
        std::vector<std::vector<int>> reach(L, std::vector<int>(W, kFar));
        for (int x : rv.order) {
            if (x == v) {
                reach_at[x].assign(W, kFar);
                continue;
            }
            int p = rv.parent[x];
            dist[x] = dist[p] + 1;
            reach_at[x] = reach_at[p];
            int& slot = reach_at[x][g.gamma(x) - lo];
            slot = std::min(slot, dist[x] - 1);
            if (col[x] >= 0 && !opt.star_exempt.count(x)) reach[col[x]] = reach_at[x];
        }
        std::vector<StarInterval> ivs = star_intervals_from_reach(g.gamma(v), lo, reach);
        int pmin = kFar, pmax = -kFar;
        if (v != mm.root) {
            for (int x : up_path[v]) {
                pmin = std::min(pmin, g.gamma(x));
                pmax = std::max(pmax, g.gamma(x));
            }
        }
        // intervals strictly containing the interval of the path to the parent are dropped
        // before the closure, so they do not spread ambiguity to the surviving rows
        std::vector<StarInterval> kept;
        for (const auto& iv : ivs)
            if (v == mm.root || !(iv.s < pmin && pmax < iv.b)) kept.push_back(iv);
        AmbiguousMatrix mv = matrix_from_intervals(L, kept);
        for (size_t i = 0; i < mv.rows.size(); ++i) {
            mm.matrix.rows.push_back(mv.rows[i]);
            mm.matrix.row_tags.push_back(g.name(v) + mv.row_tags[i]);
            mm.blocks.push_back(g.name(v));
        }
    }
    mm.matrix.stair_closure();
    return mm;
}

TreeSolution solve_tree(const ClusteredGraph& g) {
    if (!g.is_tree()) throw Error(ErrorKind::NotATree, "input is not a tree");
    TreeSolution sol;
    sol.master = assemble_master(g);
    if (sol.master.root < 0) {
        sol.planar = true;
        sol.leaf_order = sol.master.columns;
        sol.embedding = EmbeddedGraph(g, default_rotation(g), g.num_darts() > 0 ? 0 : -1);
        return sol;
    }
    CircularResult r = test_ambiguous(sol.master.matrix);
    if (!r.feasible) {
        sol.failing_row = r.failing_row;
        return sol;
    }
    sol.planar = true;
    for (int c : r.order) sol.leaf_order.push_back(sol.master.columns[c]);
    sol.embedding = tree_embedding_from_leaf_order(g, sol.leaf_order);
    return sol;
}

bool cplanarity_three_cluster_tree(const ClusteredGraph& g) {
    return solve_tree(three_cluster_tree_to_strip(g)).planar;
}

}  // namespace sp
