#include "sp/reductions.hpp"

#include <algorithm>
#include <deque>

namespace sp {

namespace {

ClusteredGraph relabel(const ClusteredGraph& g, const std::vector<int>& labels) {
    ClusteredGraph out;
    for (int v = 0; v < g.num_vertices(); ++v) out.add_vertex(g.name(v), labels[v]);
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
    return out;
}

}  // namespace

ClusteredGraph compact_clusters(const ClusteredGraph& g) {
    if (g.num_vertices() == 0) return g;
    auto [lo, hi] = std::minmax_element(g.gammas().begin(), g.gammas().end());
    std::vector<int> rank(*hi - *lo + 1, 0);
    for (int c : g.gammas()) rank[c - *lo] = 1;
    int k = 0;
    for (int& r : rank)
        if (r) r = ++k;
    std::vector<int> labels(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) labels[v] = rank[g.gamma(v) - *lo];
    return relabel(g, labels);
}

ClusteredGraph strip_to_three_clusters(const ClusteredGraph& g) {
    std::vector<int> labels(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) labels[v] = ((g.gamma(v) % 3) + 3) % 3;
    return relabel(g, labels);
}

ClusteredGraph three_cluster_tree_to_strip(const ClusteredGraph& g) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.gamma(v) < 0 || g.gamma(v) > 2)
            throw Error(ErrorKind::BadClusterRange, g.name(v) + " is not in cluster 0, 1 or 2");
    std::vector<std::vector<int>> comps = g.components();
    if (g.has_loops() || g.num_edges() != g.num_vertices() - static_cast<int>(comps.size()))
        throw Error(ErrorKind::NotATree, "input is not a forest");
    int n = g.num_vertices();
    std::vector<int> label(n, 0);
    std::vector<char> seen(n, 0);
    for (const auto& comp : comps) {
        int seed = *std::min_element(comp.begin(), comp.end(), [&](int a, int b) { return g.name(a) < g.name(b); });
        label[seed] = g.gamma(seed);
        seen[seed] = 1;
        std::deque<int> queue{seed};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int d : g.darts_at(u)) {
                int w = g.head(d);
                if (seen[w]) continue;
                int diff = ((g.gamma(w) - g.gamma(u)) % 3 + 3) % 3;
                label[w] = label[u] + (diff == 0 ? 0 : diff == 1 ? 1 : -1);
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return compact_clusters(relabel(g, label));
}

}  // namespace sp
