#include "sp/star.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sp {

std::vector<StarInterval> star_intervals_from_reach(int center_label, int min_label,
                                                   const std::vector<std::vector<int>>& reach) {
    int width = reach.empty() ? 0 : static_cast<int>(reach[0].size());
    std::map<std::pair<int, int>, StarInterval> found;
    for (int s = min_label; s < center_label; ++s)
        for (int b = center_label + 1; b < min_label + width; ++b) {
            StarInterval iv;
            iv.s = s;
            iv.b = b;
            for (int j = 0; j < static_cast<int>(reach.size()); ++j) {
                int fs = reach[j][s - min_label], fb = reach[j][b - min_label];
                if (fs < fb) iv.E.push_back(j);
                else if (fb < fs) iv.Eprime.push_back(j);
            }
            if (iv.E.size() >= 2 && iv.Eprime.size() >= 2) found[{s, b}] = iv;
        }
    // block order: (s_k,b_k), then (s,b_k) for decreasing s, then (s_k,b) for increasing b
    std::vector<StarInterval> out;
    std::set<std::pair<int, int>> left;
    for (const auto& kv : found) left.insert(kv.first);
    int s_prev = 1 << 30, b_prev = -(1 << 30);
    while (!left.empty()) {
        int sk = -(1 << 30);
        for (auto [s, b] : left)
            if (s < s_prev && b > b_prev) sk = std::max(sk, s);
        int bk = 1 << 30;
        for (auto [s, b] : left)
            if (s < s_prev && b > b_prev) bk = std::min(bk, b);
        if (sk == -(1 << 30) || !left.count({sk, bk})) break;
        auto take = [&](int s, int b) {
            if (left.erase({s, b})) out.push_back(found[{s, b}]);
        };
        take(sk, bk);
        std::vector<int> ss, bs;
        for (auto [s, b] : left) {
            if (b == bk && s < sk) ss.push_back(s);
            if (s == sk && b > bk) bs.push_back(b);
        }
        std::sort(ss.rbegin(), ss.rend());
        std::sort(bs.begin(), bs.end());
        for (int s : ss) take(s, bk);
        for (int b : bs) take(sk, b);
        s_prev = sk;
        b_prev = bk;
    }
    // elements outside the block structure (not expected) go last in the tie-break order
    std::vector<std::pair<int, int>> rest(left.begin(), left.end());
    std::sort(rest.begin(), rest.end(), [](auto a, auto b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    for (auto p : rest) out.push_back(found[p]);
    return out;
}

std::vector<StarInterval> star_intervals(int center_label, const std::vector<std::vector<int>>& legs) {
    int lo = center_label, hi = center_label;
    for (const auto& leg : legs)
        for (int x : leg) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    std::vector<std::vector<int>> reach(legs.size(), std::vector<int>(hi - lo + 1, 1 << 30));
    for (size_t j = 0; j < legs.size(); ++j)
        for (int i = static_cast<int>(legs[j].size()) - 1; i >= 0; --i) reach[j][legs[j][i] - lo] = i;
    return star_intervals_from_reach(center_label, lo, reach);
}

AmbiguousMatrix matrix_from_intervals(int num_columns, const std::vector<StarInterval>& intervals) {
    AmbiguousMatrix m;
    m.num_columns = num_columns;
    for (const auto& iv : intervals) {
        std::vector<int> row(m.num_columns, AmbiguousMatrix::kStar);
        for (int j : iv.E) row[j] = 0;
        for (int j : iv.Eprime) row[j] = 1;
        m.rows.push_back(row);
        m.row_tags.push_back("(" + std::to_string(iv.s) + "," + std::to_string(iv.b) + ")");
    }
    m.stair_closure();
    return m;
}

AmbiguousMatrix star_matrix(int center_label, const std::vector<std::vector<int>>& legs) {
    return matrix_from_intervals(static_cast<int>(legs.size()), star_intervals(center_label, legs));
}

StarInfo analyze_star(const ClusteredGraph& g) {
    if (!g.is_tree()) throw Error(ErrorKind::NotASubdividedStar, "not a tree");
    StarInfo info;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) >= 3) {
            if (info.center >= 0) throw Error(ErrorKind::NotASubdividedStar, "two vertices of degree at least three");
            info.center = v;
        }
    if (info.center < 0) return info;
    for (int d : g.darts_at(info.center)) {
        std::vector<int> vs, ls;
        int cur = d;
        while (true) {
            int x = g.head(cur);
            vs.push_back(x);
            ls.push_back(g.gamma(x));
            if (g.degree(x) != 2) break;
            const auto& ds = g.darts_at(x);
            cur = ds[0] == dart_rev(cur) ? ds[1] : ds[0];
        }
        info.leg_darts.push_back(d);
        info.leg_vertices.push_back(vs);
        info.leg_labels.push_back(ls);
    }
    return info;
}

std::vector<StarInterval> interval_order(const ClusteredGraph& g) {
    StarInfo info = analyze_star(g);
    if (info.center < 0) return {};
    return star_intervals(g.gamma(info.center), info.leg_labels);
}

AmbiguousMatrix build_star_matrix(const ClusteredGraph& g) {
    StarInfo info = analyze_star(g);
    if (info.center < 0) return AmbiguousMatrix{};
    return star_matrix(g.gamma(info.center), info.leg_labels);
}

EmbeddedGraph tree_embedding_from_leaf_order(const ClusteredGraph& g, const std::vector<int>& leaf_order) {
    int n = g.num_vertices();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(leaf_order.size()); ++i) pos[leaf_order[i]] = i;
    // least leaf position beyond each dart
    std::vector<int> reach(g.num_darts(), 1 << 30);
    std::vector<char> done(g.num_darts(), 0);
    std::vector<int> stack;
    for (int d = 0; d < g.num_darts(); ++d) {
        if (done[d]) continue;
        // iterative post-order over darts pointing away from tail
        stack.push_back(d);
        while (!stack.empty()) {
            int x = stack.back();
            int h = g.head(x);
            bool pending = false;
            for (int y : g.darts_at(h))
                if (y != dart_rev(x) && !done[y]) {
                    stack.push_back(y);
                    pending = true;
                }
            if (pending) continue;
            stack.pop_back();
            if (done[x]) continue;
            int r = pos[h] >= 0 ? pos[h] : 1 << 30;
            for (int y : g.darts_at(h))
                if (y != dart_rev(x)) r = std::min(r, reach[y]);
            reach[x] = r;
            done[x] = 1;
        }
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        rot[v] = g.darts_at(v);
        std::stable_sort(rot[v].begin(), rot[v].end(), [&](int a, int b) { return reach[a] < reach[b]; });
    }
    return EmbeddedGraph(g, rot, g.num_darts() > 0 ? 0 : -1);
}

StarSolution solve_star(const ClusteredGraph& g) {
    StarInfo info = analyze_star(g);
    StarSolution sol;
    if (info.center < 0) {
        sol.planar = true;
        sol.embedding = EmbeddedGraph(g, default_rotation(g), g.num_darts() > 0 ? 0 : -1);
        return sol;
    }
    sol.matrix = star_matrix(g.gamma(info.center), info.leg_labels);
    CircularResult r = test_ambiguous(sol.matrix);
    if (!r.feasible) {
        sol.failing_row = r.failing_row;
        return sol;
    }
    sol.planar = true;
    std::vector<int> leaves;
    for (int c : r.order) {
        sol.center_rotation.push_back(info.leg_darts[c]);
        leaves.push_back(info.leg_vertices[c].back());
    }
    sol.embedding = tree_embedding_from_leaf_order(g, leaves);
    return sol;
}

}  // namespace sp
