#include "sp/theta.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sp {

ThetaInstance build_theta_instance(const ClusteredGraph& g) {
    ThetaInstance t;
    if (!g.is_connected() || g.has_loops()) throw Error(ErrorKind::NotATheta, "not a connected loopless graph");
    for (int x = 0; x < g.num_vertices(); ++x) {
        if (g.degree(x) >= 3) {
            if (t.u < 0) t.u = x;
            else if (t.v < 0) t.v = x;
            else throw Error(ErrorKind::NotATheta, "more than two vertices of degree at least three");
        } else if (g.degree(x) != 2) {
            throw Error(ErrorKind::NotATheta, g.name(x) + " has degree below two");
        }
    }
    if (t.v < 0 || g.degree(t.u) != g.degree(t.v)) throw Error(ErrorKind::NotATheta, "poles not found");
    // walk every path from u; the direct edge (if any) goes first
    std::vector<int> ds = g.darts_at(t.u);
    std::stable_partition(ds.begin(), ds.end(), [&](int d) { return g.head(d) == t.v; });
    int direct = 0;
    for (int d : ds) {
        std::vector<int> path{t.u};
        int cur = d;
        while (true) {
            int x = g.head(cur);
            path.push_back(x);
            if (x == t.v) break;
            if (x == t.u || g.degree(x) != 2) throw Error(ErrorKind::NotATheta, "path does not reach the other pole");
            const auto& xd = g.darts_at(x);
            cur = xd[0] == dart_rev(cur) ? xd[1] : xd[0];
        }
        if (path.size() == 2) ++direct;
        t.paths.push_back(path);
        t.u_darts.push_back(d);
        t.v_darts.push_back(dart_rev(cur));
        int lo = 1 << 30, hi = -(1 << 30);
        for (int x : path) {
            lo = std::min(lo, g.gamma(x));
            hi = std::max(hi, g.gamma(x));
        }
        t.intervals.push_back({lo, hi});
    }
    if (direct > 1) throw Error(ErrorKind::NotATheta, "more than one direct edge between the poles");
    int n = static_cast<int>(t.paths.size());
    for (int i = 0; i < n && t.alpha < 0; ++i) {
        bool minimal = true;
        for (int j = 0; j < n; ++j) {
            auto a = t.intervals[j], b = t.intervals[i];
            bool subset = b.first <= a.first && a.second <= b.second;
            if (subset && a != b) minimal = false;
        }
        if (minimal) t.alpha = i;
    }

    // the tree G' with the outer-face leaf
    ClusteredGraph& h = t.gprime;
    t.gp_u = h.add_vertex(g.name(t.u), g.gamma(t.u));
    t.gp_v = h.add_vertex(g.name(t.v), g.gamma(t.v));
    const auto& pa = t.paths[t.alpha];
    int prev = t.gp_u;
    for (size_t k = 1; k + 1 < pa.size(); ++k) {
        int x = h.add_vertex(g.name(pa[k]), g.gamma(pa[k]));
        h.add_edge(prev, x);
        prev = x;
    }
    h.add_edge(prev, t.gp_v);
    t.u_leaf.assign(n, -1);
    t.v_leaf.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (i == t.alpha) continue;
        const auto& p = t.paths[i];
        prev = t.gp_u;
        for (size_t k = 1; k + 1 < p.size(); ++k) {
            int x = h.add_vertex(g.name(p[k]) + "@u", g.gamma(p[k]));
            h.add_edge(prev, x);
            prev = x;
        }
        t.u_leaf[i] = prev;
        prev = t.gp_v;
        for (size_t k = p.size() - 2; k >= 1; --k) {
            int x = h.add_vertex(g.name(p[k]) + "@v", g.gamma(p[k]));
            h.add_edge(prev, x);
            prev = x;
        }
        t.v_leaf[i] = prev;
    }
    t.gp_outer = h.add_vertex("outer@" + g.name(t.u), g.gamma(t.u));
    h.add_edge(t.gp_u, t.gp_outer);

    MasterOptions mo;
    mo.root = t.gp_v;
    mo.star_exempt = {t.gp_outer};
    t.master = assemble_master(h, mo);

    // trap rows: one per distinct minimum (increasing) and per distinct maximum (decreasing)
    const auto& cols = t.master.columns;
    int C = static_cast<int>(cols.size());
    std::vector<int> col_of(h.num_vertices(), -1);
    for (int c = 0; c < C; ++c) col_of[cols[c]] = c;
    auto path_columns = [&](int i) {
        std::vector<int> out;
        if (i == t.alpha) {
            for (int j = 0; j < n; ++j)
                if (j != t.alpha) out.push_back(col_of[t.v_leaf[j]]);
        } else {
            out.push_back(col_of[t.u_leaf[i]]);
        }
        return out;
    };
    std::set<std::vector<int>> seen;
    auto add_rows = [&](bool by_min) {
        std::set<int> values;
        for (auto iv : t.intervals) values.insert(by_min ? iv.first : iv.second);
        for (int m : values) {
            std::vector<int> row(C, 1);
            row[col_of[t.gp_outer]] = 0;
            for (int i = 0; i < n; ++i) {
                bool zero = by_min ? t.intervals[i].first <= m : t.intervals[i].second >= m;
                if (zero)
                    for (int c : path_columns(i)) row[c] = 0;
            }
            int ones = static_cast<int>(std::count(row.begin(), row.end(), 1));
            if (ones == 0 || !seen.insert(row).second) continue;
            t.trap.push_back(row);
        }
    };
    add_rows(true);
    add_rows(false);

    t.combined.num_columns = C;
    for (int r = 0; r < static_cast<int>(t.master.matrix.rows.size()); ++r) {
        if (r == t.master.bridge_rows)
            for (const auto& row : t.trap) {
                t.combined.rows.push_back(row);
                t.combined.row_tags.push_back("trap");
            }
        t.combined.rows.push_back(t.master.matrix.rows[r]);
        t.combined.row_tags.push_back(t.master.matrix.row_tags[r]);
    }
    if (t.master.bridge_rows == static_cast<int>(t.master.matrix.rows.size()))
        for (const auto& row : t.trap) {
            t.combined.rows.push_back(row);
            t.combined.row_tags.push_back("trap");
        }
    t.combined.stair_closure();
    return t;
}

BinaryMatrix build_trap_matrix(const ClusteredGraph& g) { return build_theta_instance(g).trap; }

ThetaSolution solve_theta(const ClusteredGraph& g, const ThetaOptions& opt) {
    ThetaInstance t = build_theta_instance(g);
    int n = static_cast<int>(t.paths.size());
    if (n > opt.max_paths)
        throw Error(ErrorKind::SearchBudgetExceeded, std::to_string(n) + " paths exceed the search bound");
    ThetaSolution sol;
    const auto& cols = t.master.columns;
    std::vector<int> col_of(t.gprime.num_vertices(), -1);
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) col_of[cols[c]] = c;
    // A-block items: path indices other than alpha, and -1 for the outer-face leaf
    std::vector<int> items;
    for (int i = 0; i < n; ++i)
        if (i != t.alpha) items.push_back(i);
    items.push_back(-1);
    std::sort(items.begin(), items.end());
    std::vector<int> order;
    do {
        ++sol.orders_tried;
        order.clear();
        for (int i : items) order.push_back(i < 0 ? col_of[t.gp_outer] : col_of[t.u_leaf[i]]);
        for (auto it = items.rbegin(); it != items.rend(); ++it)
            if (*it >= 0) order.push_back(col_of[t.v_leaf[*it]]);
        if (!order_satisfies(t.combined, order)) continue;
        sol.planar = true;
        std::vector<int> urot;
        int outer = -1;
        bool after_gap = false;
        for (int i : items) {
            if (i < 0) {
                after_gap = true;
                continue;
            }
            urot.push_back(t.u_darts[i]);
            if (after_gap && outer < 0) outer = t.u_darts[i];
        }
        urot.push_back(t.u_darts[t.alpha]);
        if (outer < 0) outer = t.u_darts[t.alpha];
        std::vector<int> vrot{t.v_darts[t.alpha]};
        for (auto it = items.rbegin(); it != items.rend(); ++it)
            if (*it >= 0) vrot.push_back(t.v_darts[*it]);
        auto rot = default_rotation(g);
        rot[t.u] = urot;
        rot[t.v] = vrot;
        sol.u_rotation = urot;
        sol.v_rotation = vrot;
        sol.embedding = EmbeddedGraph(g, rot, outer);
        return sol;
    } while (std::next_permutation(items.begin(), items.end()));
    return sol;
}

}  // namespace sp
