#include "sp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sp {

const char* oracle_status_name(OracleStatus s) {
    switch (s) {
        case OracleStatus::Planar: return "planar";
        case OracleStatus::NotPlanar: return "not_planar";
        case OracleStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

Subgraph induced_subgraph(const ClusteredGraph& g, const std::vector<int>& vertices) {
    Subgraph s;
    std::vector<int> map(g.num_vertices(), -1);
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) {
        map[v] = s.graph.add_vertex(g.name(v), g.gamma(v));
        s.vertex_to_parent.push_back(v);
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (map[ed.u] >= 0 && map[ed.v] >= 0) {
            s.graph.add_edge(map[ed.u], map[ed.v]);
            s.edge_to_parent.push_back(e);
        }
    }
    return s;
}

namespace {

struct ComponentOutcome {
    OracleStatus status = OracleStatus::NotPlanar;
    std::vector<std::vector<int>> rotation;
    int outer_dart = -1;
};

struct TrapCycle {
    std::vector<char> on_edge;
    std::vector<int> candidates;
};

ComponentOutcome decide_component(const ClusteredGraph& g, const OracleLimits& lim, long& leaves) {
    ComponentOutcome out;
    int n = g.num_vertices();
    PairCatalog cat = build_pair_catalog(g, lim.check);
    if (cat.budget_exceeded) {
        out.status = OracleStatus::BudgetExceeded;
        return out;
    }
    std::vector<std::vector<int>> raw_cycles;
    if (!enumerate_simple_cycles(g, lim.check.cycle_budget, raw_cycles)) {
        out.status = OracleStatus::BudgetExceeded;
        return out;
    }
    std::vector<TrapCycle> cycles;
    for (const auto& cyc : raw_cycles) {
        TrapCycle tc;
        tc.on_edge.assign(g.num_edges(), 0);
        std::vector<char> on_vertex(n, 0);
        int lo = 1 << 30, hi = -(1 << 30);
        for (int e : cyc) {
            tc.on_edge[e] = 1;
            for (int x : {g.edge(e).u, g.edge(e).v}) {
                on_vertex[x] = 1;
                lo = std::min(lo, g.gamma(x));
                hi = std::max(hi, g.gamma(x));
            }
        }
        for (int x = 0; x < n; ++x)
            if (!on_vertex[x] && (g.gamma(x) < lo || g.gamma(x) > hi)) tc.candidates.push_back(x);
        if (!tc.candidates.empty()) cycles.push_back(std::move(tc));
    }

    // assign high-degree vertices first so pair signatures prune early
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    std::vector<std::vector<int>> ready(n);
    for (int s = 0; s < static_cast<int>(cat.signatures.size()); ++s) {
        int last = 0;
        for (const auto& t : cat.signatures[s].terms) last = std::max(last, rank[t.vertex]);
        ready[last].push_back(s);
    }

    std::vector<int> pos(g.num_darts(), -1);
    std::vector<std::vector<int>> rot(n);
    bool done = false, exceeded = false;
    std::vector<int> parent;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

    auto evaluate_leaf = [&]() {
        if (++leaves > lim.max_rotation_systems) {
            exceeded = true;
            return;
        }
        EmbeddedGraph emb(g, rot, g.num_darts() > 0 ? 0 : -1);
        FaceMap fm = trace_faces(emb);
        int nf = static_cast<int>(fm.faces.size());
        if (n - g.num_edges() + nf != 2) return;
        std::vector<char> allowed(nf, 1);
        for (const auto& tc : cycles) {
            parent.resize(nf);
            std::iota(parent.begin(), parent.end(), 0);
            for (int e = 0; e < g.num_edges(); ++e)
                if (!tc.on_edge[e]) parent[find(fm.face_of_dart[2 * e])] = find(fm.face_of_dart[2 * e + 1]);
            int cls = -1;
            bool split = false;
            for (int x : tc.candidates) {
                int c = find(fm.face_of_dart[g.darts_at(x)[0]]);
                if (cls < 0) cls = c;
                else if (cls != c) split = true;
            }
            if (split) return;
            for (int f = 0; f < nf; ++f)
                if (find(f) != cls) allowed[f] = 0;
        }
        for (int f = 0; f < nf; ++f)
            if (allowed[f]) {
                out.status = OracleStatus::Planar;
                out.rotation = rot;
                out.outer_dart = fm.faces[f].darts[0];
                done = true;
                return;
            }
    };

    std::function<void(int)> rec = [&](int k) {
        if (done || exceeded) return;
        if (k == n) {
            evaluate_leaf();
            return;
        }
        int v = order[k];
        std::vector<int> ds = g.darts_at(v);
        if (ds.empty()) {
            rec(k + 1);
            return;
        }
        std::sort(ds.begin() + 1, ds.end());
        do {
            rot[v] = ds;
            for (int i = 0; i < static_cast<int>(ds.size()); ++i) pos[ds[i]] = i;
            bool ok = true;
            for (int s : ready[k])
                if (signature_half(cat.signatures[s], pos, g) != 0) {
                    ok = false;
                    break;
                }
            if (ok) rec(k + 1);
            if (done || exceeded) return;
        } while (ds.size() > 2 && std::next_permutation(ds.begin() + 1, ds.end()));
    };
    rec(0);
    if (exceeded) out.status = OracleStatus::BudgetExceeded;
    return out;
}

}  // namespace

OracleResult oracle_decide(const ClusteredGraph& g, const OracleLimits& limits) {
    OracleResult res;
    if (g.num_vertices() > limits.max_vertices) {
        res.status = OracleStatus::BudgetExceeded;
        return res;
    }
    std::vector<std::vector<int>> rotation(g.num_vertices());
    int outer = -1;
    for (const auto& comp : g.components()) {
        if (comp.size() <= 1) continue;
        Subgraph sub = induced_subgraph(g, comp);
        ComponentOutcome co = decide_component(sub.graph, limits, res.rotation_systems);
        if (co.status != OracleStatus::Planar) {
            res.status = co.status;
            return res;
        }
        auto to_parent = [&](int d) { return make_dart(sub.edge_to_parent[dart_edge(d)], d & 1); };
        for (int v = 0; v < sub.graph.num_vertices(); ++v)
            for (int d : co.rotation[v]) rotation[sub.vertex_to_parent[v]].push_back(to_parent(d));
        if (outer < 0) outer = to_parent(co.outer_dart);
    }
    res.status = OracleStatus::Planar;
    res.embedding = EmbeddedGraph(g, rotation, outer);
    return res;
}

}  // namespace sp
