#include "sp/parity.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "sp/characterization.hpp"

namespace sp {

namespace {

struct RawGraph {
    std::vector<std::pair<std::string, int>> vertices;
    std::vector<Edge> edges;
};

RawGraph raw_of(const ClusteredGraph& g) {
    RawGraph r;
    for (int v = 0; v < g.num_vertices(); ++v) r.vertices.push_back({g.name(v), g.gamma(v)});
    r.edges = g.edges();
    return r;
}

ClusteredGraph build(const RawGraph& r) {
    ClusteredGraph g;
    for (const auto& [n, c] : r.vertices) g.add_vertex(n, c);
    for (const auto& e : r.edges) g.add_edge(e.u, e.v);
    return g;
}

std::string fresh_name(const ClusteredGraph& g, const RawGraph& r, const std::string& base) {
    for (int i = 0;; ++i) {
        std::string n = base + "~" + std::to_string(i);
        bool used = g.find_vertex(n).has_value();
        for (const auto& [m, c] : r.vertices)
            if (m == n) used = true;
        if (!used) return n;
    }
}

void require_even(const ParityDrawing& d) {
    auto rep = evenness_report(d);
    if (rep.kind != Evenness::Even) {
        const auto& p = rep.odd_independent.empty() ? rep.odd_adjacent[0] : rep.odd_independent[0];
        throw Error(ErrorKind::NotEven,
                    "edges " + std::to_string(p.first) + " and " + std::to_string(p.second) + " cross oddly");
    }
}

bool incident(const ClusteredGraph& g, int e, int v) { return g.edge(e).u == v || g.edge(e).v == v; }

int potential(const ClusteredGraph& g) {
    long s = 0;
    for (int v = 0; v < g.num_vertices(); ++v) s += 1L * g.degree(v) * g.degree(v) * g.degree(v);
    return static_cast<int>(s);
}

int index_in(const std::vector<int>& v, int x) {
    return static_cast<int>(std::find(v.begin(), v.end(), x) - v.begin());
}

}  // namespace

// ---- basic operations

void ParityDrawing::flip(int e, int f) {
    cr[e][f] ^= 1;
    cr[f][e] ^= 1;
}

EmbeddedGraph ParityDrawing::as_embedding(int outer_dart) const { return EmbeddedGraph(graph, rotation, outer_dart); }

ParityDrawing ParityDrawing::from_embedding(const EmbeddedGraph& emb) {
    ParityDrawing d;
    const ClusteredGraph& g = emb.graph();
    d.graph = g;
    d.rotation = emb.rotations();
    int E = g.num_edges(), V = g.num_vertices();
    d.cr.assign(E, std::vector<uint8_t>(E, 0));
    d.ray.assign(E, std::vector<uint8_t>(V, 0));
    if (E == 0) return d;
    FaceMap fm = trace_faces(emb);
    int F = static_cast<int>(fm.faces.size());
    // dual BFS from the outer face; each ray follows the BFS tree back to it
    std::vector<int> parent_edge(F, -1), parent_face(F, -1), seen(F, 0);
    std::deque<int> q{fm.outer};
    seen[fm.outer] = 1;
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (int dd : fm.faces[f].darts) {
            int h = fm.face_of_dart[dart_rev(dd)];
            if (seen[h]) continue;
            seen[h] = 1;
            parent_edge[h] = dart_edge(dd);
            parent_face[h] = f;
            q.push_back(h);
        }
    }
    for (int x = 0; x < V; ++x) {
        if (d.rotation[x].empty()) continue;
        for (int f = fm.face_of_dart[d.rotation[x][0]]; f != fm.outer; f = parent_face[f]) d.ray[parent_edge[f]][x] ^= 1;
    }
    return d;
}

const char* evenness_name(Evenness e) {
    switch (e) {
        case Evenness::Even: return "even";
        case Evenness::IndependentlyEven: return "independently_even";
        case Evenness::Neither: return "neither";
    }
    return "?";
}

EvennessReport evenness_report(const ParityDrawing& d) {
    EvennessReport r;
    const ClusteredGraph& g = d.graph;
    for (int e = 0; e < g.num_edges(); ++e)
        for (int f = e + 1; f < g.num_edges(); ++f) {
            if (!d.cr[e][f]) continue;
            const Edge &a = g.edge(e), &b = g.edge(f);
            bool adj = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            (adj ? r.odd_adjacent : r.odd_independent).push_back({e, f});
        }
    r.kind = !r.odd_independent.empty() ? Evenness::Neither
             : !r.odd_adjacent.empty()  ? Evenness::IndependentlyEven
                                        : Evenness::Even;
    return r;
}

void pull_in_place(ParityDrawing& d, int e, int v) {
    for (int dd : d.rotation[v]) {
        int f = dart_edge(dd);
        if (f != e) d.flip(e, f);
    }
    d.ray[e][v] ^= 1;
}

ParityDrawing pull_edge_over_vertex(const ParityDrawing& d, int e, int v) {
    ParityDrawing out = d;
    pull_in_place(out, e, v);
    return out;
}

void reanchor_ray(ParityDrawing& d, int v, int k) {
    auto& rot = d.rotation[v];
    int L = static_cast<int>(rot.size());
    if (L == 0) return;
    k = ((k % L) + L) % L;
    for (int i = 0; i < k; ++i) d.ray[dart_edge(rot[i])][v] ^= 1;
    std::rotate(rot.begin(), rot.begin() + k, rot.end());
}

void switch_in_place(ParityDrawing& d, int v, int pos) {
    auto& rot = d.rotation[v];
    int L = static_cast<int>(rot.size());
    if (L < 2) return;
    pos = ((pos % L) + L) % L;
    if (pos == L - 1) {
        reanchor_ray(d, v, 1);
        pos = L - 2;
    }
    int e = dart_edge(rot[pos]), f = dart_edge(rot[pos + 1]);
    std::swap(rot[pos], rot[pos + 1]);
    if (e != f) d.flip(e, f);
}

// ---- subdivision

ParityDrawing subdivide_bounded_edges(const ParityDrawing& d) {
    const ClusteredGraph& g = d.graph;
    for (int e = 0; e < g.num_edges(); ++e) {
        int lo = std::min(g.gamma(g.edge(e).u), g.gamma(g.edge(e).v));
        int hi = std::max(g.gamma(g.edge(e).u), g.gamma(g.edge(e).v));
        if (!d.edge_span.empty() && (d.edge_span[e].first < lo || d.edge_span[e].second > hi))
            throw Error(ErrorKind::NotBounded, "edge " + std::to_string(e) + " leaves the clusters of its endpoints");
    }
    require_even(d);
    RawGraph raw = raw_of(g);
    ParityDrawing out;
    out.rotation = d.rotation;
    out.ray = d.ray;
    std::vector<int> ray_owner;  // for new vertices: (vertex u they hang off, edge e)
    struct NewVertex {
        int u, e;
    };
    std::vector<NewVertex> created;
    std::vector<int> new_edges_of;  // unused placeholder for clarity
    for (int e = 0; e < g.num_edges(); ++e) {
        int u = g.edge(e).u, v = g.edge(e).v;
        int gu = g.gamma(u), gv = g.gamma(v);
        int steps = std::abs(gv - gu);
        if (steps <= 1) continue;
        int dir = gv > gu ? 1 : -1;
        std::vector<int> zs;
        for (int i = 1; i < steps; ++i) {
            int z = static_cast<int>(raw.vertices.size());
            raw.vertices.push_back({fresh_name(g, raw, g.name(u) + "-" + g.name(v)), gu + dir * i});
            zs.push_back(z);
            created.push_back({u, e});
        }
        // pieces u-z1, z1-z2, ..., and e itself becomes z_last-v
        std::vector<int> piece;
        int prev = u;
        for (int z : zs) {
            piece.push_back(static_cast<int>(raw.edges.size()));
            raw.edges.push_back({prev, z});
            prev = z;
        }
        raw.edges[e] = {zs.back(), v};
        // rotations: at u the first piece replaces e's dart
        int du = make_dart(e, 0);
        std::replace(out.rotation[u].begin(), out.rotation[u].end(), du, make_dart(piece[0], 0));
        out.rotation.resize(raw.vertices.size());
        for (size_t i = 0; i < zs.size(); ++i) {
            int toward_u = make_dart(piece[i], 1);
            int toward_v = i + 1 < zs.size() ? make_dart(piece[i + 1], 0) : make_dart(e, 0);
            out.rotation[zs[i]] = {toward_u, toward_v};
        }
    }
    out.graph = build(raw);
    int E = out.graph.num_edges(), V = out.graph.num_vertices();
    int E0 = g.num_edges(), V0 = g.num_vertices();
    out.cr.assign(E, std::vector<uint8_t>(E, 0));
    for (int e = 0; e < E0; ++e)
        for (int f = 0; f < E0; ++f) out.cr[e][f] = d.cr[e][f];
    std::vector<std::vector<uint8_t>> ray(E, std::vector<uint8_t>(V, 0));
    for (int e = 0; e < E0; ++e)
        for (int x = 0; x < V0; ++x) ray[e][x] = d.ray[e][x];
    // a new vertex next to u: its ray runs back along the edge, clockwise around u to u's ray
    for (size_t i = 0; i < created.size(); ++i) {
        int z = V0 + static_cast<int>(i);
        int u = created[i].u, e = created[i].e;
        const auto& rot = d.rotation[u];
        int p = index_in(rot, make_dart(e, 0));
        for (int f = 0; f < E0; ++f) ray[f][z] = d.ray[f][u];
        for (int k = p + 1; k < static_cast<int>(rot.size()); ++k) ray[dart_edge(rot[k])][z] ^= 1;
        // the piece leaving u replaced e there; crossings of e stay on e
        (void)e;
    }
    out.ray = std::move(ray);
    return out;
}

// ---- faces and windings

std::vector<std::vector<int>> face_windings(const ParityDrawing& d) {
    const ClusteredGraph& g = d.graph;
    std::vector<std::vector<int>> out;
    if (g.num_edges() == 0) return out;
    FaceMap fm = trace_faces(d.as_embedding(0));
    for (const auto& f : fm.faces) {
        std::vector<int> w(g.num_vertices(), 0);
        std::vector<char> in_walk(g.num_darts(), 0);
        for (int dd : f.darts) in_walk[dd] = 1;
        for (int x = 0; x < g.num_vertices(); ++x) {
            int s = 0;
            for (int dd : f.darts) s ^= d.ray[dart_edge(dd)][x];
            if (!d.rotation[x].empty() && in_walk[d.rotation[x][0]]) s ^= 1;
            w[x] = s;
        }
        out.push_back(w);
    }
    return out;
}

OuterFaceCount count_outer_faces(const ParityDrawing& d) {
    require_even(d);
    if (!d.graph.is_connected()) throw Error(ErrorKind::NotConnected, "drawing of a disconnected graph");
    OuterFaceCount r;
    if (d.graph.num_edges() == 0) {
        r.count = 1;
        r.outer_faces = {0};
        return r;
    }
    r.faces = trace_faces(d.as_embedding(0));
    auto w = face_windings(d);
    for (int f = 0; f < static_cast<int>(w.size()); ++f)
        if (w[f][0]) r.outer_faces.push_back(f);
    r.count = static_cast<int>(r.outer_faces.size());
    return r;
}

// ---- odd crossing removal

bool is_subdivision_of_3connected(const ClusteredGraph& g) {
    if (!g.is_connected() || g.has_loops()) return false;
    int n = g.num_vertices();
    std::vector<int> branch_id(n, -1);
    int B = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < 2) return false;
        if (g.degree(v) >= 3) branch_id[v] = B++;
    }
    if (B < 4) return false;
    std::set<std::pair<int, int>> hedges;
    for (int v = 0; v < n; ++v) {
        if (branch_id[v] < 0) continue;
        for (int d0 : g.darts_at(v)) {
            int cur = d0;
            int x = g.head(cur);
            while (branch_id[x] < 0) {
                const auto& ds = g.darts_at(x);
                cur = ds[0] == dart_rev(cur) ? ds[1] : ds[0];
                x = g.head(cur);
            }
            if (x == v) return false;
            int a = branch_id[v], b = branch_id[x];
            if (a < b && !hedges.insert({a, b}).second) return false;
        }
    }
    std::vector<std::vector<int>> adj(B);
    for (auto [a, b] : hedges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int a = 0; a < B; ++a)
        for (int b = a + 1; b < B; ++b) {
            int start = 0;
            while (start == a || start == b) ++start;
            std::vector<char> seen(B, 0);
            seen[a] = seen[b] = 1;
            std::vector<int> st{start};
            seen[start] = 1;
            int cnt = 1;
            while (!st.empty()) {
                int x = st.back();
                st.pop_back();
                for (int y : adj[x])
                    if (!seen[y]) {
                        seen[y] = 1;
                        ++cnt;
                        st.push_back(y);
                    }
            }
            if (cnt != B - 2) return false;
        }
    return true;
}

namespace {

// Cycle through edge e as a vertex list with consecutive edges: verts[i] -- edges[i] -- verts[i+1].
bool cycle_through(const ClusteredGraph& g, int e, std::vector<int>& verts, std::vector<int>& edges) {
    int s = g.edge(e).v, t = g.edge(e).u;
    std::vector<int> pd(g.num_vertices(), -2);
    std::deque<int> q{s};
    pd[s] = -1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int dd : g.darts_at(x)) {
            if (dart_edge(dd) == e) continue;
            int y = g.head(dd);
            if (pd[y] != -2) continue;
            pd[y] = dd;
            q.push_back(y);
        }
    }
    if (pd[t] == -2) return false;
    // path s .. t, then e closes t -> s
    std::vector<int> pv{t}, pe;
    for (int x = t; x != s; x = g.tail(pd[x])) {
        pe.push_back(dart_edge(pd[x]));
        pv.push_back(g.tail(pd[x]));
    }
    std::reverse(pv.begin(), pv.end());
    std::reverse(pe.begin(), pe.end());
    verts = pv;  // s ... t
    edges = pe;
    edges.push_back(e);  // t -> s
    return true;
}

// Moves the end of edge f at v across the end of edge b, along the arc avoiding edge a.
void move_across(ParityDrawing& d, int v, int f, int b, int a) {
    auto& rot = d.rotation[v];
    int L = static_cast<int>(rot.size());
    auto pos_of = [&](int edge) {
        for (int i = 0; i < L; ++i)
            if (dart_edge(rot[i]) == edge) return i;
        return -1;
    };
    int pf = pos_of(f), pb = pos_of(b), pa = pos_of(a);
    bool forward_hits_a = false;
    for (int i = (pf + 1) % L; i != pb; i = (i + 1) % L)
        if (i == pa) forward_hits_a = true;
    if (!forward_hits_a) {
        while (true) {
            int p = pos_of(f);
            int next = dart_edge(rot[(p + 1) % L]);
            switch_in_place(d, v, p);
            if (next == b) break;
        }
    } else {
        while (true) {
            int p = pos_of(f);
            int prev = dart_edge(rot[(p - 1 + L) % L]);
            switch_in_place(d, v, p - 1);
            if (prev == b) break;
        }
    }
}

// Splits the darts of the arc `moved` at v onto a new vertex joined to v by a crossing-free edge.
int split_arc(ParityDrawing& d, int v, const std::vector<int>& moved, int& new_edge) {
    // anchor the ray of v at the first moved dart so it stays outside the arc
    reanchor_ray(d, v, index_in(d.rotation[v], moved[0]));
    const ClusteredGraph& g = d.graph;
    RawGraph raw = raw_of(g);
    int z = static_cast<int>(raw.vertices.size());
    raw.vertices.push_back({fresh_name(g, raw, g.name(v)), g.gamma(v)});
    for (int dd : moved) {
        Edge& e = raw.edges[dart_edge(dd)];
        if (dd & 1) e.v = z;
        else e.u = z;
    }
    new_edge = static_cast<int>(raw.edges.size());
    raw.edges.push_back({v, z});
    int E = new_edge + 1, V = z + 1;
    ParityDrawing out;
    out.graph = build(raw);
    out.rotation = d.rotation;
    out.rotation.resize(V);
    auto& rv = out.rotation[v];
    std::vector<int> keep{make_dart(new_edge, 0)};
    for (int dd : rv)
        if (std::find(moved.begin(), moved.end(), dd) == moved.end()) keep.push_back(dd);
    rv = keep;
    out.rotation[z] = {make_dart(new_edge, 1)};
    for (int dd : moved) out.rotation[z].push_back(dd);
    out.cr.assign(E, std::vector<uint8_t>(E, 0));
    for (int a = 0; a < E - 1; ++a)
        for (int b = 0; b < E - 1; ++b) out.cr[a][b] = d.cr[a][b];
    out.ray.assign(E, std::vector<uint8_t>(V, 0));
    for (int a = 0; a < E - 1; ++a)
        for (int x = 0; x < V - 1; ++x) out.ray[a][x] = d.ray[a][x];
    // ray of z: back along the new edge, clockwise around v to v's ray, then v's ray
    for (int a = 0; a < E - 1; ++a) out.ray[a][z] = d.ray[a][v];
    for (size_t i = 1; i < rv.size(); ++i) out.ray[dart_edge(rv[i])][z] ^= 1;
    d = std::move(out);
    return z;
}

}  // namespace

OddRemovalResult remove_odd_crossings_3connected(const ParityDrawing& input) {
    if (!is_subdivision_of_3connected(input.graph))
        throw Error(ErrorKind::Not3ConnectedSubdivision, "graph is not a subdivision of a 3-connected graph");
    auto rep = evenness_report(input);
    if (!rep.odd_independent.empty())
        throw Error(ErrorKind::OddIndependentPair, "edges " + std::to_string(rep.odd_independent[0].first) + " and " +
                                                       std::to_string(rep.odd_independent[0].second) +
                                                       " are independent and cross oddly");
    OddRemovalResult res;
    res.drawing = input;
    ParityDrawing& d = res.drawing;
    long guard = 0;
    while (true) {
        rep = evenness_report(d);
        if (!rep.odd_independent.empty())
            throw Error(ErrorKind::InternalContradiction, "independent odd pair appeared during redrawing");
        if (rep.odd_adjacent.empty()) break;
        if (++guard > 100000) throw Error(ErrorKind::InternalContradiction, "odd crossing removal does not terminate");
        int e = rep.odd_adjacent[0].first;
        std::vector<int> cv, ce;
        if (!cycle_through(d.graph, e, cv, ce))
            throw Error(ErrorKind::InternalContradiction, "edge on no cycle in a 2-connected graph");
        int k = static_cast<int>(cv.size());
        // local redrawing so that every cycle edge crosses every edge at its ends evenly
        for (int i = 0; i < k; ++i) {
            int v = cv[i];
            int a = ce[(i - 1 + k) % k], b = ce[i];
            if (d.cr[a][b]) pull_in_place(d, b, v);
            std::vector<int> others;
            for (int dd : d.rotation[v])
                if (dart_edge(dd) != a && dart_edge(dd) != b) others.push_back(dart_edge(dd));
            for (int f : others)
                if (d.cr[a][f]) pull_in_place(d, f, v);
            for (int f : others)
                if (d.cr[b][f]) move_across(d, v, f, b, a);
            for (int f : others)
                if (d.cr[a][f] || d.cr[b][f])
                    throw Error(ErrorKind::InternalContradiction, "local redrawing failed at " + d.graph.name(v));
        }
        // split both sides of every cycle vertex
        for (int i = 0; i < k; ++i) {
            int v = cv[i];
            int a = ce[(i - 1 + k) % k], b = ce[i];
            for (int side = 0; side < 2; ++side) {
                const auto& rot = d.rotation[v];
                int L = static_cast<int>(rot.size());
                int pa = -1, pb = -1;
                for (int j = 0; j < L; ++j) {
                    if (dart_edge(rot[j]) == a) pa = j;
                    if (dart_edge(rot[j]) == b) pb = j;
                }
                int from = side == 0 ? pa : pb, to = side == 0 ? pb : pa;
                std::vector<int> arc;
                for (int j = (from + 1) % L; j != to; j = (j + 1) % L) arc.push_back(rot[j]);
                if (arc.size() < 2) continue;
                std::vector<int> rest;
                for (int j = (to + 1) % L; j != from; j = (j + 1) % L) rest.push_back(rot[j]);
                for (int x : arc)
                    for (int y : rest)
                        if (d.cr[dart_edge(x)][dart_edge(y)])
                            throw Error(ErrorKind::InternalContradiction, "edges on both sides of a cycle cross oddly");
                SplitRecord rec;
                rec.vertex = v;
                rec.potential_before = potential(d.graph);
                int ne = -1;
                rec.new_vertex = split_arc(d, v, arc, ne);
                rec.new_edge = ne;
                rec.potential_after = potential(d.graph);
                res.splits.push_back(rec);
            }
        }
    }
    return res;
}

// ---- separation

int separation_parity(const ParityDrawing& d, int v, int e1, int e2, int e3, int e4) {
    const ClusteredGraph& g = d.graph;
    std::vector<int> es{e1, e2, e3, e4};
    for (int e : es)
        if (e < 0 || e >= g.num_edges() || !incident(g, e, v))
            throw Error(ErrorKind::NotIncident, "edge " + std::to_string(e) + " is not incident to " + g.name(v));
    std::set<int> distinct(es.begin(), es.end());
    if (distinct.size() != 4) throw Error(ErrorKind::PreconditionViolated, "edges must be distinct");
    return (d.cr[e1][e3] + d.cr[e1][e4] + d.cr[e2][e3] + d.cr[e2][e4]) & 1;
}

BlockNormalization normalize_rotation_block(const ParityDrawing& d, int v, const std::vector<int>& L,
                                            const std::vector<int>& R) {
    const ClusteredGraph& g = d.graph;
    std::set<int> sl(L.begin(), L.end()), sr(R.begin(), R.end());
    for (int e : L)
        if (sr.count(e)) throw Error(ErrorKind::PreconditionViolated, "blocks are not disjoint");
    for (const auto* s : {&L, &R})
        for (int e : *s)
            if (e < 0 || e >= g.num_edges() || !incident(g, e, v))
                throw Error(ErrorKind::NotIncident, "edge " + std::to_string(e) + " is not incident to " + g.name(v));
    BlockNormalization out;
    out.drawing = d;
    ParityDrawing& p = out.drawing;
    // are the blocks non-interleaved in the rotation restricted to L and R?
    std::vector<int> seq;
    for (int dd : p.rotation[v]) {
        int e = dart_edge(dd);
        if (sl.count(e)) seq.push_back(1);
        else if (sr.count(e)) seq.push_back(0);
    }
    int changes = 0;
    for (size_t i = 0; i < seq.size(); ++i) changes += seq[i] != seq[(i + 1) % seq.size()];
    if (changes > 2) {
        // bubble the rotation into R block, L block, other edges
        auto key = [&](int dd) {
            int e = dart_edge(dd);
            return sr.count(e) ? 0 : sl.count(e) ? 1 : 2;
        };
        auto& rot = p.rotation[v];
        int n = static_cast<int>(rot.size());
        for (int pass = 0; pass < n; ++pass)
            for (int i = 0; i + 1 < n; ++i)
                if (key(rot[i]) > key(rot[i + 1])) {
                    switch_in_place(p, v, i);
                    ++out.switches;
                }
    }
    if (L.empty() || R.empty()) return out;
    int e0 = L[0], f0 = R[0];
    for (int e : L)
        for (int f : R)
            if ((p.cr[e][f] + p.cr[e][f0] + p.cr[e0][f] + p.cr[e0][f0]) & 1)
                throw Error(ErrorKind::ParityObstruction, "four-term parity odd for edges " + std::to_string(e0) + "," +
                                                              std::to_string(e) + " and " + std::to_string(f0) +
                                                              "," + std::to_string(f));
    std::vector<int> pa, pb;  // two pull sets with the same effect on the block
    for (int e : L) (p.cr[e][f0] ? pa : pb).push_back(e);
    for (int f : R) ((p.cr[e0][f] ^ p.cr[e0][f0]) ? pa : pb).push_back(f);
    auto count_l = [&](const std::vector<int>& s) {
        return std::count_if(s.begin(), s.end(), [&](int e) { return sl.count(e) > 0; });
    };
    const auto& chosen =
        pa.size() != pb.size() ? (pa.size() < pb.size() ? pa : pb) : (count_l(pa) <= count_l(pb) ? pa : pb);
    for (int e : chosen) pull_in_place(p, e, v);
    out.pulled = chosen;
    for (int e : L)
        for (int f : R)
            if (p.cr[e][f]) throw Error(ErrorKind::InternalContradiction, "block normalization left an odd pair");
    return out;
}

// ---- weak Hanani-Tutte pipeline

WeakHtResult weak_ht_embed(const ParityDrawing& d) {
    d.graph.validate_strip();
    OuterFaceCount oc = count_outer_faces(d);
    if (oc.count == 0) throw Error(ErrorKind::InternalContradiction, "even drawing without an outer face");
    WeakHtResult r;
    r.outer_face_count = oc.count;
    r.outer_face = oc.outer_faces[0];
    int outer_dart = d.graph.num_edges() > 0 ? oc.faces.faces[r.outer_face].darts[0] : -1;
    r.embedding = d.as_embedding(outer_dart);
    Verdict v = check_embedded(r.embedding);
    if (!v.planar) throw Error(ErrorKind::InternalContradiction, "embedding from an even drawing has an obstruction");
    EmbedResult er = embed(r.embedding);
    if (!er.verdict.planar || !er.drawing)
        throw Error(ErrorKind::InternalContradiction, "embedder rejected an embedding from an even drawing");
    r.drawing = *er.drawing;
    Violation bad = verify_strip_embedding(r.drawing);
    if (bad.ok()) bad = verify_realizes(r.drawing, r.embedding);
    if (!bad.ok()) throw Error(ErrorKind::InternalContradiction, "drawing check failed: " + bad.describe());
    return r;
}

// ---- generators

ParityDrawing perturb_even(const ParityDrawing& d, std::mt19937_64& rng, int k) {
    ParityDrawing p = d;
    int n = p.graph.num_vertices();
    if (n == 0) return p;
    for (int i = 0; i < k; ++i) {
        int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (p.rotation[v].empty()) continue;
        if (rng() & 1) {
            for (int dd : p.rotation[v]) pull_in_place(p, dart_edge(dd), v);
        } else {
            int L = static_cast<int>(p.rotation[v].size());
            reanchor_ray(p, v, std::uniform_int_distribution<int>(0, L - 1)(rng));
        }
    }
    return p;
}

ParityDrawing perturb_independently_even(const ParityDrawing& d, std::mt19937_64& rng, int k) {
    ParityDrawing p = d;
    int m = p.graph.num_edges();
    if (m == 0) return p;
    for (int i = 0; i < k; ++i) {
        int e = std::uniform_int_distribution<int>(0, m - 1)(rng);
        int v = (rng() & 1) ? p.graph.edge(e).u : p.graph.edge(e).v;
        pull_in_place(p, e, v);
    }
    return p;
}

ParityDrawing wrap_edge_around_graph(const ParityDrawing& d, int e) {
    ParityDrawing p = d;
    for (int v = 0; v < p.graph.num_vertices(); ++v) pull_in_place(p, e, v);
    return p;
}

}  // namespace sp
