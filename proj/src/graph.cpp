#include "sp/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace sp {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::StripViolation: return "StripViolation";
        case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
        case ErrorKind::DuplicateVertexId: return "DuplicateVertexId";
        case ErrorKind::NotIntraCluster: return "NotIntraCluster";
        case ErrorKind::LoopContraction: return "LoopContraction";
        case ErrorKind::NonContiguousPartition: return "NonContiguousPartition";
        case ErrorKind::NotACycle: return "NotACycle";
        case ErrorKind::NotAPath: return "NotAPath";
        case ErrorKind::WalkNotInGraph: return "WalkNotInGraph";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NotBounded: return "NotBounded";
        case ErrorKind::NotEven: return "NotEven";
        case ErrorKind::Not3ConnectedSubdivision: return "Not3ConnectedSubdivision";
        case ErrorKind::OddIndependentPair: return "OddIndependentPair";
        case ErrorKind::NotIncident: return "NotIncident";
        case ErrorKind::ParityObstruction: return "ParityObstruction";
        case ErrorKind::InternalContradiction: return "InternalContradiction";
        case ErrorKind::TooManyLeaves: return "TooManyLeaves";
        case ErrorKind::StairViolation: return "StairViolation";
        case ErrorKind::NotASubdividedStar: return "NotASubdividedStar";
        case ErrorKind::NotATree: return "NotATree";
        case ErrorKind::BadClusterRange: return "BadClusterRange";
        case ErrorKind::LowDegree: return "LowDegree";
        case ErrorKind::NotATheta: return "NotATheta";
        case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorKind::NotCandidateEmbedding: return "NotCandidateEmbedding";
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::UnsupportedClass: return "UnsupportedClass";
    }
    return "Unknown";
}

// ---------------------------------------------------------------- ClusteredGraph

int ClusteredGraph::add_vertex(const std::string& name, int cluster) {
    if (index_.count(name)) throw Error(ErrorKind::DuplicateVertexId, name);
    int id = num_vertices();
    names_.push_back(name);
    gamma_.push_back(cluster);
    darts_at_.emplace_back();
    index_[name] = id;
    return id;
}

int ClusteredGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        throw Error(ErrorKind::DanglingEndpoint, "edge endpoint out of range");
    int e = num_edges();
    edges_.push_back({u, v});
    darts_at_[u].push_back(make_dart(e, 0));
    darts_at_[v].push_back(make_dart(e, 1));
    return e;
}

std::optional<int> ClusteredGraph::find_vertex(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int ClusteredGraph::min_cluster() const {
    return gamma_.empty() ? 0 : *std::min_element(gamma_.begin(), gamma_.end());
}

int ClusteredGraph::max_cluster() const {
    return gamma_.empty() ? 0 : *std::max_element(gamma_.begin(), gamma_.end());
}

std::vector<std::vector<int>> ClusteredGraph::components() const {
    std::vector<int> comp(num_vertices(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < num_vertices(); ++s) {
        if (comp[s] >= 0) continue;
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = static_cast<int>(out.size()) - 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            out.back().push_back(x);
            for (int d : darts_at_[x]) {
                int y = head(d);
                if (comp[y] < 0) {
                    comp[y] = comp[s];
                    stack.push_back(y);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool ClusteredGraph::is_connected() const { return components().size() <= 1; }

bool ClusteredGraph::is_tree() const {
    return num_vertices() >= 1 && num_edges() == num_vertices() - 1 && is_connected() && !has_loops();
}

bool ClusteredGraph::has_loops() const {
    for (int e = 0; e < num_edges(); ++e)
        if (is_loop(e)) return true;
    return false;
}

std::optional<int> ClusteredGraph::find_edge(int u, int v) const {
    for (int d : darts_at_[u])
        if (head(d) == v) return dart_edge(d);
    return std::nullopt;
}

std::vector<int> ClusteredGraph::darts_of_vertex_path(const std::vector<int>& vertices) const {
    std::vector<int> darts;
    for (size_t i = 0; i + 1 < vertices.size(); ++i) {
        int found = -1;
        for (int d : darts_at_[vertices[i]])
            if (head(d) == vertices[i + 1]) {
                found = d;
                break;
            }
        if (found < 0) throw Error(ErrorKind::WalkNotInGraph, "no edge " + names_[vertices[i]] + "-" + names_[vertices[i + 1]]);
        darts.push_back(found);
    }
    return darts;
}

void ClusteredGraph::validate_strip() const {
    for (int e = 0; e < num_edges(); ++e) {
        int a = gamma_[edges_[e].u], b = gamma_[edges_[e].v];
        if (std::abs(a - b) > 1)
            throw Error(ErrorKind::StripViolation, names_[edges_[e].u] + "-" + names_[edges_[e].v]);
    }
}

ClusteredGraph build_clustered_graph(const GraphSpec& spec) {
    std::set<int> occupied;
    for (const auto& [name, c] : spec.vertices) occupied.insert(c);
    std::map<int, int> rank;
    int next = 1;
    for (int c : occupied) rank[c] = next++;
    std::set<std::string> seen;
    for (const auto& [name, c] : spec.vertices)
        if (!seen.insert(name).second) throw Error(ErrorKind::DuplicateVertexId, name);
    std::map<std::string, int> original;
    for (const auto& [name, c] : spec.vertices) original[name] = c;
    for (const auto& [a, b] : spec.edges) {
        if (!original.count(a)) throw Error(ErrorKind::DanglingEndpoint, a);
        if (!original.count(b)) throw Error(ErrorKind::DanglingEndpoint, b);
        if (std::abs(original[a] - original[b]) > 1) throw Error(ErrorKind::StripViolation, a + "-" + b);
        if (a == b && !spec.allow_loops) throw Error(ErrorKind::InvalidInput, "loop at " + a);
    }
    ClusteredGraph g;
    for (const auto& [name, c] : spec.vertices) g.add_vertex(name, rank[c]);
    for (const auto& [a, b] : spec.edges) g.add_edge(*g.find_vertex(a), *g.find_vertex(b));
    return g;
}

std::vector<std::vector<int>> default_rotation(const ClusteredGraph& g) {
    std::vector<std::vector<int>> rot(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) rot[v] = g.darts_at(v);
    return rot;
}

// ---------------------------------------------------------------- EmbeddedGraph

EmbeddedGraph::EmbeddedGraph(ClusteredGraph g, std::vector<std::vector<int>> rotation, int outer_dart)
    : g_(std::move(g)), rot_(std::move(rotation)), pos_(g_.num_darts(), -1), outer_dart_(outer_dart) {
    if (static_cast<int>(rot_.size()) != g_.num_vertices())
        throw Error(ErrorKind::InvalidInput, "rotation size mismatch");
    for (int v = 0; v < g_.num_vertices(); ++v) {
        if (rot_[v].size() != g_.darts_at(v).size())
            throw Error(ErrorKind::InvalidInput, "rotation at " + g_.name(v) + " has wrong length");
        for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
            int d = rot_[v][i];
            if (d < 0 || d >= g_.num_darts() || g_.tail(d) != v || pos_[d] >= 0)
                throw Error(ErrorKind::InvalidInput, "bad dart in rotation at " + g_.name(v));
            pos_[d] = i;
        }
    }
    if (g_.num_edges() > 0 && (outer_dart_ < 0 || outer_dart_ >= g_.num_darts()))
        throw Error(ErrorKind::InvalidInput, "outer face dart out of range");
}

int EmbeddedGraph::cw_next(int d) const {
    const auto& r = rot_[g_.tail(d)];
    int i = pos_[d] + 1;
    return r[i == static_cast<int>(r.size()) ? 0 : i];
}

int EmbeddedGraph::cw_prev(int d) const {
    const auto& r = rot_[g_.tail(d)];
    int i = pos_[d];
    return r[i == 0 ? r.size() - 1 : i - 1];
}

FaceMap EmbeddedGraph::faces() const { return trace_faces(*this); }

int EmbeddedGraph::euler_characteristic() const {
    FaceMap fm = trace_faces(*this);
    return g_.num_vertices() - g_.num_edges() + static_cast<int>(fm.faces.size());
}

FaceMap trace_faces(const EmbeddedGraph& emb) {
    const ClusteredGraph& g = emb.graph();
    FaceMap fm;
    fm.face_of_dart.assign(g.num_darts(), -1);
    for (int d0 = 0; d0 < g.num_darts(); ++d0) {
        if (fm.face_of_dart[d0] >= 0) continue;
        FacialWalk f;
        f.id = static_cast<int>(fm.faces.size());
        int d = d0;
        do {
            fm.face_of_dart[d] = f.id;
            f.darts.push_back(d);
            d = emb.face_next(d);
        } while (d != d0);
        fm.faces.push_back(std::move(f));
    }
    if (emb.outer_dart() >= 0 && emb.outer_dart() < g.num_darts()) fm.outer = fm.face_of_dart[emb.outer_dart()];
    return fm;
}

// ---------------------------------------------------------------- contraction / split

ContractResult contract_intra_cluster_edge(const EmbeddedGraph& emb, int e) {
    const ClusteredGraph& g = emb.graph();
    if (e < 0 || e >= g.num_edges()) throw Error(ErrorKind::InvalidInput, "edge out of range");
    if (g.is_loop(e)) throw Error(ErrorKind::LoopContraction, "edge " + std::to_string(e));
    int u = g.edge(e).u, v = g.edge(e).v;
    if (g.gamma(u) != g.gamma(v)) throw Error(ErrorKind::NotIntraCluster, g.name(u) + "-" + g.name(v));

    ContractResult res;
    res.vertex_map.assign(g.num_vertices(), -1);
    ClusteredGraph ng;
    for (int x = 0; x < g.num_vertices(); ++x) {
        if (x == v) continue;
        res.vertex_map[x] = ng.add_vertex(g.name(x), g.gamma(x));
    }
    res.vertex_map[v] = res.vertex_map[u];
    res.edge_map.assign(g.num_edges(), -1);
    for (int f = 0; f < g.num_edges(); ++f) {
        if (f == e) continue;
        res.edge_map[f] = ng.add_edge(res.vertex_map[g.edge(f).u], res.vertex_map[g.edge(f).v]);
    }
    auto map_dart = [&](int d) { return make_dart(res.edge_map[dart_edge(d)], d & 1); };

    std::vector<std::vector<int>> rot(ng.num_vertices());
    for (int x = 0; x < g.num_vertices(); ++x) {
        if (x == u || x == v) continue;
        for (int d : emb.rotation(x)) rot[res.vertex_map[x]].push_back(map_dart(d));
    }
    int du = make_dart(e, 0), dv = make_dart(e, 1);
    auto& merged = rot[res.vertex_map[u]];
    for (int d = emb.cw_next(du); d != du; d = emb.cw_next(d)) merged.push_back(map_dart(d));
    for (int d = emb.cw_next(dv); d != dv; d = emb.cw_next(d)) merged.push_back(map_dart(d));

    int outer = -1;
    if (ng.num_edges() > 0 && emb.outer_dart() >= 0) {
        int d = emb.outer_dart();
        while (dart_edge(d) == e) d = emb.face_next(d);
        outer = map_dart(d);
    }
    res.embedding = EmbeddedGraph(std::move(ng), std::move(rot), outer);
    return res;
}

SplitResult split_vertex(const EmbeddedGraph& emb, int v, const std::vector<int>& moved) {
    const ClusteredGraph& g = emb.graph();
    const auto& r = emb.rotation(v);
    int deg = static_cast<int>(r.size());
    std::vector<char> in(deg, 0);
    for (int d : moved) {
        if (d < 0 || d >= g.num_darts() || g.tail(d) != v) throw Error(ErrorKind::NonContiguousPartition, "dart not at vertex");
        in[emb.position(d)] = 1;
    }
    int cnt = static_cast<int>(std::count(in.begin(), in.end(), 1));
    if (cnt != static_cast<int>(moved.size())) throw Error(ErrorKind::NonContiguousPartition, "repeated dart");
    int start = -1;
    if (cnt == deg) {
        start = 0;
    } else if (cnt > 0) {
        int changes = 0;
        for (int i = 0; i < deg; ++i) {
            int j = (i + deg - 1) % deg;
            if (in[i] && !in[j]) {
                ++changes;
                start = i;
            }
        }
        if (changes != 1) throw Error(ErrorKind::NonContiguousPartition, "arc at " + g.name(v));
    }

    ClusteredGraph ng;
    for (int x = 0; x < g.num_vertices(); ++x) ng.add_vertex(g.name(x), g.gamma(x));
    std::string nm = g.name(v) + "'";
    while (ng.find_vertex(nm)) nm += "'";
    int w = ng.add_vertex(nm, g.gamma(v));
    std::vector<char> moved_dart(g.num_darts(), 0);
    for (int d : moved) moved_dart[d] = 1;
    for (int f = 0; f < g.num_edges(); ++f) {
        int a = g.edge(f).u, b = g.edge(f).v;
        if (moved_dart[make_dart(f, 0)]) a = w;
        if (moved_dart[make_dart(f, 1)]) b = w;
        ng.add_edge(a, b);
    }
    int ne = ng.add_edge(v, w);
    std::vector<std::vector<int>> rot = emb.rotations();
    rot.emplace_back();
    std::vector<int> rest, arc;
    if (start < 0) {
        rest = r;
    } else {
        for (int k = 0; k < cnt; ++k) arc.push_back(r[(start + k) % deg]);
        for (int k = cnt; k < deg; ++k) rest.push_back(r[(start + k) % deg]);
    }
    rot[v].clear();
    rot[v].push_back(make_dart(ne, 0));
    rot[v].insert(rot[v].end(), rest.begin(), rest.end());
    rot[w].push_back(make_dart(ne, 1));
    rot[w].insert(rot[w].end(), arc.begin(), arc.end());
    SplitResult res;
    int outer = emb.outer_dart() >= 0 ? emb.outer_dart() : make_dart(ne, 0);
    res.embedding = EmbeddedGraph(std::move(ng), std::move(rot), outer);
    res.new_vertex = w;
    res.new_edge = ne;
    return res;
}

// ---------------------------------------------------------------- cycles

static void validate_cycle(const ClusteredGraph& g, const std::vector<int>& edges) {
    if (edges.empty()) throw Error(ErrorKind::NotACycle, "empty");
    std::set<int> seen;
    std::map<int, int> deg;
    for (int e : edges) {
        if (e < 0 || e >= g.num_edges() || !seen.insert(e).second) throw Error(ErrorKind::NotACycle, "bad edge list");
        deg[g.edge(e).u]++;
        deg[g.edge(e).v]++;
    }
    for (auto [x, d] : deg)
        if (d != 2) throw Error(ErrorKind::NotACycle, "vertex degree " + std::to_string(d));
    // connectivity of the edge set
    std::map<int, std::vector<int>> adj;
    for (int e : edges) {
        adj[g.edge(e).u].push_back(g.edge(e).v);
        adj[g.edge(e).v].push_back(g.edge(e).u);
    }
    std::set<int> vis;
    std::vector<int> st{deg.begin()->first};
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        if (!vis.insert(x).second) continue;
        for (int y : adj[x]) st.push_back(y);
    }
    if (vis.size() != deg.size()) throw Error(ErrorKind::NotACycle, "disconnected");
}

std::vector<int> cycle_edges_from_vertices(const ClusteredGraph& g, const std::vector<int>& cycle) {
    std::vector<int> edges;
    std::set<int> used;
    for (size_t i = 0; i < cycle.size(); ++i) {
        int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        int found = -1;
        for (int d : g.darts_at(a))
            if (g.head(d) == b && !used.count(dart_edge(d))) {
                found = dart_edge(d);
                break;
            }
        if (found < 0) throw Error(ErrorKind::NotACycle, "missing edge");
        used.insert(found);
        edges.push_back(found);
    }
    return edges;
}

std::set<int> interior_vertices_of_cycle(const EmbeddedGraph& emb, const std::vector<int>& cycle_edges) {
    const ClusteredGraph& g = emb.graph();
    validate_cycle(g, cycle_edges);
    FaceMap fm = trace_faces(emb);
    int nf = static_cast<int>(fm.faces.size());
    std::vector<int> parent(nf);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<char> on_cycle_edge(g.num_edges(), 0);
    std::vector<char> on_cycle_vertex(g.num_vertices(), 0);
    for (int e : cycle_edges) {
        on_cycle_edge[e] = 1;
        on_cycle_vertex[g.edge(e).u] = on_cycle_vertex[g.edge(e).v] = 1;
    }
    for (int e = 0; e < g.num_edges(); ++e)
        if (!on_cycle_edge[e]) parent[find(fm.face_of_dart[2 * e])] = find(fm.face_of_dart[2 * e + 1]);
    int outer_class = fm.outer >= 0 ? find(fm.outer) : -1;
    std::set<int> inside;
    for (int x = 0; x < g.num_vertices(); ++x) {
        if (on_cycle_vertex[x] || g.degree(x) == 0) continue;
        if (find(fm.face_of_dart[g.darts_at(x)[0]]) != outer_class) inside.insert(x);
    }
    return inside;
}

// ---------------------------------------------------------------- orientation

int oriented_tail(const ClusteredGraph& g, int e) {
    int u = g.edge(e).u, v = g.edge(e).v;
    if (g.gamma(u) != g.gamma(v)) return g.gamma(u) < g.gamma(v) ? u : v;
    return g.name(u) <= g.name(v) ? u : v;
}

DirectedStripGraph orient_by_labels(const ClusteredGraph& g) {
    DirectedStripGraph dg;
    dg.base = g;
    dg.tail.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) dg.tail[e] = oriented_tail(g, e);
    return dg;
}

bool DirectedStripGraph::is_source(int v) const {
    for (int d : base.darts_at(v))
        if (tail[dart_edge(d)] != v) return false;
    return true;
}

bool DirectedStripGraph::is_sink(int v) const {
    for (int d : base.darts_at(v))
        if (tail[dart_edge(d)] == v && !base.is_loop(dart_edge(d))) return false;
    return true;
}

std::vector<int> DirectedStripGraph::sources() const {
    std::vector<int> out;
    for (int v = 0; v < base.num_vertices(); ++v)
        if (is_source(v)) out.push_back(v);
    return out;
}

std::vector<int> DirectedStripGraph::sinks() const {
    std::vector<int> out;
    for (int v = 0; v < base.num_vertices(); ++v)
        if (is_sink(v)) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------- suppression

SuppressResult suppress_degree_two(const ClusteredGraph& g, const std::set<int>& keep) {
    SuppressResult res;
    int n = g.num_vertices();
    std::vector<char> kept(n, 0);
    for (int v = 0; v < n; ++v) kept[v] = keep.count(v) || g.degree(v) != 2;
    // components consisting only of degree-2 vertices keep their first vertex
    for (const auto& comp : g.components()) {
        bool any = false;
        for (int v : comp) any = any || kept[v];
        if (!any) kept[comp.front()] = 1;
    }
    res.vertex_map.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (kept[v]) {
            res.vertex_map[v] = res.graph.add_vertex(g.name(v), g.gamma(v));
            res.original_vertex.push_back(v);
        }
    std::vector<char> used(g.num_edges(), 0);
    for (int s = 0; s < n; ++s) {
        if (!kept[s]) continue;
        for (int d0 : g.darts_at(s)) {
            if (used[dart_edge(d0)]) continue;
            SuppressedPath p;
            p.vertices.push_back(s);
            int d = d0;
            while (true) {
                used[dart_edge(d)] = 1;
                int x = g.head(d);
                p.vertices.push_back(x);
                if (kept[x]) break;
                int nd = g.darts_at(x)[0] == dart_rev(d) ? g.darts_at(x)[1] : g.darts_at(x)[0];
                d = nd;
            }
            p.min_label = p.max_label = g.gamma(s);
            for (int x : p.vertices) {
                p.min_label = std::min(p.min_label, g.gamma(x));
                p.max_label = std::max(p.max_label, g.gamma(x));
            }
            res.graph.add_edge(res.vertex_map[p.vertices.front()], res.vertex_map[p.vertices.back()]);
            res.paths.push_back(std::move(p));
        }
    }
    return res;
}

}  // namespace sp
