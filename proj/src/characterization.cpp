#include "sp/characterization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "sp/embedder.hpp"

namespace sp {

// ---------------------------------------------------------------- walks and i_A

std::vector<int> Walk::vertices(const ClusteredGraph& g) const {
    std::vector<int> vs;
    if (darts.empty()) return vs;
    for (int d : darts) vs.push_back(g.tail(d));
    if (!closed) vs.push_back(g.head(darts.back()));
    return vs;
}

Walk walk_from_vertices(const ClusteredGraph& g, const std::vector<int>& vertices, bool closed) {
    Walk w;
    std::vector<int> seq = vertices;
    if (closed && !seq.empty()) seq.push_back(seq.front());
    w.darts = g.darts_of_vertex_path(seq);
    w.closed = closed;
    return w;
}

namespace {

struct Occurrence {
    int vertex;
    int prev;  // dart toward the predecessor, -1 if none
    int next;  // dart toward the successor, -1 if none
};

void check_walk(const ClusteredGraph& g, const Walk& w) {
    for (size_t i = 0; i < w.darts.size(); ++i) {
        int d = w.darts[i];
        if (d < 0 || d >= g.num_darts()) throw Error(ErrorKind::WalkNotInGraph, "dart out of range");
        if (i + 1 < w.darts.size() && g.head(d) != g.tail(w.darts[i + 1]))
            throw Error(ErrorKind::WalkNotInGraph, "walk not consecutive");
    }
    if (w.closed && !w.darts.empty() && g.head(w.darts.back()) != g.tail(w.darts.front()))
        throw Error(ErrorKind::WalkNotInGraph, "closed walk does not close");
}

std::vector<Occurrence> occurrences(const ClusteredGraph& g, const Walk& w, bool with_ends) {
    std::vector<Occurrence> occ;
    int m = static_cast<int>(w.darts.size());
    if (m == 0) return occ;
    if (w.closed) {
        for (int i = 0; i < m; ++i) occ.push_back({g.tail(w.darts[i]), dart_rev(w.darts[(i + m - 1) % m]), w.darts[i]});
        return occ;
    }
    if (with_ends) occ.push_back({g.tail(w.darts[0]), -1, w.darts[0]});
    for (int i = 1; i < m; ++i) occ.push_back({g.tail(w.darts[i]), dart_rev(w.darts[i - 1]), w.darts[i]});
    if (with_ends) occ.push_back({g.head(w.darts[m - 1]), dart_rev(w.darts[m - 1]), -1});
    return occ;
}

int side_of(int x, int p, int q, const std::vector<int>& pos, int deg) {
    if (x < 0 || x == p || x == q) return 0;
    int a = ((pos[x] - pos[p]) % deg + deg) % deg;
    int b = ((pos[q] - pos[p]) % deg + deg) % deg;
    return a < b ? 1 : -1;
}

}  // namespace

int local_term_half(const LocalTerm& t, const std::vector<int>& pos, const ClusteredGraph& g) {
    if (t.p < 0 || t.q < 0 || t.p == t.q) return 0;
    int deg = g.degree(t.vertex);
    return side_of(t.r, t.p, t.q, pos, deg) - side_of(t.t, t.p, t.q, pos, deg);
}

int signature_half(const PairSignature& s, const std::vector<int>& pos, const ClusteredGraph& g) {
    int sum = 0;
    for (const auto& t : s.terms) sum += local_term_half(t, pos, g);
    return sum;
}

static std::vector<int> positions_of(const EmbeddedGraph& emb) {
    std::vector<int> pos(emb.graph().num_darts());
    for (int d = 0; d < emb.graph().num_darts(); ++d) pos[d] = emb.position(d);
    return pos;
}

int algebraic_intersection_half(const EmbeddedGraph& emb, const Walk& w1, const Walk& w2) {
    const ClusteredGraph& g = emb.graph();
    check_walk(g, w1);
    check_walk(g, w2);
    std::vector<int> pos = positions_of(emb);
    auto o1 = occurrences(g, w1, false);
    auto o2 = occurrences(g, w2, true);
    int sum = 0;
    for (const auto& a : o1)
        for (const auto& b : o2)
            if (a.vertex == b.vertex) sum += local_term_half({a.vertex, a.prev, a.next, b.prev, b.next}, pos, g);
    return sum;
}

// ---------------------------------------------------------------- caps and cups

std::optional<CapCup> classify_cap_cup_darts(const ClusteredGraph& g, const std::vector<int>& darts) {
    if (darts.empty()) return std::nullopt;
    std::vector<int> vs{g.tail(darts[0])};
    for (int d : darts) vs.push_back(g.head(d));
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error(ErrorKind::NotAPath, "repeated vertex");
    int a = g.gamma(vs.front()), b = g.gamma(vs.back());
    if (a != b) return std::nullopt;
    bool above = true, below = true;
    for (size_t i = 1; i + 1 < vs.size(); ++i) {
        above = above && g.gamma(vs[i]) > a;
        below = below && g.gamma(vs[i]) < a;
    }
    CapCup c;
    c.path = vs;
    c.darts = darts;
    c.level = a;
    if (above) {
        c.kind = CapCupKind::Cap;
        return c;
    }
    if (below) {
        c.kind = CapCupKind::Cup;
        return c;
    }
    return std::nullopt;
}

std::optional<CapCup> classify_cap_cup(const ClusteredGraph& g, const std::vector<int>& path) {
    if (path.size() < 2) return std::nullopt;
    return classify_cap_cup_darts(g, g.darts_of_vertex_path(path));
}

static std::pair<int, int> label_range(const ClusteredGraph& g, const std::vector<int>& vs) {
    int lo = g.gamma(vs[0]), hi = lo;
    for (int v : vs) {
        lo = std::min(lo, g.gamma(v));
        hi = std::max(hi, g.gamma(v));
    }
    return {lo, hi};
}

std::optional<InterleavingPair> make_interleaving_pair(const ClusteredGraph& g, const CapCup& cap, const CapCup& cup) {
    if (cap.kind != CapCupKind::Cap || cup.kind != CapCupKind::Cup) return std::nullopt;
    auto [min1, max1] = label_range(g, cap.path);
    auto [min2, max2] = label_range(g, cup.path);
    if (!(min1 < min2 && min2 <= max1 && max1 < max2)) return std::nullopt;
    std::vector<int> pos2(g.num_vertices(), -1);
    for (size_t i = 0; i < cup.path.size(); ++i) pos2[cup.path[i]] = static_cast<int>(i);
    int first = -1, last = -1, count = 0;
    for (size_t i = 0; i < cap.path.size(); ++i)
        if (pos2[cap.path[i]] >= 0) {
            if (first < 0) first = static_cast<int>(i);
            last = static_cast<int>(i);
            ++count;
        }
    if (count == 0 || last - first + 1 != count) return std::nullopt;
    std::set<int> cup_edges;
    for (int d : cup.darts) cup_edges.insert(dart_edge(d));
    int common = 0;
    for (int d : cap.darts) common += cup_edges.count(dart_edge(d)) ? 1 : 0;
    for (int i = first; i < last; ++i)
        if (!cup_edges.count(dart_edge(cap.darts[i]))) return std::nullopt;
    if (common != count - 1) return std::nullopt;
    InterleavingPair pr;
    pr.cap = cap;
    pr.cup = cup;
    pr.shared.assign(cap.path.begin() + first, cap.path.begin() + last + 1);
    return pr;
}

static std::vector<LocalTerm> pair_terms(const ClusteredGraph& g, const InterleavingPair& pr) {
    std::vector<LocalTerm> terms;
    auto term_at = [&](int x) {
        LocalTerm t;
        t.vertex = x;
        const auto& cp = pr.cap.path;
        const auto& up = pr.cup.path;
        int i = static_cast<int>(std::find(cp.begin(), cp.end(), x) - cp.begin());
        int k = static_cast<int>(std::find(up.begin(), up.end(), x) - up.begin());
        t.p = i > 0 ? dart_rev(pr.cap.darts[i - 1]) : -1;
        t.q = i + 1 < static_cast<int>(cp.size()) ? pr.cap.darts[i] : -1;
        t.r = k > 0 ? dart_rev(pr.cup.darts[k - 1]) : -1;
        t.t = k + 1 < static_cast<int>(up.size()) ? pr.cup.darts[k] : -1;
        return t;
    };
    (void)g;
    terms.push_back(term_at(pr.shared.front()));
    if (pr.shared.size() > 1) terms.push_back(term_at(pr.shared.back()));
    return terms;
}

Feasibility pair_feasibility(const EmbeddedGraph& emb, const InterleavingPair& pair) {
    Walk w1{pair.cap.darts, false}, w2{pair.cup.darts, false};
    Feasibility f;
    f.ia_half = algebraic_intersection_half(emb, w1, w2);
    f.feasible = f.ia_half == 0;
    return f;
}

// ---------------------------------------------------------------- catalogue

namespace {

// Simple paths with both ends at label `level` and interior strictly above (cap) or below (cup).
void enumerate_level_paths(const ClusteredGraph& g, CapCupKind kind, int start, long budget, long& count,
                           std::vector<CapCup>& out, bool& exceeded) {
    int level = g.gamma(start);
    std::vector<char> on(g.num_vertices(), 0);
    std::vector<int> darts;
    std::function<void(int)> dfs = [&](int x) {
        if (exceeded) return;
        for (int d : g.darts_at(x)) {
            int y = g.head(d);
            if (on[y] || g.is_loop(dart_edge(d))) continue;
            int gy = g.gamma(y);
            if (gy == level) {
                if (!darts.empty() && y > start) {
                    darts.push_back(d);
                    CapCup c;
                    c.darts = darts;
                    c.path.push_back(start);
                    for (int e : darts) c.path.push_back(g.head(e));
                    c.kind = kind;
                    c.level = level;
                    out.push_back(std::move(c));
                    darts.pop_back();
                    if (++count > budget) {
                        exceeded = true;
                        return;
                    }
                }
                continue;
            }
            bool ok = kind == CapCupKind::Cap ? gy > level : gy < level;
            if (!ok) continue;
            on[y] = 1;
            darts.push_back(d);
            dfs(y);
            darts.pop_back();
            on[y] = 0;
        }
    };
    on[start] = 1;
    dfs(start);
}

std::vector<int> signature_key(const std::vector<LocalTerm>& terms, bool swap_pq, bool swap_rt) {
    std::vector<std::array<int, 5>> rows;
    for (const auto& t : terms) {
        int p = t.p, q = t.q, r = t.r, s = t.t;
        if (swap_pq) std::swap(p, q);
        if (swap_rt) std::swap(r, s);
        rows.push_back({t.vertex, p, q, r, s});
    }
    std::sort(rows.begin(), rows.end());
    std::vector<int> key;
    for (const auto& r : rows) key.insert(key.end(), r.begin(), r.end());
    return key;
}

}  // namespace

PairCatalog build_pair_catalog(const ClusteredGraph& g, const CheckOptions& opt) {
    PairCatalog cat;
    std::map<int, std::vector<CapCup>> caps, cups;
    std::map<int, long> cap_count, cup_count;
    for (int v = 0; v < g.num_vertices(); ++v) {
        bool ex = false;
        enumerate_level_paths(g, CapCupKind::Cap, v, opt.path_budget, cap_count[g.gamma(v)], caps[g.gamma(v)], ex);
        enumerate_level_paths(g, CapCupKind::Cup, v, opt.path_budget, cup_count[g.gamma(v)], cups[g.gamma(v)], ex);
        if (ex) {
            cat.budget_exceeded = true;
            return cat;
        }
    }
    struct Info {
        int lo, hi;
    };
    auto info = [&](const CapCup& c) {
        auto [lo, hi] = label_range(g, c.path);
        return Info{lo, hi};
    };
    std::set<std::vector<int>> seen;
    for (auto& [s, capl] : caps) {
        for (const CapCup& cap : capl) {
            Info ci = info(cap);
            for (auto& [b, cupl] : cups) {
                if (b <= ci.hi) continue;
                for (const CapCup& cup : cupl) {
                    Info ui = info(cup);
                    if (!(ci.lo < ui.lo && ui.lo <= ci.hi)) continue;
                    auto pr = make_interleaving_pair(g, cap, cup);
                    if (!pr) continue;
                    auto terms = pair_terms(g, *pr);
                    std::vector<int> key = signature_key(terms, false, false);
                    for (int a = 0; a < 2; ++a)
                        for (int c = 0; c < 2; ++c) key = std::min(key, signature_key(terms, a, c));
                    if (!seen.insert(key).second) continue;
                    PairSignature sig;
                    sig.terms = terms;
                    sig.example = static_cast<int>(cat.pairs.size());
                    cat.pairs.push_back(*pr);
                    cat.signatures.push_back(std::move(sig));
                }
            }
        }
    }
    return cat;
}

// ---------------------------------------------------------------- cycles and trapped vertices

bool enumerate_simple_cycles(const ClusteredGraph& g, long budget, std::vector<std::vector<int>>& out) {
    int n = g.num_vertices();
    long count = 0;
    for (int e = 0; e < g.num_edges(); ++e)
        if (g.is_loop(e)) {
            out.push_back({e});
            if (++count > budget) return false;
        }
    std::vector<char> on(n, 0);
    std::vector<int> edges;
    bool ok = true;
    for (int s = 0; s < n && ok; ++s) {
        std::function<void(int)> dfs = [&](int x) {
            if (!ok) return;
            for (int d : g.darts_at(x)) {
                int e = dart_edge(d);
                if (g.is_loop(e)) continue;
                if (!edges.empty() && e == edges.back()) continue;
                int y = g.head(d);
                if (y == s) {
                    if (!edges.empty() && edges.front() < e) {
                        edges.push_back(e);
                        out.push_back(edges);
                        edges.pop_back();
                        if (++count > budget) {
                            ok = false;
                            return;
                        }
                    }
                    continue;
                }
                if (y < s || on[y]) continue;
                on[y] = 1;
                edges.push_back(e);
                dfs(y);
                edges.pop_back();
                on[y] = 0;
            }
        };
        on[s] = 1;
        dfs(s);
        on[s] = 0;
    }
    return ok;
}

std::vector<int> cycle_vertices(const ClusteredGraph& g, const std::vector<int>& edges) {
    std::vector<int> vs;
    if (edges.empty()) return vs;
    if (edges.size() == 1) return {g.edge(edges[0]).u};
    int e0 = edges[0], e1 = edges[1];
    int start = g.edge(e0).u;
    if (start == g.edge(e1).u || start == g.edge(e1).v) start = g.edge(e0).v;
    int x = start;
    for (int e : edges) {
        vs.push_back(x);
        x = g.other(e, x);
    }
    return vs;
}

std::optional<TrappedWitness> find_trapped_vertex(const EmbeddedGraph& emb, const CheckOptions& opt) {
    const ClusteredGraph& g = emb.graph();
    std::vector<std::vector<int>> cycles;
    if (!enumerate_simple_cycles(g, opt.cycle_budget, cycles))
        throw Error(ErrorKind::BudgetExceeded, "cycle enumeration exceeded " + std::to_string(opt.cycle_budget));
    if (cycles.empty()) return std::nullopt;
    FaceMap fm = trace_faces(emb);
    int nf = static_cast<int>(fm.faces.size());
    std::vector<int> parent(nf);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& cyc : cycles) {
        int lo = 1 << 30, hi = -(1 << 30);
        std::vector<char> on_vertex(g.num_vertices(), 0), on_edge(g.num_edges(), 0);
        for (int e : cyc) {
            on_edge[e] = 1;
            for (int x : {g.edge(e).u, g.edge(e).v}) {
                on_vertex[x] = 1;
                lo = std::min(lo, g.gamma(x));
                hi = std::max(hi, g.gamma(x));
            }
        }
        std::vector<int> candidates;
        for (int x = 0; x < g.num_vertices(); ++x)
            if (!on_vertex[x] && g.degree(x) > 0 && (g.gamma(x) < lo || g.gamma(x) > hi)) candidates.push_back(x);
        if (candidates.empty()) continue;
        std::iota(parent.begin(), parent.end(), 0);
        for (int e = 0; e < g.num_edges(); ++e)
            if (!on_edge[e]) parent[find(fm.face_of_dart[2 * e])] = find(fm.face_of_dart[2 * e + 1]);
        int outer_class = find(fm.outer);
        for (int x : candidates)
            if (find(fm.face_of_dart[g.darts_at(x)[0]]) != outer_class) {
                TrappedWitness w;
                w.vertex = x;
                w.cycle_edges = cyc;
                w.cycle = cycle_vertices(g, cyc);
                return w;
            }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- interleaving extraction

namespace {

std::vector<std::vector<int>> subpaths(const std::vector<int>& darts) {
    std::vector<std::vector<int>> out;
    int m = static_cast<int>(darts.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j <= m; ++j) out.emplace_back(darts.begin() + i, darts.begin() + j);
    return out;
}

// Simple paths from a to b using only edges in `allowed`.
void paths_between(const ClusteredGraph& g, int a, int b, const std::set<int>& allowed,
                   std::vector<std::vector<int>>& out) {
    std::vector<char> on(g.num_vertices(), 0);
    std::vector<int> darts;
    std::function<void(int)> dfs = [&](int x) {
        if (x == b) {
            out.push_back(darts);
            return;
        }
        for (int d : g.darts_at(x)) {
            if (!allowed.count(dart_edge(d))) continue;
            int y = g.head(d);
            if (on[y]) continue;
            on[y] = 1;
            darts.push_back(d);
            dfs(y);
            darts.pop_back();
            on[y] = 0;
        }
    };
    on[a] = 1;
    dfs(a);
}

}  // namespace

InterleavingPair extract_interleaving(const EmbeddedGraph& emb, const std::vector<int>& p1, const std::vector<int>& p2) {
    const ClusteredGraph& g = emb.graph();
    if (p1.size() < 2 || p2.size() < 2) throw Error(ErrorKind::PreconditionViolated, "paths need an edge");
    std::vector<int> d1 = g.darts_of_vertex_path(p1), d2 = g.darts_of_vertex_path(p2);
    std::set<int> l1, l2;
    for (int v : p1) l1.insert(g.gamma(v));
    for (int v : p2) l2.insert(g.gamma(v));
    std::set<int> s1(p1.begin(), p1.end());
    bool meet = false;
    for (int v : p2) meet = meet || s1.count(v);
    if (!meet) throw Error(ErrorKind::PreconditionViolated, "paths do not intersect");
    for (int v : {p2.front(), p2.back()})
        if (l1.count(g.gamma(v))) throw Error(ErrorKind::PreconditionViolated, "end label of P2 occurs on P1");
    for (int v : {p1.front(), p1.back()})
        if (l2.count(g.gamma(v))) throw Error(ErrorKind::PreconditionViolated, "end label of P1 occurs on P2");
    if (find_trapped_vertex(emb)) throw Error(ErrorKind::PreconditionViolated, "embedding has a trapped vertex");

    int target = algebraic_intersection_half(emb, Walk{d1, false}, Walk{d2, false});
    auto as_pair = [&](const CapCup& a, const CapCup& b) -> std::optional<InterleavingPair> {
        if (a.kind == CapCupKind::Cap) return make_interleaving_pair(g, a, b);
        return make_interleaving_pair(g, b, a);
    };
    auto c1 = classify_cap_cup_darts(g, d1), c2 = classify_cap_cup_darts(g, d2);
    if (c1 && c2 && c1->kind != c2->kind) {
        auto pr = as_pair(*c1, *c2);
        if (pr) return *pr;
    }
    for (const auto& s1d : subpaths(d1)) {
        auto a = classify_cap_cup_darts(g, s1d);
        if (!a || a->path.size() < 3) continue;
        for (const auto& s2d : subpaths(d2)) {
            auto b = classify_cap_cup_darts(g, s2d);
            if (!b || b->path.size() < 3 || b->kind == a->kind) continue;
            std::set<int> allowed;
            for (int d : s1d) allowed.insert(dart_edge(d));
            for (int d : s2d) allowed.insert(dart_edge(d));
            std::vector<std::vector<int>> cands;
            paths_between(g, b->path.front(), b->path.back(), allowed, cands);
            for (const auto& cd : cands) {
                auto bb = classify_cap_cup_darts(g, cd);
                if (!bb || bb->kind != b->kind) continue;
                auto pr = as_pair(*a, *bb);
                if (!pr) continue;
                int ia = algebraic_intersection_half(emb, Walk{a->darts, false}, Walk{bb->darts, false});
                bool a_first = a->kind == CapCupKind::Cap;
                (void)a_first;
                if (ia == target || ia == -target) return *pr;
            }
        }
    }
    throw Error(ErrorKind::InternalContradiction, "no interleaving pair with matching intersection number");
}

// ---------------------------------------------------------------- decision

Verdict check_embedded(const EmbeddedGraph& emb, CheckMode mode, const CheckOptions& opt) {
    if (mode == CheckMode::Constructive) return embedder_decide(emb);
    const ClusteredGraph& g = emb.graph();
    Verdict v;
    PairCatalog cat = build_pair_catalog(g, opt);
    if (cat.budget_exceeded)
        throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(opt.path_budget) + " cap/cup paths on one level");
    std::vector<int> pos = positions_of(emb);
    for (const auto& sig : cat.signatures) {
        int h = signature_half(sig, pos, g);
        if (h != 0) {
            v.planar = false;
            v.witness = PairWitness{cat.pairs[sig.example], h};
            return v;
        }
    }
    if (auto t = find_trapped_vertex(emb, opt)) {
        v.planar = false;
        v.witness = *t;
        return v;
    }
    return v;
}

std::string witness_kind(const WitnessVariant& w) {
    switch (w.index()) {
        case 0: return "none";
        case 1: return "UnfeasiblePair";
        case 2: return "TrappedVertex";
        case 3: return "HallViolator";
        case 4: return "NotCandidateEmbedding";
    }
    return "unknown";
}

}  // namespace sp
