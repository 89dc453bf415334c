#include "sp/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <numeric>
#include <cmath>

namespace sp {

namespace {

std::string rooted_form(const ClusteredGraph& g, int x, int parent) {
    std::vector<std::string> kids;
    for (int d : g.darts_at(x)) {
        int y = g.head(d);
        if (y != parent) kids.push_back(rooted_form(g, y, x));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + std::to_string(g.gamma(x));
    for (const auto& k : kids) s += k;
    return s + ")";
}

ClusteredGraph tree_from_edges(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& labels) {
    ClusteredGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i), labels[i]);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

// Parent of each vertex in a breadth-first order from vertex 0, and that order.
std::pair<std::vector<int>, std::vector<int>> bfs_parents(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> parent(n, -2), order{0};
    parent[0] = -1;
    for (size_t i = 0; i < order.size(); ++i)
        for (int y : adj[order[i]])
            if (parent[y] == -2) {
                parent[y] = order[i];
                order.push_back(y);
            }
    return {parent, order};
}

}  // namespace

std::string tree_canonical_form(const ClusteredGraph& g) {
    std::string best;
    for (int r = 0; r < g.num_vertices(); ++r) {
        std::string s = rooted_form(g, r, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

std::vector<std::vector<std::pair<int, int>>> unlabeled_trees(int n) {
    std::vector<std::vector<std::pair<int, int>>> cur{{}};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, std::vector<std::pair<int, int>>> next;
        for (const auto& t : cur)
            for (int x = 0; x < size - 1; ++x) {
                auto e = t;
                e.push_back({x, size - 1});
                ClusteredGraph g = tree_from_edges(size, e, std::vector<int>(size, 0));
                next.emplace(tree_canonical_form(g), e);
            }
        cur.clear();
        for (auto& kv : next) cur.push_back(kv.second);
    }
    return n >= 1 ? cur : std::vector<std::vector<std::pair<int, int>>>{};
}

std::vector<ClusteredGraph> enumerate_strip_trees(int max_vertices, int max_clusters, int min_vertices) {
    std::vector<ClusteredGraph> out;
    for (int n = std::max(1, min_vertices); n <= max_vertices; ++n) {
        std::set<std::string> seen;
        for (const auto& edges : unlabeled_trees(n)) {
            auto [parent, order] = bfs_parents(n, edges);
            long total = 1;
            for (int i = 1; i < n; ++i) total *= 3;
            std::vector<int> labels(n);
            for (long code = 0; code < total; ++code) {
                long c = code;
                labels[0] = 0;
                for (size_t i = 1; i < order.size(); ++i) {
                    labels[order[i]] = labels[parent[order[i]]] + static_cast<int>(c % 3) - 1;
                    c /= 3;
                }
                int lo = *std::min_element(labels.begin(), labels.end());
                int hi = *std::max_element(labels.begin(), labels.end());
                if (hi - lo + 1 > max_clusters) continue;
                std::vector<int> l1(n), l2(n);
                for (int i = 0; i < n; ++i) {
                    l1[i] = labels[i] - lo + 1;
                    l2[i] = hi - labels[i] + 1;
                }
                ClusteredGraph g = tree_from_edges(n, edges, l1);
                std::string key = std::min(tree_canonical_form(g), tree_canonical_form(tree_from_edges(n, edges, l2)));
                if (seen.insert(key).second) out.push_back(std::move(g));
            }
        }
    }
    return out;
}

std::vector<ClusteredGraph> enumerate_three_cluster_trees(int max_vertices, int min_vertices) {
    std::vector<ClusteredGraph> out;
    for (int n = std::max(1, min_vertices); n <= max_vertices; ++n) {
        std::set<std::string> seen;
        long total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        for (const auto& edges : unlabeled_trees(n)) {
            std::vector<int> labels(n);
            for (long code = 0; code < total; ++code) {
                long c = code;
                for (int i = 0; i < n; ++i) {
                    labels[i] = static_cast<int>(c % 3);
                    c /= 3;
                }
                ClusteredGraph g = tree_from_edges(n, edges, labels);
                if (seen.insert(tree_canonical_form(g)).second) out.push_back(std::move(g));
            }
        }
    }
    return out;
}

ClusteredGraph make_star(int center_label, const std::vector<std::vector<int>>& legs) {
    ClusteredGraph g;
    int c = g.add_vertex("c", center_label);
    for (size_t i = 0; i < legs.size(); ++i) {
        int prev = c;
        for (size_t j = 0; j < legs[i].size(); ++j) {
            int x = g.add_vertex("l" + std::to_string(i) + "_" + std::to_string(j + 1), legs[i][j]);
            g.add_edge(prev, x);
            prev = x;
        }
    }
    return g;
}

ClusteredGraph make_theta(int u_label, int v_label, const std::vector<std::vector<int>>& paths) {
    ClusteredGraph g;
    int u = g.add_vertex("u", u_label);
    int v = g.add_vertex("v", v_label);
    for (size_t i = 0; i < paths.size(); ++i) {
        int prev = u;
        for (size_t j = 0; j < paths[i].size(); ++j) {
            int x = g.add_vertex("p" + std::to_string(i) + "_" + std::to_string(j + 1), paths[i][j]);
            g.add_edge(prev, x);
            prev = x;
        }
        g.add_edge(prev, v);
    }
    return g;
}

std::vector<ClusteredGraph> enumerate_stars(int max_degree, int max_leg, int max_clusters) {
    std::vector<std::vector<int>> types;
    std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& leg, int len) {
        if (static_cast<int>(leg.size()) == len) {
            types.push_back(leg);
            return;
        }
        int last = leg.empty() ? 0 : leg.back();
        for (int step = -1; step <= 1; ++step) {
            leg.push_back(last + step);
            grow(leg, len);
            leg.pop_back();
        }
    };
    for (int len = 1; len <= max_leg; ++len) {
        std::vector<int> leg;
        grow(leg, len);
    }
    int T = static_cast<int>(types.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < T; ++i) index[types[i]] = i;
    std::vector<int> neg(T);
    for (int i = 0; i < T; ++i) {
        std::vector<int> m = types[i];
        for (int& x : m) x = -x;
        neg[i] = index[m];
    }
    std::vector<ClusteredGraph> out;
    std::vector<int> pick;
    std::function<void(int, int)> choose = [&](int start, int d) {
        if (static_cast<int>(pick.size()) == d) {
            int lo = 0, hi = 0;
            for (int t : pick)
                for (int x : types[t]) {
                    lo = std::min(lo, x);
                    hi = std::max(hi, x);
                }
            if (hi - lo + 1 > max_clusters) return;
            std::vector<int> refl;
            for (int t : pick) refl.push_back(neg[t]);
            std::sort(refl.begin(), refl.end());
            if (refl < pick) return;
            std::vector<std::vector<int>> legs;
            for (int t : pick) {
                std::vector<int> l = types[t];
                for (int& x : l) x += 1 - lo;
                legs.push_back(l);
            }
            out.push_back(make_star(1 - lo, legs));
            return;
        }
        for (int t = start; t < T; ++t) {
            pick.push_back(t);
            choose(t, d);
            pick.pop_back();
        }
    };
    for (int d = 3; d <= max_degree; ++d) choose(0, d);
    return out;
}

std::vector<ClusteredGraph> enumerate_thetas(int max_paths, int max_len, int max_clusters) {
    std::vector<ClusteredGraph> out;
    std::set<std::pair<int, std::vector<std::vector<int>>>> seen;
    for (int delta = -max_len; delta <= max_len; ++delta) {
        // full label sequences from u (0) to v (delta)
        std::vector<std::vector<int>> types;
        std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& seq, int len) {
            if (static_cast<int>(seq.size()) == len) {
                if (std::abs(seq.back() - delta) <= 1) {
                    auto full = seq;
                    full.push_back(delta);
                    types.push_back(full);
                }
                return;
            }
            for (int step = -1; step <= 1; ++step) {
                seq.push_back(seq.back() + step);
                grow(seq, len);
                seq.pop_back();
            }
        };
        for (int len = 1; len <= max_len; ++len) {
            std::vector<int> seq{0};
            grow(seq, len);
        }
        int T = static_cast<int>(types.size());
        std::vector<int> pick;
        std::function<void(int, int)> choose = [&](int start, int n) {
            if (static_cast<int>(pick.size()) == n) {
                int direct = 0, lo = 0, hi = 0;
                std::vector<std::vector<int>> seqs;
                for (int t : pick) {
                    if (types[t].size() == 2) ++direct;
                    for (int x : types[t]) {
                        lo = std::min(lo, x);
                        hi = std::max(hi, x);
                    }
                    seqs.push_back(types[t]);
                }
                if (direct > 1 || hi - lo + 1 > max_clusters) return;
                auto key_of = [&](bool negate, bool swap) {
                    std::vector<std::vector<int>> ks;
                    int dl = (negate != swap) ? -delta : delta;
                    for (auto s : seqs) {
                        if (swap) {
                            std::reverse(s.begin(), s.end());
                            for (int& x : s) x -= delta;
                        }
                        if (negate)
                            for (int& x : s) x = -x;
                        ks.push_back(s);
                    }
                    std::sort(ks.begin(), ks.end());
                    return std::make_pair(dl, ks);
                };
                auto k0 = key_of(false, false);
                auto best = std::min({k0, key_of(true, false), key_of(false, true), key_of(true, true)});
                if (!seen.insert(best).second) return;
                std::vector<std::vector<int>> internal;
                for (const auto& s : seqs) {
                    std::vector<int> in(s.begin() + 1, s.end() - 1);
                    for (int& x : in) x += 1 - lo;
                    internal.push_back(in);
                }
                out.push_back(make_theta(1 - lo, delta + 1 - lo, internal));
                return;
            }
            for (int t = start; t < T; ++t) {
                pick.push_back(t);
                choose(t, n);
                pick.pop_back();
            }
        };
        for (int n = 3; n <= max_paths; ++n) choose(0, n);
    }
    return out;
}

ClusteredGraph random_tree(Rng& rng, int n, int k) {
    ClusteredGraph g;
    std::uniform_int_distribution<int> lab(1, k), step(-1, 1);
    g.add_vertex("v0", lab(rng));
    for (int i = 1; i < n; ++i) {
        int p = std::uniform_int_distribution<int>(0, i - 1)(rng);
        int l = std::clamp(g.gamma(p) + step(rng), 1, k);
        int x = g.add_vertex("v" + std::to_string(i), l);
        g.add_edge(p, x);
    }
    return g;
}

EmbeddedGraph random_plane_strip_graph(Rng& rng, int n, int k, int chords) {
    std::vector<int> labels{std::uniform_int_distribution<int>(1, k)(rng)};
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rot(1);
    auto tail = [&](int d) { return (d & 1) ? edges[d >> 1].second : edges[d >> 1].first; };
    auto pick = [&](int hi) { return std::uniform_int_distribution<int>(0, hi - 1)(rng); };
    for (int i = 1; i < n; ++i) {
        int p = pick(i);
        int l = std::clamp(labels[p] + pick(3) - 1, 1, k);
        labels.push_back(l);
        int e = static_cast<int>(edges.size());
        edges.push_back({p, i});
        rot[p].insert(rot[p].begin() + pick(static_cast<int>(rot[p].size()) + 1), 2 * e);
        rot.push_back({2 * e + 1});
    }
    for (int attempt = 0; attempt < chords * 20 && chords > 0; ++attempt) {
        int nd = 2 * static_cast<int>(edges.size());
        if (nd == 0) break;
        std::vector<int> pos(nd);
        for (auto& r : rot)
            for (int i = 0; i < static_cast<int>(r.size()); ++i) pos[r[i]] = i;
        auto face_next = [&](int d) {
            const auto& r = rot[tail(d ^ 1)];
            return r[(pos[d ^ 1] + 1) % r.size()];
        };
        int d0 = pick(nd);
        std::vector<int> walk{d0};
        for (int d = face_next(d0); d != d0; d = face_next(d)) walk.push_back(d);
        int i = pick(static_cast<int>(walk.size())), j = pick(static_cast<int>(walk.size()));
        int x = tail(walk[i]), y = tail(walk[j]);
        if (x == y || std::abs(labels[x] - labels[y]) > 1) continue;
        bool dup = false;
        for (auto [a, b] : edges) dup = dup || (a == x && b == y) || (a == y && b == x);
        if (dup) continue;
        int e = static_cast<int>(edges.size());
        edges.push_back({x, y});
        auto& rx = rot[x];
        rx.insert(rx.begin() + pos[walk[i]], 2 * e);
        auto& ry = rot[y];
        ry.insert(std::find(ry.begin(), ry.end(), walk[j]), 2 * e + 1);
        if (--chords == 0) break;
    }
    ClusteredGraph g;
    for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v), labels[v]);
    for (auto [a, b] : edges) g.add_edge(a, b);
    ClusteredGraph cg = g;
    int outer = edges.empty() ? -1 : pick(2 * static_cast<int>(edges.size()));
    // the graph's own dart lists may differ in order; rotations refer to dart ids only
    return EmbeddedGraph(cg, rot, outer);
}

namespace {

struct IPoint {
    long long x, y;
};

long long cross3(const IPoint& o, const IPoint& a, const IPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_closed_segment(const IPoint& p, const IPoint& a, const IPoint& b) {
    return cross3(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Closed segments meet.
bool segments_meet(const IPoint& a, const IPoint& b, const IPoint& c, const IPoint& d) {
    auto sgn = [](long long v) { return (v > 0) - (v < 0); };
    int d1 = sgn(cross3(a, b, c)), d2 = sgn(cross3(a, b, d)), d3 = sgn(cross3(c, d, a)), d4 = sgn(cross3(c, d, b));
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    return on_closed_segment(c, a, b) || on_closed_segment(d, a, b) || on_closed_segment(a, c, d) ||
           on_closed_segment(b, c, d);
}

// Clockwise order of directions: decreasing angle, starting just below the positive x axis.
bool cw_before(const IPoint& u, const IPoint& v) {
    auto half = [](const IPoint& p) { return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu > hv;
    return u.x * v.y - u.y * v.x < 0;
}

}  // namespace

EmbeddedGraph random_strip_planar_embedding(Rng& rng, int n, int k, int max_edges, int max_span) {
    const long long M = 1 << 16;
    std::vector<int> label(n);
    std::vector<IPoint> pt(n);
    std::set<long long> used_x;
    for (int i = 0; i < n; ++i) {
        label[i] = std::uniform_int_distribution<int>(1, k)(rng);
        long long off;
        do off = std::uniform_int_distribution<long long>(1, M - 1)(rng);
        while (used_x.count(label[i] * M + off));
        used_x.insert(label[i] * M + off);
        pt[i] = {label[i] * M + off, std::uniform_int_distribution<long long>(0, M)(rng)};
    }
    std::vector<std::pair<int, int>> cand;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (std::abs(label[a] - label[b]) <= max_span) cand.push_back({a, b});
    // short segments first, shuffled within similar lengths, so the drawing stays connected
    std::shuffle(cand.begin(), cand.end(), rng);
    auto len = [&](const std::pair<int, int>& c) {
        long long dx = pt[c.first].x - pt[c.second].x, dy = pt[c.first].y - pt[c.second].y;
        return static_cast<double>(dx) * dx + static_cast<double>(dy) * dy;
    };
    std::stable_sort(cand.begin(), cand.end(), [&](const auto& a, const auto& b) {
        return static_cast<long long>(std::log2(1 + len(a))) < static_cast<long long>(std::log2(1 + len(b)));
    });
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : cand) {
        if (static_cast<int>(edges.size()) >= max_edges) break;
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (x != a && x != b && on_closed_segment(pt[x], pt[a], pt[b])) ok = false;
        for (auto [c, d] : edges) {
            if (!ok) break;
            bool share = c == a || c == b || d == a || d == b;
            if (share) continue;  // collinear overlaps are excluded by the vertex test
            if (segments_meet(pt[a], pt[b], pt[c], pt[d])) ok = false;
        }
        if (ok) edges.push_back({a, b});
    }
    // largest connected piece
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [a, b] : edges) parent[find(a)] = find(b);
    std::map<int, int> size;
    for (int i = 0; i < n; ++i) ++size[find(i)];
    int root = std::max_element(size.begin(), size.end(), [](auto& a, auto& b) { return a.second < b.second; })->first;
    std::vector<int> id(n, -1);
    ClusteredGraph g;
    std::vector<int> back;
    for (int i = 0; i < n; ++i)
        if (find(i) == root) {
            id[i] = g.add_vertex("v" + std::to_string(g.num_vertices()), label[i]);
            back.push_back(i);
        }
    for (auto [a, b] : edges)
        if (id[a] >= 0) g.add_edge(id[a], id[b]);
    int nv = g.num_vertices();
    std::vector<std::vector<int>> rot(nv);
    auto dir = [&](int d) {
        const IPoint &p = pt[back[g.tail(d)]], &q = pt[back[g.head(d)]];
        return IPoint{q.x - p.x, q.y - p.y};
    };
    for (int v = 0; v < nv; ++v) {
        rot[v] = g.darts_at(v);
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) { return cw_before(dir(a), dir(b)); });
    }
    int outer = -1;
    if (g.num_edges() > 0) {
        int left = 0;
        for (int v = 1; v < nv; ++v)
            if (pt[back[v]].x < pt[back[left]].x) left = v;
        // every dart at the leftmost vertex points right; west follows the lowest one clockwise
        const auto& r = rot[left];
        int lowest = *std::min_element(r.begin(), r.end(), [&](int a, int b) {
            IPoint u = dir(a), w = dir(b);
            return u.x * w.y - u.y * w.x > 0;  // a is clockwise of b
        });
        outer = dart_rev(lowest);
    }
    return EmbeddedGraph(g, rot, outer);
}

}  // namespace sp
