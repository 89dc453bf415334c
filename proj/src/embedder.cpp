#include "sp/embedder.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sp {

// ================================================================ geometry

std::vector<Point> StripDrawing::polyline(int e) const {
    std::vector<Point> p{position[graph.edge(e).u]};
    p.insert(p.end(), bends[e].begin(), bends[e].end());
    p.push_back(position[graph.edge(e).v]);
    return p;
}

namespace {

int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool between(const Rational& a, const Rational& b, const Rational& x) { return std::min(a, b) <= x && x <= std::max(a, b); }

bool on_segment(const Point& p, const Point& a, const Point& b) {
    return cross(a, b, p) == 0 && between(a.x, b.x, p.x) && between(a.y, b.y, p.y);
}

enum class Meet { None, Point, Overlap };

// Intersection of closed segments ab and cd.
Meet intersect(const Point& a, const Point& b, const Point& c, const Point& d, Point& at) {
    if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
        std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y))
        return Meet::None;
    int d1 = sgn(cross(a, b, c)), d2 = sgn(cross(a, b, d)), d3 = sgn(cross(c, d, a)), d4 = sgn(cross(c, d, b));
    if (d1 == 0 && d2 == 0) {
        // collinear: collect shared points
        std::vector<Point> pts;
        for (const Point* p : {&a, &b})
            if (on_segment(*p, c, d)) pts.push_back(*p);
        for (const Point* p : {&c, &d})
            if (on_segment(*p, a, b)) pts.push_back(*p);
        if (pts.empty()) return Meet::None;
        for (const auto& p : pts)
            if (!(p == pts[0])) return Meet::Overlap;
        at = pts[0];
        return Meet::Point;
    }
    if (d1 * d2 > 0 || d3 * d4 > 0) return Meet::None;
    if (d1 == 0) at = c;
    else if (d2 == 0) at = d;
    else if (d3 == 0) at = a;
    else if (d4 == 0) at = b;
    else {
        Rational t = cross(c, d, a) / (cross(c, d, a) - cross(c, d, b));
        at = Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    }
    return Meet::Point;
}

// Counterclockwise angular order of direction vectors starting at the positive x axis.
bool ccw_less(const Point& u, const Point& v) {
    auto half = [](const Point& p) { return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return u.x * v.y - u.y * v.x > 0;
}

Point dir(const Point& from, const Point& to) { return Point{to.x - from.x, to.y - from.y}; }

// Direction of the first segment of dart d leaving its tail.
Point dart_direction(const StripDrawing& dr, int d) {
    auto p = dr.polyline(dart_edge(d));
    if (d & 1) return dir(p[p.size() - 1], p[p.size() - 2]);
    return dir(p[0], p[1]);
}

// Darts at v sorted clockwise, starting anywhere.
std::vector<int> drawn_rotation(const StripDrawing& dr, int v) {
    std::vector<int> ds = dr.graph.darts_at(v);
    std::vector<Point> dirs;
    std::sort(ds.begin(), ds.end(), [&](int a, int b) { return ccw_less(dart_direction(dr, b), dart_direction(dr, a)); });
    return ds;
}

}  // namespace

std::string Violation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case ViolationKind::None: os << "ok"; break;
        case ViolationKind::Crossing: os << "edges " << a << " and " << b << " cross"; break;
        case ViolationKind::VertexOnEdge: os << "vertex " << a << " lies on edge " << b; break;
        case ViolationKind::DoubleBoundaryHit: os << "edge " << a << " meets line x=" << line << " more than once"; break;
        case ViolationKind::OutOfStrip: os << "vertex " << a << " lies outside its strip"; break;
        case ViolationKind::RotationMismatch: os << "rotation differs at vertex " << a; break;
        case ViolationKind::OuterFaceMismatch: os << "outer face differs"; break;
    }
    return os.str();
}

Violation verify_strip_embedding(const StripDrawing& d) {
    const ClusteredGraph& g = d.graph;
    Violation v;
    for (int x = 0; x < g.num_vertices(); ++x) {
        const Point& p = d.position[x];
        if (!(p.x > g.gamma(x) && p.x < g.gamma(x) + 1)) return Violation{ViolationKind::OutOfStrip, x, -1, 0};
        for (int y = 0; y < x; ++y)
            if (d.position[y] == p) return Violation{ViolationKind::VertexOnEdge, x, -1, 0};
    }
    std::vector<std::vector<Point>> poly(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) poly[e] = d.polyline(e);
    // boundary lines
    for (int e = 0; e < g.num_edges(); ++e) {
        std::map<long, std::vector<Point>> hits;
        const auto& p = poly[e];
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            const Point &a = p[i], &b = p[i + 1];
            Rational lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
            boost::multiprecision::cpp_int c = numerator(lo) / denominator(lo);
            long first = static_cast<long>(c);
            if (Rational(first) < lo) ++first;
            for (long k = first; Rational(k) <= hi; ++k) {
                if (a.x == b.x) return Violation{ViolationKind::DoubleBoundaryHit, e, -1, static_cast<int>(k)};
                Rational t = (Rational(k) - a.x) / (b.x - a.x);
                Point q{Rational(k), a.y + t * (b.y - a.y)};
                auto& h = hits[k];
                if (std::find(h.begin(), h.end(), q) == h.end()) h.push_back(q);
                if (h.size() > 1) return Violation{ViolationKind::DoubleBoundaryHit, e, -1, static_cast<int>(k)};
            }
        }
    }
    // vertices on foreign edges
    for (int e = 0; e < g.num_edges(); ++e)
        for (int x = 0; x < g.num_vertices(); ++x) {
            if (g.edge(e).u == x || g.edge(e).v == x) continue;
            const auto& p = poly[e];
            for (size_t i = 0; i + 1 < p.size(); ++i)
                if (on_segment(d.position[x], p[i], p[i + 1])) return Violation{ViolationKind::VertexOnEdge, x, e, 0};
        }
    // pairwise crossings
    for (int e = 0; e < g.num_edges(); ++e)
        for (int f = e + 1; f < g.num_edges(); ++f) {
            const auto &p = poly[e], &q = poly[f];
            std::vector<int> common;
            for (int x : {g.edge(e).u, g.edge(e).v})
                if (x == g.edge(f).u || x == g.edge(f).v) common.push_back(x);
            for (size_t i = 0; i + 1 < p.size(); ++i)
                for (size_t j = 0; j + 1 < q.size(); ++j) {
                    Point at;
                    Meet m = intersect(p[i], p[i + 1], q[j], q[j + 1], at);
                    if (m == Meet::None) continue;
                    if (m == Meet::Overlap) return Violation{ViolationKind::Crossing, e, f, 0};
                    bool ok = false;
                    for (int x : common) {
                        if (!(at == d.position[x])) continue;
                        bool pe = (i == 0 && at == p.front()) || (i + 2 == p.size() && at == p.back());
                        bool qe = (j == 0 && at == q.front()) || (j + 2 == q.size() && at == q.back());
                        ok = pe && qe;
                    }
                    if (!ok) return Violation{ViolationKind::Crossing, e, f, 0};
                }
        }
    return v;
}

Violation verify_realizes(const StripDrawing& d, const EmbeddedGraph& emb) {
    const ClusteredGraph& g = d.graph;
    if (g.num_vertices() != emb.graph().num_vertices() || g.num_edges() != emb.graph().num_edges())
        return Violation{ViolationKind::RotationMismatch, -1, -1, 0};
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> got = drawn_rotation(d, v);
        const auto& want = emb.rotation(v);
        if (got.size() != want.size()) return Violation{ViolationKind::RotationMismatch, v, -1, 0};
        if (got.empty()) continue;
        auto it = std::find(got.begin(), got.end(), want[0]);
        if (it == got.end()) return Violation{ViolationKind::RotationMismatch, v, -1, 0};
        std::rotate(got.begin(), it, got.end());
        if (got != want) return Violation{ViolationKind::RotationMismatch, v, -1, 0};
    }
    if (g.num_edges() == 0) return {};
    // the leftmost point of the drawing lies on the outer face
    FaceMap fm = trace_faces(emb);
    int best_v = 0;
    for (int v = 1; v < g.num_vertices(); ++v) {
        const Point &a = d.position[v], &b = d.position[best_v];
        if (a.x < b.x || (a.x == b.x && a.y < b.y)) best_v = v;
    }
    Point best = d.position[best_v];
    int best_e = -1, best_i = -1;
    for (int e = 0; e < g.num_edges(); ++e)
        for (size_t i = 0; i < d.bends[e].size(); ++i) {
            const Point& a = d.bends[e][i];
            if (a.x < best.x || (a.x == best.x && a.y < best.y)) {
                best = a;
                best_e = e;
                best_i = static_cast<int>(i);
            }
        }
    const Point west{Rational(-1), Rational(0)};
    int face = -1;
    if (best_e < 0) {
        if (g.degree(best_v) == 0) return {};
        std::vector<int> rot = drawn_rotation(d, best_v);  // clockwise
        // predecessor of west in clockwise order = last dart whose direction comes after west counterclockwise
        int pred = -1;
        int L = static_cast<int>(rot.size());
        for (int i = 0; i < L; ++i) {
            Point a = dart_direction(d, rot[i]), b = dart_direction(d, rot[(i + 1) % L]);
            // clockwise sector from a to b contains west iff counterclockwise sector from b to a does
            auto ang_lt = [&](const Point& x, const Point& y) { return ccw_less(x, y); };
            bool inside;
            if (L == 1) inside = true;
            else if (ang_lt(b, a)) inside = ang_lt(b, west) && ang_lt(west, a);
            else inside = ang_lt(b, west) || ang_lt(west, a);
            if (inside) {
                pred = rot[i];
                break;
            }
        }
        if (pred < 0) return Violation{ViolationKind::OuterFaceMismatch, -1, -1, 0};
        face = fm.face_of_dart[dart_rev(pred)];
    } else {
        auto p = d.polyline(best_e);
        const Point& at = p[best_i + 1];
        Point u = dir(at, p[best_i]), w = dir(at, p[best_i + 2]);
        // west is on the left of the traversal u -> v iff it lies in the counterclockwise sector from w to u
        bool left;
        if (ccw_less(w, u)) left = ccw_less(w, west) && ccw_less(west, u);
        else left = ccw_less(w, west) || ccw_less(west, u);
        face = fm.face_of_dart[left ? 2 * best_e : 2 * best_e + 1];
    }
    if (face != fm.face_of_dart[emb.outer_dart()]) return Violation{ViolationKind::OuterFaceMismatch, face, -1, 0};
    return {};
}

// ================================================================ planar maps under construction

namespace {

struct Plane {
    std::vector<int> gamma;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rot;
    int outer = -1;

    int nv() const { return static_cast<int>(gamma.size()); }
    int ne() const { return static_cast<int>(edges.size()); }
    int add_vertex(int g) {
        gamma.push_back(g);
        rot.emplace_back();
        return nv() - 1;
    }
    int add_edge(int u, int v) {
        edges.push_back({u, v});
        return ne() - 1;
    }
    int tail(int d) const { return (d & 1) ? edges[d >> 1].v : edges[d >> 1].u; }
    int head(int d) const { return tail(d ^ 1); }
    void insert_after(int v, int after, int dart) {
        auto& r = rot[v];
        if (after < 0) {
            r.push_back(dart);
            return;
        }
        auto it = std::find(r.begin(), r.end(), after);
        if (it == r.end()) throw Error(ErrorKind::InternalContradiction, "corner dart missing");
        r.insert(it + 1, dart);
    }
    std::vector<int> positions() const {
        std::vector<int> pos(2 * ne(), -1);
        for (const auto& r : rot)
            for (int i = 0; i < static_cast<int>(r.size()); ++i) pos[r[i]] = i;
        return pos;
    }
    int face_next(const std::vector<int>& pos, int d) const {
        const auto& r = rot[head(d)];
        return r[(pos[d ^ 1] + 1) % r.size()];
    }
    struct Faces {
        std::vector<std::vector<int>> walks;
        std::vector<int> face_of;
    };
    Faces faces() const {
        Faces f;
        auto pos = positions();
        f.face_of.assign(2 * ne(), -1);
        for (int d0 = 0; d0 < 2 * ne(); ++d0) {
            if (f.face_of[d0] >= 0) continue;
            int id = static_cast<int>(f.walks.size());
            f.walks.emplace_back();
            int d = d0;
            do {
                f.face_of[d] = id;
                f.walks.back().push_back(d);
                d = face_next(pos, d);
            } while (d != d0);
        }
        return f;
    }
};

EmbeddedGraph to_embedded(const Plane& p, const std::vector<std::string>& names) {
    ClusteredGraph g;
    for (int v = 0; v < p.nv(); ++v) g.add_vertex(names[v], p.gamma[v]);
    for (const auto& e : p.edges) g.add_edge(e.u, e.v);
    // rotation lists are taken as given; darts_at order differs but EmbeddedGraph only checks membership
    return EmbeddedGraph(g, p.rot, p.ne() > 0 ? p.outer : -1);
}

Plane from_embedded(const EmbeddedGraph& emb) {
    Plane p;
    const ClusteredGraph& g = emb.graph();
    for (int v = 0; v < g.num_vertices(); ++v) p.add_vertex(g.gamma(v));
    for (const auto& e : g.edges()) p.add_edge(e.u, e.v);
    p.rot = emb.rotations();
    p.outer = emb.outer_dart();
    return p;
}

// Corner of a facial walk at position i: the dart after which a new dart is inserted at the
// walk's vertex so that it becomes the next dart of the walk.
int corner_anchor(const std::vector<int>& walk, int i) {
    int n = static_cast<int>(walk.size());
    return dart_rev(walk[(i - 1 + n) % n]);
}

// Sequence of extremes of a closed walk: (walk position, is_max), with plateaus compressed.
std::vector<std::pair<int, bool>> walk_extremes(const Plane& p, const std::vector<int>& walk) {
    int n = static_cast<int>(walk.size());
    std::vector<int> idx;  // first position of each plateau
    std::vector<int> lv;
    for (int i = 0; i < n; ++i) {
        int x = p.tail(walk[i]);
        if (!lv.empty() && lv.back() == p.gamma[x]) continue;
        idx.push_back(i);
        lv.push_back(p.gamma[x]);
    }
    if (lv.size() > 1 && lv.front() == lv.back()) {
        idx.pop_back();
        lv.pop_back();
    }
    std::vector<std::pair<int, bool>> out;
    int m = static_cast<int>(lv.size());
    if (m < 2) return out;
    for (int i = 0; i < m; ++i) {
        int a = lv[(i - 1 + m) % m], b = lv[i], c = lv[(i + 1) % m];
        if (b < a && b < c) out.push_back({idx[i], false});
        if (b > a && b > c) out.push_back({idx[i], true});
    }
    return out;
}

}  // namespace

// ================================================================ normalization

NormalizedInstance normalize(const EmbeddedGraph& emb) {
    NormalizedInstance out;
    out.input = emb;
    const ClusteredGraph& g = emb.graph();
    int n = g.num_vertices();
    if (!g.is_connected()) throw Error(ErrorKind::NotConnected, "embedding of a disconnected graph");
    if (g.num_edges() > 0 && emb.euler_characteristic() != 2)
        throw Error(ErrorKind::InvalidInput, "rotation system is not planar");

    // ---- intra-cluster components
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto intra = [&](int e) { return g.gamma(g.edge(e).u) == g.gamma(g.edge(e).v); };
    for (int e = 0; e < g.num_edges(); ++e)
        if (intra(e)) parent[find(g.edge(e).u)] = find(g.edge(e).v);
    out.component_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (out.component_of[r] < 0) {
            out.component_of[r] = static_cast<int>(out.components.size());
            out.components.emplace_back();
        }
        out.component_of[v] = out.component_of[r];
        out.components[out.component_of[v]].push_back(v);
    }
    int C = static_cast<int>(out.components.size());

    FaceMap gf = trace_faces(emb);
    const std::vector<int>* outer_walk = g.num_edges() > 0 ? &gf.faces[gf.face_of_dart[emb.outer_dart()]].darts : nullptr;

    // rotation of each contracted vertex, as input darts
    std::vector<std::vector<int>> crot(C);
    for (int c = 0; c < C; ++c) {
        const auto& vs = out.components[c];
        if (vs.size() == 1) {
            crot[c] = emb.rotation(vs[0]);
            continue;
        }
        // faces of the component alone
        std::map<int, std::vector<int>> irot;  // vertex -> intra darts clockwise
        for (int v : vs)
            for (int d : emb.rotation(v))
                if (intra(dart_edge(d))) irot[v].push_back(d);
        auto inext = [&](int d) {  // next intra dart clockwise after intra dart d at its tail
            const auto& r = irot[g.tail(d)];
            auto it = std::find(r.begin(), r.end(), d);
            ++it;
            return it == r.end() ? r.front() : *it;
        };
        std::map<int, int> hface;  // intra dart -> face id in the component
        std::vector<std::vector<int>> hwalks;
        for (int v : vs)
            for (int d0 : irot[v]) {
                if (hface.count(d0)) continue;
                int id = static_cast<int>(hwalks.size());
                hwalks.emplace_back();
                int d = d0;
                do {
                    hface[d] = id;
                    hwalks.back().push_back(d);
                    d = inext(dart_rev(d));
                } while (d != d0);
            }
        // face of the corner just clockwise after dart x at vertex v
        auto corner_face = [&](int v, int x) {
            const auto& r = emb.rotation(v);
            int i = emb.position(x);
            int L = static_cast<int>(r.size());
            for (int k = 0; k < L; ++k) {
                int d = r[(i - k + L) % L];
                if (intra(dart_edge(d))) return hface[dart_rev(d)];
            }
            return -1;
        };
        int fext = -1;
        bool split = false;
        for (int v : vs)
            for (int d : emb.rotation(v)) {
                if (intra(dart_edge(d))) continue;
                int f = corner_face(v, d);
                if (fext < 0) fext = f;
                else if (f != fext) split = true;
            }
        if (split) {
            out.valid = false;
            out.invalid_reason = "an intra-cluster cycle separates edges leaving cluster " + std::to_string(g.gamma(vs[0]));
        }
        if (fext >= 0 && outer_walk) {
            for (int d : *outer_walk) {
                int v = g.head(d);
                if (out.component_of[v] != c) continue;
                int f = corner_face(v, dart_rev(d));
                if (f != fext) {
                    out.valid = false;
                    out.invalid_reason = "the outer face lies inside an intra-cluster cycle";
                }
                break;
            }
        }
        if (fext < 0) continue;
        for (int d_in : hwalks[fext]) {
            int v = g.head(d_in);
            const auto& r = emb.rotation(v);
            int L = static_cast<int>(r.size());
            int i = emb.position(dart_rev(d_in));
            for (int k = 1; k < L; ++k) {
                int d = r[(i + k) % L];
                if (intra(dart_edge(d))) break;
                crot[c].push_back(d);
            }
        }
    }

    // ---- contracted plane map
    Plane p;
    std::vector<std::string> names;
    std::set<std::string> taken;
    for (int v = 0; v < n; ++v) taken.insert(g.name(v));
    auto fresh = [&](std::string nm) {
        while (!taken.insert(nm).second) nm += "'";
        return nm;
    };
    for (int c = 0; c < C; ++c) {
        p.add_vertex(g.gamma(out.components[c][0]));
        std::string nm = g.name(out.components[c][0]);
        if (out.components[c].size() > 1) nm = fresh(nm + "+" + std::to_string(out.components[c].size() - 1));
        names.push_back(nm);
    }
    std::vector<int> cedge(g.num_edges(), -1);
    out.pieces.assign(g.num_edges(), {});
    for (int e = 0; e < g.num_edges(); ++e) {
        if (intra(e)) continue;
        cedge[e] = p.add_edge(out.component_of[g.edge(e).u], out.component_of[g.edge(e).v]);
        out.edge_origin.push_back(e);
        out.pieces[e] = {cedge[e]};
    }
    out.origin_dart.assign(2 * p.ne(), -1);
    for (int e = 0; e < g.num_edges(); ++e)
        if (cedge[e] >= 0)
            for (int s = 0; s < 2; ++s) out.origin_dart[2 * cedge[e] + s] = 2 * e + s;
    for (int c = 0; c < C; ++c)
        for (int d : crot[c]) p.rot[c].push_back(2 * cedge[dart_edge(d)] + (d & 1));
    out.vertex_component.resize(C);
    std::iota(out.vertex_component.begin(), out.vertex_component.end(), 0);
    if (p.ne() > 0) {
        for (int d : *outer_walk)
            if (cedge[dart_edge(d)] >= 0) {
                p.outer = 2 * cedge[dart_edge(d)] + (d & 1);
                break;
            }
        if (p.outer < 0) {
            out.valid = false;
            out.invalid_reason = "the outer face lies inside an intra-cluster cycle";
            p.outer = 0;
        }
    }
    if (!out.valid) {
        out.embedding = emb;
        return out;
    }

    auto add_vertex = [&](int gamma, const std::string& nm) {
        int v = p.add_vertex(gamma);
        names.push_back(fresh(nm));
        out.vertex_component.push_back(-1);
        return v;
    };
    auto add_edge = [&](int u, int v, int origin) {
        int e = p.add_edge(u, v);
        out.edge_origin.push_back(origin);
        out.origin_dart.push_back(-1);
        out.origin_dart.push_back(-1);
        return e;
    };

    // ---- subdivide edges spanning several clusters
    int E0 = p.ne();
    for (int ce = 0; ce < E0; ++ce) {
        int u = p.edges[ce].u, v = p.edges[ce].v;
        int gu = p.gamma[u], gv = p.gamma[v];
        int steps = std::abs(gv - gu);
        if (steps <= 1) continue;
        int ie = out.edge_origin[ce];
        int dirn = gv > gu ? 1 : -1;
        std::vector<int> zs;
        for (int i = 1; i < steps; ++i) {
            zs.push_back(add_vertex(gu + dirn * i, "sub" + std::to_string(ie) + "#" + std::to_string(i)));
            ++out.subdivision_vertices;
        }
        // ce keeps the end at u; the last piece takes over the end at v
        p.edges[ce].v = zs[0];
        std::vector<int> chain{ce};
        for (size_t i = 0; i + 1 < zs.size(); ++i) chain.push_back(add_edge(zs[i], zs[i + 1], ie));
        int last = add_edge(zs.back(), v, ie);
        chain.push_back(last);
        std::replace(p.rot[v].begin(), p.rot[v].end(), 2 * ce + 1, 2 * last + 1);
        out.origin_dart[2 * last + 1] = out.origin_dart[2 * ce + 1];
        out.origin_dart[2 * ce + 1] = -1;
        for (size_t i = 0; i < zs.size(); ++i) p.rot[zs[i]] = {2 * chain[i] + 1, 2 * chain[i + 1]};
        out.pieces[ie] = chain;
        if (p.outer == 2 * ce + 1) p.outer = 2 * last + 1;
    }

    // ---- split faces by monotone chords
    for (long guard = 0;; ++guard) {
        if (guard > 100000) throw Error(ErrorKind::InternalContradiction, "face splitting does not terminate");
        if (p.ne() == 0) break;
        auto fs = p.faces();
        int outer_face = fs.face_of[p.outer];
        int target = -1;
        std::vector<std::pair<int, bool>> ex;
        for (int f = 0; f < static_cast<int>(fs.walks.size()); ++f) {
            ex = walk_extremes(p, fs.walks[f]);
            int k = static_cast<int>(ex.size());
            if (k <= 2) continue;
            if (k == 4 && f != outer_face) {
                const auto& w = fs.walks[f];
                int a = p.gamma[p.tail(w[ex[0].first])], b = p.gamma[p.tail(w[ex[1].first])];
                int c2 = p.gamma[p.tail(w[ex[2].first])], d2 = p.gamma[p.tail(w[ex[3].first])];
                if (a == c2 && b == d2) continue;
            }
            target = f;
            break;
        }
        if (target < 0) break;
        const auto& w = fs.walks[target];
        int L = static_cast<int>(w.size());
        int k = static_cast<int>(ex.size());
        auto lvl = [&](int pos) { return p.gamma[p.tail(w[((pos % L) + L) % L])]; };
        int best = -1, amp = 1 << 30;
        for (int j = 0; j < k; ++j) {
            int a = std::abs(lvl(ex[j].first) - lvl(ex[(j + 1) % k].first));
            if (a < amp) {
                amp = a;
                best = j;
            }
        }
        int pa = ex[best].first, pb = ex[(best + 1) % k].first;
        int pprev = ex[(best - 1 + k) % k].first, pnext = ex[(best + 2) % k].first;
        int la = lvl(pa), lb = lvl(pb);
        // p1: on the chain pprev -> pa, level lb, nearest to pa
        auto fwd = [&](int from, int to) { return ((to - from) % L + L) % L; };
        int p1 = -1, p2 = -1;
        for (int s = fwd(pprev, pa); s >= 0; --s) {
            int pos = (pprev + s) % L;
            if (lvl(pos) == lb) {
                p1 = pos;
                break;
            }
        }
        for (int s = 0; s <= fwd(pb, pnext); ++s) {
            int pos = (pb + s) % L;
            if (lvl(pos) == la) {
                p2 = pos;
                break;
            }
        }
        if (p1 < 0 || p2 < 0) throw Error(ErrorKind::InternalContradiction, "chord endpoints not found");
        int x1 = p.tail(w[p1]), x2 = p.tail(w[p2]);
        int anchor1 = corner_anchor(w, p1), anchor2 = corner_anchor(w, p2);
        // chord from x2 (level la) to x1 (level lb) through intermediate levels
        int dirn = lb > la ? 1 : -1;
        std::vector<int> vs{x2};
        for (int lv = la + dirn; lv != lb; lv += dirn)
            vs.push_back(add_vertex(lv, "chord" + std::to_string(out.chord_paths) + "#" + std::to_string(lv)));
        vs.push_back(x1);
        std::vector<int> ce;
        for (size_t i = 0; i + 1 < vs.size(); ++i) ce.push_back(add_edge(vs[i], vs[i + 1], -1));
        for (size_t i = 1; i + 1 < vs.size(); ++i) p.rot[vs[i]] = {2 * ce[i - 1] + 1, 2 * ce[i]};
        p.insert_after(x2, anchor2, 2 * ce.front());
        p.insert_after(x1, anchor1, 2 * ce.back() + 1);
        if (target == outer_face) p.outer = 2 * ce.back() + 1;
        ++out.chord_paths;
    }
    out.embedding = to_embedded(p, names);
    return out;
}

// ================================================================ faces and extremes

int find_alternating_vertex(const EmbeddedGraph& emb) {
    const ClusteredGraph& g = emb.graph();
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> s;
        for (int d : emb.rotation(v)) {
            int gh = g.gamma(g.head(d));
            if (gh != g.gamma(v)) s.push_back(gh > g.gamma(v) ? 1 : 0);
        }
        int changes = 0;
        for (size_t i = 0; i < s.size(); ++i) changes += s[i] != s[(i + 1) % s.size()];
        if (changes > 2) return v;
    }
    return -1;
}

std::vector<FaceInfo> classify_faces(const EmbeddedGraph& emb) {
    int alt = find_alternating_vertex(emb);
    if (alt >= 0) throw Error(ErrorKind::NotCandidateEmbedding, emb.graph().name(alt));
    std::vector<FaceInfo> out;
    if (emb.graph().num_edges() == 0) return out;
    Plane p = from_embedded(emb);
    auto fs = p.faces();
    int outer = fs.face_of[emb.outer_dart()];
    for (int f = 0; f < static_cast<int>(fs.walks.size()); ++f) {
        FaceInfo fi;
        fi.face = f;
        fi.outer = f == outer;
        fi.length = static_cast<int>(fs.walks[f].size());
        for (auto [pos, is_max] : walk_extremes(p, fs.walks[f]))
            (is_max ? fi.maxima : fi.minima).push_back(p.tail(fs.walks[f][pos]));
        auto same = [&](const std::vector<int>& vs) { return p.gamma[vs[0]] == p.gamma[vs[1]]; };
        if (fi.minima.size() == 1 && fi.maxima.size() == 1) fi.kind = FaceKind::Simple;
        else if (fi.minima.size() == 2 && fi.maxima.size() == 2 && same(fi.minima) && same(fi.maxima))
            fi.kind = FaceKind::SemiSimple;
        out.push_back(fi);
    }
    return out;
}

namespace {

// Hopcroft-Karp on a bipartite graph given by left adjacency lists; returns match of left vertices.
std::vector<int> max_matching(int nl, int nr, const std::vector<std::vector<int>>& adj, std::vector<int>& match_r) {
    std::vector<int> match_l(nl, -1), dist(nl);
    match_r.assign(nr, -1);
    auto bfs = [&]() {
        std::deque<int> q;
        bool found = false;
        for (int u = 0; u < nl; ++u) {
            dist[u] = match_l[u] < 0 ? 0 : -1;
            if (dist[u] == 0) q.push_back(u);
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int r : adj[u]) {
                int w = match_r[r];
                if (w < 0) found = true;
                else if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
            }
        }
        return found;
    };
    std::function<bool(int)> dfs = [&](int u) {
        for (int r : adj[u]) {
            int w = match_r[r];
            if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = r;
                match_r[r] = u;
                return true;
            }
        }
        dist[u] = -1;
        return false;
    };
    while (bfs())
        for (int u = 0; u < nl; ++u)
            if (match_l[u] < 0) dfs(u);
    return match_l;
}

}  // namespace

ExtremeAssignment assign_extremes(const EmbeddedGraph& emb, const std::vector<FaceInfo>& faces) {
    const ClusteredGraph& g = emb.graph();
    ExtremeAssignment a;
    if (g.num_edges() == 0) {
        a.saturated = true;
        return a;
    }
    FaceMap fm = trace_faces(emb);
    std::vector<int> extremes;
    std::vector<char> is_source(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v) {
        bool up = true, down = true;
        for (int d : emb.rotation(v)) {
            int gh = g.gamma(g.head(d));
            if (gh <= g.gamma(v)) up = false;
            if (gh >= g.gamma(v)) down = false;
        }
        if (g.degree(v) > 0 && (up || down)) {
            extremes.push_back(v);
            is_source[v] = up;
        }
    }
    // right side: one slot per internal semi-simple face, then outer source and outer sink slots
    std::vector<int> slot_face;
    std::vector<int> slot_of_face(faces.size(), -1);
    int outer = -1;
    for (const auto& f : faces) {
        if (f.outer) outer = f.face;
        else if (f.kind == FaceKind::SemiSimple) {
            slot_of_face[f.face] = static_cast<int>(slot_face.size());
            slot_face.push_back(f.face);
        }
    }
    int s_src = static_cast<int>(slot_face.size()), s_snk = s_src + 1;
    slot_face.push_back(outer);
    slot_face.push_back(outer);
    int nr = static_cast<int>(slot_face.size());
    a.demand = nr;
    a.num_extremes = static_cast<int>(extremes.size());
    std::vector<std::vector<int>> adj(extremes.size());
    for (size_t i = 0; i < extremes.size(); ++i) {
        int v = extremes[i];
        std::set<int> seen;
        for (int d : emb.rotation(v)) {
            int f = fm.face_of_dart[d];
            if (!seen.insert(f).second) continue;
            if (f == outer) {
                adj[i].push_back(is_source[v] ? s_src : s_snk);
                continue;
            }
            if (slot_of_face[f] < 0) continue;
            const auto& ext = is_source[v] ? faces[f].minima : faces[f].maxima;
            if (ext.size() == 2 && ext[0] != ext[1] && (ext[0] == v || ext[1] == v)) adj[i].push_back(slot_of_face[f]);
        }
    }
    std::vector<int> match_r;
    auto match_l = max_matching(static_cast<int>(extremes.size()), nr, adj, match_r);
    int size = 0;
    for (size_t i = 0; i < extremes.size(); ++i)
        if (match_l[i] >= 0) {
            ++size;
            a.pairs.push_back({extremes[i], slot_face[match_l[i]]});
        }
    a.saturated = size == nr && size == a.num_extremes;
    if (size < nr) {
        // faces reachable from an unmatched slot by alternating paths violate the marriage condition
        std::vector<std::vector<int>> radj(nr);
        for (size_t i = 0; i < extremes.size(); ++i)
            for (int r : adj[i]) radj[r].push_back(static_cast<int>(i));
        std::vector<char> seen(nr, 0);
        std::deque<int> q;
        for (int r = 0; r < nr; ++r)
            if (match_r[r] < 0) {
                seen[r] = 1;
                q.push_back(r);
            }
        while (!q.empty()) {
            int r = q.front();
            q.pop_front();
            for (int l : radj[r]) {
                int r2 = match_l[l];
                if (r2 >= 0 && !seen[r2]) {
                    seen[r2] = 1;
                    q.push_back(r2);
                }
            }
        }
        std::set<int> fset;
        for (int r = 0; r < nr; ++r)
            if (seen[r]) fset.insert(slot_face[r]);
        a.hall_violator.assign(fset.begin(), fset.end());
    }
    return a;
}

FancyEuler fancy_face_euler(const EmbeddedGraph& emb, const std::vector<FaceInfo>& faces) {
    FancyEuler out;
    const ClusteredGraph& g = emb.graph();
    if (g.num_edges() == 0) return out;
    FaceMap fm = trace_faces(emb);
    std::vector<char> in_sub(g.num_edges(), 0), extreme(g.num_vertices(), 0);
    std::vector<int> fancy;
    for (const auto& f : faces) {
        if (f.outer || f.kind != FaceKind::SemiSimple) continue;
        fancy.push_back(f.face);
        for (int d : fm.faces[f.face].darts) in_sub[dart_edge(d)] = 1;
        for (int v : f.minima) extreme[v] = 1;
        for (int v : f.maxima) extreme[v] = 1;
    }
    out.fancy_faces = static_cast<int>(fancy.size());
    if (fancy.empty()) return out;
    Plane p;
    for (int v = 0; v < g.num_vertices(); ++v) p.add_vertex(g.gamma(v));
    std::vector<int> sub_edge(g.num_edges(), -1), orig_edge;
    for (int e = 0; e < g.num_edges(); ++e)
        if (in_sub[e]) {
            sub_edge[e] = p.add_edge(g.edge(e).u, g.edge(e).v);
            orig_edge.push_back(e);
        }
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int d : emb.rotation(v))
            if (in_sub[dart_edge(d)]) p.rot[v].push_back(2 * sub_edge[dart_edge(d)] + (d & 1));
    std::vector<char> suppressed(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v) suppressed[v] = p.rot[v].size() == 2 && !extreme[v];
    auto fs = p.faces();
    std::vector<char> is_fancy(fs.walks.size(), 0);
    for (int f : fancy) is_fancy[fs.face_of[2 * sub_edge[dart_edge(fm.faces[f].darts[0])] + (fm.faces[f].darts[0] & 1)]] = 1;
    // pieces of the subgraph
    std::vector<int> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : p.edges) parent[find(e.u)] = find(e.v);
    std::map<int, std::pair<long, long>> side;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!p.rot[v].empty() && !suppressed[v]) side[find(v)].first += 2;
    for (int f = 0; f < static_cast<int>(fs.walks.size()); ++f) {
        long len = 0;
        for (int d : fs.walks[f]) len += !suppressed[p.tail(d)];
        auto& s = side[find(p.tail(fs.walks[f][0]))];
        if (is_fancy[f]) {
            s.second += 2;
            if (len != 4) out.quadrilaterals = false;
        } else {
            s.second += len - 2;
        }
    }
    for (auto& [root, s] : side) {
        s.second += 4;
        out.sides.push_back(s);
        if (s.first != s.second) out.holds = false;
    }
    out.pieces = static_cast<int>(side.size());
    return out;
}

// ================================================================ drawing

namespace {

// Oriented plane map with provenance, used for the final visibility drawing.
struct Oriented {
    Plane p;
    std::vector<int> input_vertex;  // -1 for helper vertices
    std::vector<int> edge_input;    // input edge carried by this edge, -1 for helpers
    std::vector<int> tail;          // per edge
};

// st-numbering of a biconnected multigraph containing edge (s, t) as edge st_edge.
std::vector<int> st_numbering(const Plane& p, int s, int t, int st_edge) {
    int n = p.nv();
    std::vector<std::vector<int>> inc(n);
    for (int e = 0; e < p.ne(); ++e) {
        inc[p.edges[e].u].push_back(e);
        if (p.edges[e].v != p.edges[e].u) inc[p.edges[e].v].push_back(e);
    }
    // put the st edge first at s
    auto& is = inc[s];
    std::iter_swap(is.begin(), std::find(is.begin(), is.end(), st_edge));
    std::vector<int> pre(n, -1), low(n), par(n, -1), par_edge(n, -1), order;
    std::vector<size_t> it(n, 0);
    std::vector<int> stack{s};
    pre[s] = 0;
    low[s] = 0;
    order.push_back(s);
    while (!stack.empty()) {
        int v = stack.back();
        if (it[v] < inc[v].size()) {
            int e = inc[v][it[v]++];
            if (e == par_edge[v]) continue;
            int w = p.edges[e].u == v ? p.edges[e].v : p.edges[e].u;
            if (pre[w] < 0) {
                pre[w] = static_cast<int>(order.size());
                low[w] = pre[w];
                par[w] = v;
                par_edge[w] = e;
                order.push_back(w);
                stack.push_back(w);
            } else {
                low[v] = std::min(low[v], pre[w]);
            }
        } else {
            stack.pop_back();
            if (par[v] >= 0) low[par[v]] = std::min(low[par[v]], low[v]);
        }
    }
    if (static_cast<int>(order.size()) != n || order[1] != t)
        throw Error(ErrorKind::InternalContradiction, "st-numbering: graph not connected through the st edge");
    // linked list insertion
    std::vector<int> nxt(n, -1), prv(n, -1), sign(n, 0);
    nxt[s] = t;
    prv[t] = s;
    sign[s] = -1;
    for (size_t i = 2; i < order.size(); ++i) {
        int v = order[i], pv = par[v];
        int lw = order[low[v]];
        if (sign[lw] < 0) {
            // before pv
            int a = prv[pv];
            nxt[v] = pv;
            prv[v] = a;
            prv[pv] = v;
            if (a >= 0) nxt[a] = v;
            sign[pv] = 1;
        } else {
            int b = nxt[pv];
            prv[v] = pv;
            nxt[v] = b;
            nxt[pv] = v;
            if (b >= 0) prv[b] = v;
            sign[pv] = -1;
        }
    }
    int head = s;
    while (prv[head] >= 0) head = prv[head];
    std::vector<int> num(n, -1);
    int k = 0;
    for (int v = head; v >= 0; v = nxt[v]) num[v] = k++;
    if (num[s] != 0 || num[t] != n - 1) throw Error(ErrorKind::InternalContradiction, "st-numbering failed");
    return num;
}

// Cuts corners until every face has at most three darts and no repeated vertex.
void triangulate(Plane& p, std::vector<int>& dummy_flag) {
    for (long guard = 0;; ++guard) {
        if (guard > 1000000) throw Error(ErrorKind::InternalContradiction, "triangulation does not terminate");
        auto fs = p.faces();
        bool changed = false;
        for (const auto& w : fs.walks) {
            int L = static_cast<int>(w.size());
            if (L <= 3) continue;
            for (int i = 0; i < L; ++i) {
                int x = p.tail(w[(i - 1 + L) % L]), y = p.head(w[i]);
                if (x == y) continue;
                // walk: x -> v -> y at positions i-1, i; cut with edge x-y
                int e = p.add_edge(x, y);
                dummy_flag.push_back(1);
                int ax = corner_anchor(w, (i - 1 + L) % L);
                int ay = corner_anchor(w, (i + 1) % L);
                p.insert_after(x, ax, 2 * e);
                p.insert_after(y, ay, 2 * e + 1);
                if (fs.face_of[p.outer] == fs.face_of[w[0]]) p.outer = 2 * e;
                changed = true;
                break;
            }
            if (changed) break;
            throw Error(ErrorKind::InternalContradiction, "no corner to cut");
        }
        if (!changed) return;
    }
}

struct DrawOut {
    std::vector<Point> pos;
    std::vector<std::vector<Point>> poly;  // per edge, from tail to head
};

// Visibility drawing of an oriented plane map that is an st-graph with the given outer dart.
DrawOut visibility_drawing(const Oriented& o) {
    const Plane& p = o.p;
    int n = p.nv(), m = p.ne();
    DrawOut out;
    out.pos.resize(n);
    out.poly.resize(m);
    // topological order
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> outs(n);
    for (int e = 0; e < m; ++e) {
        int t = o.tail[e], h = p.edges[e].u == t ? p.edges[e].v : p.edges[e].u;
        if (p.gamma[h] < p.gamma[t]) throw Error(ErrorKind::InternalContradiction, "edge oriented against the clusters");
        ++indeg[h];
        outs[t].push_back(h);
    }
    std::deque<int> q;
    int sources = 0, sinks = 0;
    for (int v = 0; v < n; ++v) {
        if (indeg[v] == 0) {
            q.push_back(v);
            ++sources;
        }
        if (outs[v].empty()) ++sinks;
    }
    if (n > 1 && (sources != 1 || sinks != 1))
        throw Error(ErrorKind::InternalContradiction,
                    "augmented graph has " + std::to_string(sources) + " sources and " + std::to_string(sinks) + " sinks");
    std::vector<int> rank(n, -1);
    int r = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        rank[v] = r++;
        for (int h : outs[v])
            if (--indeg[h] == 0) q.push_back(h);
    }
    if (r != n) throw Error(ErrorKind::InternalContradiction, "augmented graph has a directed cycle");
    Rational unit(1, n + 1);
    std::vector<Rational> x(n);
    for (int v = 0; v < n; ++v) x[v] = Rational(p.gamma[v]) + Rational(rank[v] + 1, n + 1);
    if (m == 0) {
        for (int v = 0; v < n; ++v) out.pos[v] = Point{x[v], Rational(0)};
        return out;
    }
    // dual order: faces from top (+y) to bottom
    auto fs = p.faces();
    int F = static_cast<int>(fs.walks.size());
    if (n - m + F != 2) throw Error(ErrorKind::InternalContradiction, "augmented graph is not plane");
    int outer = fs.face_of[p.outer];
    int TOP = F, BOT = F + 1;
    std::vector<int> lf(m), rf(m);
    std::vector<std::vector<int>> dadj(F + 2);
    std::vector<int> dind(F + 2, 0);
    for (int e = 0; e < m; ++e) {
        int up = o.tail[e] == p.edges[e].u ? 2 * e : 2 * e + 1;
        lf[e] = fs.face_of[up];
        rf[e] = fs.face_of[up ^ 1];
        if (lf[e] == outer) lf[e] = TOP;
        if (rf[e] == outer) rf[e] = BOT;
        dadj[lf[e]].push_back(rf[e]);
        ++dind[rf[e]];
    }
    std::vector<int> phi(F + 2, -1);
    std::deque<int> dq;
    for (int f = 0; f < F + 2; ++f)
        if (dind[f] == 0 && f != outer) dq.push_back(f);
    int k = 0;
    while (!dq.empty()) {
        int f = dq.front();
        dq.pop_front();
        phi[f] = k++;
        for (int h : dadj[f])
            if (--dind[h] == 0) dq.push_back(h);
    }
    if (k != F + 1) throw Error(ErrorKind::InternalContradiction, "dual of the augmented graph is not acyclic");
    std::vector<Rational> y(m);
    for (int e = 0; e < m; ++e) y[e] = Rational(-phi[lf[e]]);
    Rational delta = unit / 4;
    for (int v = 0; v < n; ++v) {
        Rational lo = 0, hi = 0;
        bool any = false;
        for (int d : p.rot[v]) {
            const Rational& ye = y[dart_edge(d)];
            if (!any || ye < lo) lo = ye;
            if (!any || ye > hi) hi = ye;
            any = true;
        }
        out.pos[v] = Point{x[v], (lo + hi) / 2};
    }
    for (int e = 0; e < m; ++e) {
        int t = o.tail[e], h = p.edges[e].u == t ? p.edges[e].v : p.edges[e].u;
        out.poly[e] = {out.pos[t], Point{x[t] + delta, y[e]}, Point{x[h] - delta, y[e]}, out.pos[h]};
    }
    return out;
}

}  // namespace

StripDrawing build_strip_drawing(const NormalizedInstance& n, const std::vector<FaceInfo>& faces,
                                 const ExtremeAssignment& a) {
    if (!n.valid) throw Error(ErrorKind::PreconditionViolated, "instance is not normalizable: " + n.invalid_reason);
    if (!a.saturated) throw Error(ErrorKind::PreconditionViolated, "extreme assignment is not saturated");
    const EmbeddedGraph& in = n.input;
    const ClusteredGraph& g = in.graph();
    const ClusteredGraph& ng = n.embedding.graph();
    StripDrawing sd;
    sd.graph = g;
    sd.position.resize(g.num_vertices());
    sd.bends.assign(g.num_edges(), {});
    auto intra = [&](int e) { return g.gamma(g.edge(e).u) == g.gamma(g.edge(e).v); };

    // ---- saturate the normalized graph
    Plane np = from_embedded(n.embedding);
    std::vector<int> ntail(np.ne());
    for (int e = 0; e < np.ne(); ++e) {
        int u = np.edges[e].u, v = np.edges[e].v;
        ntail[e] = np.gamma[u] <= np.gamma[v] ? u : v;
    }
    if (np.ne() > 0) {
        auto fs = np.faces();
        struct Ins {
            int tail_v, tail_anchor, head_v, head_anchor;
        };
        std::vector<Ins> ins;
        std::map<int, int> assigned;  // face -> vertex
        for (auto [v, f] : a.pairs)
            if (!faces[f].outer) assigned[f] = v;
        for (auto [f, v] : assigned) {
            const auto& w = fs.walks[f];
            auto ex = walk_extremes(np, w);
            bool src = !faces[f].minima.empty() &&
                       std::find(faces[f].minima.begin(), faces[f].minima.end(), v) != faces[f].minima.end();
            int pv = -1, po = -1;
            for (auto [pos, is_max] : ex) {
                if (is_max == src) continue;
                int x = np.tail(w[pos]);
                if (x == v && pv < 0) pv = pos;
                else po = pos;
            }
            if (pv < 0 || po < 0) throw Error(ErrorKind::InternalContradiction, "assigned extreme not on its face");
            int other = np.tail(w[po]);
            if (src) ins.push_back({other, corner_anchor(w, po), v, corner_anchor(w, pv)});
            else ins.push_back({v, corner_anchor(w, pv), other, corner_anchor(w, po)});
        }
        for (const auto& s : ins) {
            int e = np.add_edge(s.tail_v, s.head_v);
            ntail.push_back(s.tail_v);
            np.insert_after(s.tail_v, s.tail_anchor, 2 * e);
            np.insert_after(s.head_v, s.head_anchor, 2 * e + 1);
        }
    }
    int NE = np.ne();
    auto nedge_origin = [&](int e) { return e < ng.num_edges() ? n.edge_origin[e] : -1; };
    auto norigin_dart = [&](int d) { return d < 2 * ng.num_edges() ? n.origin_dart[d] : -1; };

    // ---- expand components into the final oriented map
    Oriented o;
    Plane& kp = o.p;
    auto new_vertex = [&](int gamma) {
        o.input_vertex.push_back(-1);
        return kp.add_vertex(gamma);
    };
    auto new_edge = [&](int u, int v, int tail, int input) {
        o.edge_input.push_back(input);
        o.tail.push_back(tail);
        return kp.add_edge(u, v);
    };
    for (int v = 0; v < g.num_vertices(); ++v) {
        kp.add_vertex(g.gamma(v));
        o.input_vertex.push_back(v);
    }
    std::vector<int> kvert(np.nv(), -1);  // normalized vertex -> final vertex, -1 at contracted components
    for (int v = 0; v < np.nv(); ++v) {
        int c = n.vertex_component[v];
        if (c >= 0 && n.components[c].size() == 1) kvert[v] = n.components[c][0];
        else if (c < 0) kvert[v] = new_vertex(np.gamma[v]);
    }
    // normalized edges keep their ids; an end at a contracted component becomes a port vertex
    for (int e = 0; e < NE; ++e) new_edge(-1, -1, -1, nedge_origin(e));
    auto set_endpoint = [&](int d, int kv) {
        int e = dart_edge(d);
        if (d & 1) kp.edges[e].v = kv;
        else kp.edges[e].u = kv;
    };
    for (int v = 0; v < np.nv(); ++v)
        if (kvert[v] >= 0) {
            for (int d : np.rot[v]) set_endpoint(d, kvert[v]);
            kp.rot[kvert[v]] = np.rot[v];
        }
    std::vector<int> kintra(g.num_edges(), -1);
    for (int e = 0; e < g.num_edges(); ++e)
        if (intra(e)) kintra[e] = new_edge(g.edge(e).u, g.edge(e).v, -1, e);
    auto out_of = [&](int d) { return ntail[dart_edge(d)] == np.tail(d); };
    std::vector<int> port_piece(2 * NE, -1);  // normalized dart at a component -> edge from its input vertex

    for (int c = 0; NE > 0 && c < static_cast<int>(n.components.size()); ++c) {
        const auto& vs = n.components[c];
        if (vs.size() == 1) continue;
        const auto& wrot = np.rot[c];  // component vertices come first in the normalized graph
        int L = static_cast<int>(wrot.size());
        int gw = g.gamma(vs[0]);
        // each normalized dart attaches at the input vertex of its own origin dart or of the
        // closest origin dart before it in clockwise order
        std::vector<int> att(L, -1);
        std::map<int, std::vector<int>> extra_after;  // input dart -> normalized darts following it
        {
            int start = -1;
            for (int i = 0; i < L; ++i)
                if (norigin_dart(wrot[i]) >= 0) start = i;
            if (start < 0) throw Error(ErrorKind::InternalContradiction, "component without input darts");
            int cur = -1;
            for (int k = 0; k < L; ++k) {
                int i = (start + k) % L;
                int od = norigin_dart(wrot[i]);
                if (od >= 0) cur = od;
                else extra_after[cur].push_back(wrot[i]);
                att[i] = g.tail(cur);
            }
        }
        // port vertices and the pieces joining them to the component
        std::vector<int> zport(L);
        std::map<int, int> index_of;  // normalized dart -> port index
        for (int i = 0; i < L; ++i) {
            int d = wrot[i];
            index_of[d] = i;
            zport[i] = new_vertex(gw);
            set_endpoint(d, zport[i]);
            int pe = out_of(d) ? new_edge(att[i], zport[i], att[i], -1) : new_edge(zport[i], att[i], zport[i], -1);
            port_piece[d] = pe;
            // the piece's dart at the port vertex, then the normalized dart toward the far end
            int toward_blob = out_of(d) ? 2 * pe + 1 : 2 * pe;
            kp.rot[zport[i]] = {toward_blob, d};
        }
        auto piece_at_att = [&](int d) { return out_of(d) ? 2 * port_piece[d] : 2 * port_piece[d] + 1; };

        // H'': component vertices, then s' and t'
        Plane h;
        std::map<int, int> local;
        for (int x : vs) local[x] = h.add_vertex(gw);
        int sp = h.add_vertex(gw), tp = h.add_vertex(gw);
        std::vector<int> hkind;  // per H'' edge: >= 0 input intra edge, -1 port, -2 helper, -3 st edge
        std::vector<int> hport;  // per H'' edge: normalized dart of the port, or -1
        std::map<int, int> hedge_of_intra;
        for (int x : vs)
            for (int d : in.rotation(x))
                if (intra(dart_edge(d)) && (d & 1) == 0) {
                    hedge_of_intra[dart_edge(d)] = h.add_edge(local[g.edge(dart_edge(d)).u], local[g.edge(dart_edge(d)).v]);
                    hkind.push_back(dart_edge(d));
                    hport.push_back(-1);
                }
        std::map<int, int> hport_edge;  // normalized dart -> H'' edge
        for (int i = 0; i < L; ++i) {
            int d = wrot[i];
            hport_edge[d] = out_of(d) ? h.add_edge(local[att[i]], tp) : h.add_edge(sp, local[att[i]]);
            hkind.push_back(-1);
            hport.push_back(d);
        }
        auto hdart_at = [&](int e, int hv) { return h.edges[e].u == hv ? 2 * e : 2 * e + 1; };
        std::map<int, int> ndart_of_input;
        for (int i = 0; i < L; ++i)
            if (norigin_dart(wrot[i]) >= 0) ndart_of_input[norigin_dart(wrot[i])] = wrot[i];
        for (int x : vs) {
            auto& r = h.rot[local[x]];
            for (int d : in.rotation(x)) {
                if (intra(dart_edge(d))) {
                    r.push_back(hdart_at(hedge_of_intra[dart_edge(d)], local[x]));
                    continue;
                }
                r.push_back(hdart_at(hport_edge[ndart_of_input.at(d)], local[x]));
                for (int nd : extra_after[d]) r.push_back(hdart_at(hport_edge[nd], local[x]));
            }
        }
        // s' and t' take the in- and out-blocks in reverse order, the st edge closes the gap
        bool any_in = false, any_out = false;
        for (int i = 0; i < L; ++i) (out_of(wrot[i]) ? any_out : any_in) = true;
        int first = 0;
        for (int i = 0; i < L; ++i)
            if (!out_of(wrot[i]) && out_of(wrot[(i - 1 + L) % L])) first = i;
        if (!any_in || !any_out) {
            // the free gap is the corner of the component on the outer face of the normalized graph
            auto fs = np.faces();
            int of = fs.face_of[np.outer];
            for (int i = 0; i < L; ++i)
                if (fs.face_of[dart_rev(wrot[i])] == of) first = (i + 1) % L;
        }
        std::vector<int> ins, outs;
        for (int k = 0; k < L; ++k) {
            int d = wrot[(first + k) % L];
            (out_of(d) ? outs : ins).push_back(d);
        }
        int st = h.add_edge(sp, tp);
        hkind.push_back(-3);
        hport.push_back(-1);
        for (auto it = ins.rbegin(); it != ins.rend(); ++it) h.rot[sp].push_back(hdart_at(hport_edge[*it], sp));
        h.rot[sp].push_back(2 * st);
        for (auto it = outs.rbegin(); it != outs.rend(); ++it) h.rot[tp].push_back(hdart_at(hport_edge[*it], tp));
        h.rot[tp].push_back(2 * st + 1);
        h.outer = 2 * st;
        std::vector<int> added;
        triangulate(h, added);
        for (size_t i = 0; i < added.size(); ++i) {
            hkind.push_back(-2);
            hport.push_back(-1);
        }
        auto num = st_numbering(h, sp, tp, st);

        // s' survives only without in-ports, t' only without out-ports; otherwise each helper dart
        // at s' or t' moves to the port vertex of a neighbouring port
        bool keep_s = !any_in, keep_t = !any_out;
        int ks = keep_s ? new_vertex(gw) : -1, kt = keep_t ? new_vertex(gw) : -1;
        auto dropped = [&](int hv) { return (hv == sp && !keep_s) || (hv == tp && !keep_t); };
        // per dropped helper dart: (port index, insert before the piece dart instead of after)
        std::map<int, std::pair<int, bool>> moved;
        for (int hv : {sp, tp}) {
            if (!dropped(hv)) continue;
            const auto& r = h.rot[hv];
            int R = static_cast<int>(r.size());
            auto at = [&](int k) { return r[((k % R) + R) % R]; };
            auto is_port = [&](int k) { return hkind[dart_edge(at(k))] == -1; };
            for (int k = 0; k < R; ++k) {
                if (is_port(k)) continue;
                int j = k - 1;
                bool crossed = false;
                for (; !is_port(j); --j) crossed = crossed || hkind[dart_edge(at(j))] == -3;
                if (!crossed) {
                    moved[at(k)] = {index_of[hport[dart_edge(at(j))]], false};
                    continue;
                }
                for (j = k + 1; !is_port(j); ++j) {
                }
                moved[at(k)] = {index_of[hport[dart_edge(at(j))]], true};
            }
        }
        auto kv_of = [&](int hv) {
            if (hv == sp) return ks;
            if (hv == tp) return kt;
            return vs[hv];
        };
        std::vector<int> kedge(h.ne(), -1);
        std::map<int, std::vector<int>> after, before;  // port index -> final darts leaving its vertex
        for (int e = 0; e < h.ne(); ++e) {
            if (hkind[e] == -1) continue;
            int hu = h.edges[e].u, hv = h.edges[e].v;
            if (dropped(hu) && dropped(hv)) continue;
            int lo = num[hu] < num[hv] ? hu : hv;
            if (hkind[e] >= 0) {
                kedge[e] = kintra[hkind[e]];
                o.tail[kedge[e]] = kv_of(lo);
                continue;
            }
            int ku = dropped(hu) ? zport[moved.at(2 * e).first] : kv_of(hu);
            int kv = dropped(hv) ? zport[moved.at(2 * e + 1).first] : kv_of(hv);
            int klo = lo == hu ? ku : kv;
            kedge[e] = new_edge(ku, kv, klo, -1);
        }
        for (int hv : {sp, tp}) {
            if (!dropped(hv)) continue;
            const auto& r = h.rot[hv];
            int R = static_cast<int>(r.size());
            int k0 = static_cast<int>(std::find(r.begin(), r.end(), hdart_at(st, hv)) - r.begin());
            for (int k = 1; k <= R; ++k) {
                int hd = r[(k0 + k) % R];
                if (hkind[dart_edge(hd)] == -1 || kedge[dart_edge(hd)] < 0) continue;
                auto [idx, bef] = moved.at(hd);
                (bef ? before : after)[idx].push_back(2 * kedge[dart_edge(hd)] + (hd & 1));
            }
        }
        // rotations at component vertices and kept helpers
        for (int hv = 0; hv < h.nv(); ++hv) {
            if (dropped(hv)) continue;
            auto& r = kp.rot[kv_of(hv)];
            r.clear();
            for (int hd : h.rot[hv]) {
                int e = dart_edge(hd);
                if (hkind[e] == -1) r.push_back(piece_at_att(hport[e]));
                else if (kedge[e] >= 0) r.push_back(2 * kedge[e] + (hd & 1));
            }
        }
        for (int i = 0; i < L; ++i) {
            auto& r = kp.rot[zport[i]];
            std::vector<int> nr(before[i]);
            nr.push_back(r[0]);
            nr.insert(nr.end(), after[i].begin(), after[i].end());
            nr.push_back(r[1]);
            r = nr;
        }
    }
    for (int e = 0; e < NE; ++e) o.tail[e] = np.edges[e].u == ntail[e] ? kp.edges[e].u : kp.edges[e].v;

    // outer face of the final map: it must hold the unique source and sink; among such faces
    // prefer the one sharing most darts with the outer walk of the normalized graph
    if (NE > 0) {
        std::vector<int> indeg(kp.nv(), 0), outdeg(kp.nv(), 0);
        for (int e = 0; e < kp.ne(); ++e) {
            int t = o.tail[e];
            ++outdeg[t];
            ++indeg[t == kp.edges[e].u ? kp.edges[e].v : kp.edges[e].u];
        }
        auto kf = kp.faces();
        auto nf = np.faces();
        std::vector<int> score(kf.walks.size(), 0);
        for (int d : nf.walks[nf.face_of[np.outer]]) ++score[kf.face_of[d]];
        int best = -1;
        for (int f = 0; f < static_cast<int>(kf.walks.size()); ++f) {
            bool has_s = false, has_t = false;
            for (int d : kf.walks[f]) {
                int x = kp.tail(d);
                has_s = has_s || indeg[x] == 0;
                has_t = has_t || outdeg[x] == 0;
            }
            if (has_s && has_t && (best < 0 || score[f] > score[best])) best = f;
        }
        if (best < 0) throw Error(ErrorKind::InternalContradiction, "no face holds both the source and the sink");
        kp.outer = kf.walks[best][0];
    }

    // ---- a single intra-cluster component: orient through an st-numbering of its triangulation
    if (NE == 0 && g.num_edges() > 0) {
        Plane h = from_embedded(in);
        std::vector<int> dummy;
        triangulate(h, dummy);
        int st = dart_edge(h.outer);
        int s = h.edges[st].u, t = h.edges[st].v;
        auto num = st_numbering(h, s, t, st);
        kp = h;
        o.input_vertex.assign(h.nv(), -1);
        std::iota(o.input_vertex.begin(), o.input_vertex.end(), 0);
        o.edge_input.assign(h.ne(), -1);
        o.tail.assign(h.ne(), -1);
        for (int e = 0; e < h.ne(); ++e) {
            if (e < g.num_edges()) o.edge_input[e] = e;
            o.tail[e] = num[h.edges[e].u] < num[h.edges[e].v] ? h.edges[e].u : h.edges[e].v;
        }
    }

    DrawOut dr = visibility_drawing(o);

    // ---- read back the input graph
    for (int v = 0; v < g.num_vertices(); ++v) sd.position[v] = dr.pos[v];
    auto poly_from = [&](int ke, int from) {
        std::vector<Point> pl = dr.poly[ke];
        if (o.tail[ke] != from) std::reverse(pl.begin(), pl.end());
        return pl;
    };
    for (int e = 0; e < g.num_edges(); ++e) {
        std::vector<Point> full;
        if (NE == 0 || intra(e)) {
            int ke = NE == 0 ? e : kintra[e];
            full = poly_from(ke, g.edge(e).u);
        } else {
            int at = g.edge(e).u;
            for (int ne : n.pieces[e]) {
                std::vector<int> chain;
                if (port_piece[2 * ne] >= 0) chain.push_back(port_piece[2 * ne]);
                chain.push_back(ne);
                if (port_piece[2 * ne + 1] >= 0) chain.push_back(port_piece[2 * ne + 1]);
                for (int ke : chain) {
                    int ku = kp.edges[ke].u, kv2 = kp.edges[ke].v;
                    auto pl = poly_from(ke, at);
                    if (!full.empty()) pl.erase(pl.begin());
                    full.insert(full.end(), pl.begin(), pl.end());
                    at = at == ku ? kv2 : ku;
                }
            }
        }
        sd.bends[e].assign(full.begin() + 1, full.end() - 1);
    }
    return sd;
}

// ================================================================ pipeline

EmbedResult embed(const EmbeddedGraph& emb) {
    EmbedResult r;
    const ClusteredGraph& g = emb.graph();
    if (g.num_vertices() == 0) {
        r.drawing = StripDrawing{g, {}, {}};
        return r;
    }
    NormalizedInstance n = normalize(emb);
    if (!n.valid) {
        r.verdict.planar = false;
        try {
            if (auto t = find_trapped_vertex(emb)) r.verdict.witness = *t;
        } catch (const Error&) {
        }
        return r;
    }
    int alt = find_alternating_vertex(n.embedding);
    if (alt >= 0) {
        r.verdict.planar = false;
        int c = n.vertex_component[alt];
        r.verdict.witness = CandidateWitness{c >= 0 ? n.components[c][0] : -1};
        return r;
    }
    auto faces = classify_faces(n.embedding);
    auto a = assign_extremes(n.embedding, faces);
    if (!a.saturated) {
        r.verdict.planar = false;
        r.verdict.witness = HallWitness{a.hall_violator};
        return r;
    }
    r.drawing = build_strip_drawing(n, faces, a);
    return r;
}

Verdict embedder_decide(const EmbeddedGraph& emb) { return embed(emb).verdict; }

// ================================================================ SVG

std::string render_svg(const StripDrawing& d) {
    const ClusteredGraph& g = d.graph;
    auto f = [](const Rational& r) { return static_cast<double>(r); };
    int lo = g.num_vertices() ? g.min_cluster() : 0, hi = g.num_vertices() ? g.max_cluster() : 0;
    double ymin = 0, ymax = 0;
    bool first = true;
    auto take = [&](const Point& p) {
        double y = f(p.y);
        if (first || y < ymin) ymin = y;
        if (first || y > ymax) ymax = y;
        first = false;
    };
    for (const auto& p : d.position) take(p);
    for (const auto& b : d.bends)
        for (const auto& p : b) take(p);
    const double sx = 160, margin = 20;
    double span = std::max(1.0, ymax - ymin);
    double sy = std::min(60.0, 600.0 / span);
    double width = sx * (hi - lo + 1) + 2 * margin, height = sy * span + 2 * margin;
    auto X = [&](const Rational& x) { return margin + (f(x) - lo) * sx; };
    auto Y = [&](const Rational& y) { return margin + (ymax - f(y)) * sy; };
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    for (int c = lo; c <= hi; ++c)
        os << "  <rect x=\"" << margin + (c - lo) * sx << "\" y=\"0\" width=\"" << sx << "\" height=\"" << height
           << "\" fill=\"" << ((c - lo) % 2 ? "#eef3fb" : "#f7f7f7") << "\"/>\n";
    for (int e = 0; e < g.num_edges(); ++e) {
        os << "  <polyline fill=\"none\" stroke=\"#333\" stroke-width=\"1.5\" points=\"";
        auto p = d.polyline(e);
        for (size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << X(p[i].x) << "," << Y(p[i].y);
        os << "\"/>\n";
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        os << "  <circle cx=\"" << X(d.position[v].x) << "\" cy=\"" << Y(d.position[v].y)
           << "\" r=\"4\" fill=\"#c33\"><title>" << g.name(v) << "</title></circle>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace sp
