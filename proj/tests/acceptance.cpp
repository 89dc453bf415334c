// Acceptance suite: one PASS/FAIL line per criterion. Usage: acceptance [criterion numbers...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "sp/characterization.hpp"
#include "sp/embedder.hpp"
#include "sp/families.hpp"
#include "sp/oracle.hpp"
#include "sp/parity.hpp"
#include "sp/pctree.hpp"
#include "sp/reductions.hpp"
#include "sp/star.hpp"
#include "sp/theta.hpp"
#include "sp/tree.hpp"

using namespace sp;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

BinaryMatrix drop_row(const BinaryMatrix& m, int r) {
    BinaryMatrix out = m;
    out.erase(out.begin() + r);
    return out;
}

bool same_cyclic_rotation(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
    if (a.size() != b.size()) return false;
    for (size_t v = 0; v < a.size(); ++v) {
        if (a[v].size() != b[v].size()) return false;
        if (a[v].empty()) continue;
        auto it = std::find(b[v].begin(), b[v].end(), a[v][0]);
        if (it == b[v].end()) return false;
        std::vector<int> r(b[v].begin(), b[v].end());
        std::rotate(r.begin(), r.begin() + (it - b[v].begin()), r.end());
        if (r != a[v]) return false;
    }
    return true;
}

// ---------------------------------------------------------------- 1

Outcome tucker_obstructions() {
    Outcome o;
    int checked = 0;
    std::vector<std::pair<std::string, BinaryMatrix>> ms;
    for (int n = 5; n <= 8; ++n) ms.emplace_back("M1(" + std::to_string(n) + ")", tucker_m1(n));
    ms.emplace_back("M2", tucker_m2());
    const BinaryMatrix printed_m2 = {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}, {0, 1, 0, 1, 0, 1}};
    if (tucker_m2() != printed_m2) return {false, "M2 differs from the printed matrix"};
    for (const auto& [name, m] : ms) {
        int cols = static_cast<int>(m[0].size());
        if (test_circular_ones(m, cols).feasible) return {false, name + " accepted"};
        TuckerObstruction t = tucker_scan(m, cols);
        if (t.type == TuckerType::None) return {false, name + " has no obstruction in tucker_scan"};
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            CircularResult res = test_circular_ones(drop_row(m, r), cols);
            if (!res.feasible || !order_satisfies(drop_row(m, r), res.order))
                return {false, name + " minus row " + std::to_string(r) + " rejected"};
            ++checked;
        }
    }
    const BinaryMatrix chain = {{1, 1, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 0, 0}, {1, 0, 0, 1, 1, 0}};
    TuckerObstruction t = tucker_scan(chain, 6);
    if (t.type != TuckerType::M2) return {false, std::string("reduction chain input gives ") + tucker_type_name(t.type)};
    o.detail = fmt("M1(5..8) and M2 rejected, %d one-row deletions accepted, chain input reduces to M2", checked);
    return o;
}

// ---------------------------------------------------------------- 2

Outcome circular_ones_completeness() {
    Rng rng(2024);
    int infeasible = 0, amb_infeasible = 0;
    for (int it = 0; it < 10000; ++it) {
        int rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        int density = 20 + rng() % 60;
        BinaryMatrix m(rows, std::vector<int>(cols));
        for (auto& r : m)
            for (int& x : r) x = static_cast<int>(rng() % 100) < density;
        CircularResult res = test_circular_ones(m, cols);
        auto brute = brute_force_circular_ones(m, cols);
        if (res.feasible != brute.has_value()) return {false, fmt("matrix %d: disagreement with brute force", it)};
        if (res.feasible && !order_satisfies(m, res.order)) return {false, fmt("matrix %d: returned order invalid", it)};
        infeasible += !res.feasible;
    }
    for (int it = 0; it < 3000; ++it) {
        AmbiguousMatrix a;
        int rows = 1 + rng() % 8;
        a.num_columns = 1 + rng() % 8;
        for (int r = 0; r < rows; ++r) {
            std::vector<int> row(a.num_columns);
            for (int& x : row) {
                int u = rng() % 10;
                x = u < 2 ? AmbiguousMatrix::kStar : u % 2;
            }
            a.rows.push_back(row);
        }
        a.stair_closure();
        CircularResult res = test_ambiguous(a);
        // Equivalence with every prefix M_i restricted to the non-* columns of its last row.
        bool all = true;
        for (int i = 0; i < rows && all; ++i) {
            std::vector<int> keep;
            for (int c = 0; c < a.num_columns; ++c)
                if (a.rows[i][c] != AmbiguousMatrix::kStar) keep.push_back(c);
            BinaryMatrix mi;
            for (int r = 0; r <= i; ++r) {
                std::vector<int> row;
                for (int c : keep) row.push_back(a.rows[r][c]);
                mi.push_back(row);
            }
            all = brute_force_circular_ones(mi, static_cast<int>(keep.size())).has_value();
        }
        if (res.feasible != all) return {false, fmt("ambiguous matrix %d: disagreement with per-prefix brute force", it)};
        if (res.feasible != brute_force_ambiguous(a).has_value())
            return {false, fmt("ambiguous matrix %d: disagreement with brute force", it)};
        if (res.feasible && !order_satisfies(a, res.order)) return {false, fmt("ambiguous matrix %d: order invalid", it)};
        amb_infeasible += !res.feasible;
    }
    return {true, fmt("10000 binary (%d infeasible) and 3000 ambiguous (%d infeasible) matrices agree", infeasible,
                      amb_infeasible)};
}

// ---------------------------------------------------------------- 3

Outcome figure_twelve() {
    // Center in cluster 5, legs e0..e6 listed by the labels along each leg.
    std::vector<std::vector<int>> legs = {{4, 3, 2}, {6}, {6, 5, 4, 3}, {6, 7}, {6, 7}, {4, 3, 2}, {4, 3}};
    ClusteredGraph g = make_star(5, legs);
    std::vector<StarInterval> order = interval_order(g);
    std::vector<std::pair<int, int>> got, want = {{4, 6}, {3, 6}, {2, 6}, {4, 7}, {3, 7}, {2, 7}};
    for (const auto& iv : order) got.emplace_back(iv.s, iv.b);
    if (got != want) return {false, "interval order differs"};
    std::vector<StarInterval> direct = star_intervals(5, legs);
    auto find = [&](int s, int b) {
        for (const auto& iv : direct)
            if (iv.s == s && iv.b == b) return iv;
        return StarInterval{};
    };
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    StarInterval sb = find(4, 7), sa1 = find(3, 6);
    if (sorted(sb.E) != std::vector<int>{0, 2, 5, 6}) return {false, "E(4,7) != {e0,e2,e5,e6}"};
    if (sorted(sb.Eprime) != std::vector<int>{3, 4}) return {false, "E'(4,7) != {e3,e4}"};
    if (sorted(sa1.E) != std::vector<int>{0, 5, 6}) return {false, "E(3,6) != {e0,e5,e6}"};
    if (sorted(sa1.Eprime) != std::vector<int>{1, 2, 3, 4}) return {false, "E'(3,6) != {e1,e2,e3,e4}"};
    return {true, "order (4,6),(3,6),(2,6),(4,7),(3,7),(2,7); E(3,6)={e0,e5,e6} in E(4,7)={e0,e2,e5,e6}; "
                  "E'(4,7)={e3,e4} in E'(3,6)={e1,e2,e3,e4}"};
}

// ---------------------------------------------------------------- 4, 5

Outcome tree_oracle() {
    auto trees = enumerate_strip_trees(9, 4);
    int planar = 0;
    for (size_t i = 0; i < trees.size(); ++i) {
        OracleResult r = oracle_decide(trees[i]);
        if (r.status == OracleStatus::BudgetExceeded) return {false, fmt("oracle budget exceeded on tree %zu", i)};
        bool want = r.status == OracleStatus::Planar;
        bool got = solve_tree(trees[i]).planar;
        if (got != want) return {false, fmt("tree %zu: solver %d, oracle %d", i, got, want)};
        planar += want;
    }
    return {true, fmt("%zu trees, %d planar, all agree", trees.size(), planar)};
}

Outcome star_theta_oracle() {
    OracleLimits lim;
    lim.max_vertices = 40;
    auto stars = enumerate_stars(5, 3, 6);
    int sp = 0;
    for (size_t i = 0; i < stars.size(); ++i) {
        OracleResult r = oracle_decide(stars[i], lim);
        if (r.status == OracleStatus::BudgetExceeded) return {false, fmt("oracle budget exceeded on star %zu", i)};
        bool want = r.status == OracleStatus::Planar;
        if (solve_star(stars[i]).planar != want) return {false, fmt("star %zu disagrees", i)};
        sp += want;
    }
    auto thetas = enumerate_thetas(4, 4, 5);
    int tp = 0;
    for (size_t i = 0; i < thetas.size(); ++i) {
        OracleResult r = oracle_decide(thetas[i], lim);
        if (r.status == OracleStatus::BudgetExceeded) return {false, fmt("oracle budget exceeded on theta %zu", i)};
        bool want = r.status == OracleStatus::Planar;
        if (solve_theta(thetas[i]).planar != want) return {false, fmt("theta %zu disagrees", i)};
        tp += want;
    }
    return {true, fmt("%zu stars (%d planar), %zu thetas (%d planar), all agree", stars.size(), sp, thetas.size(), tp)};
}

// ---------------------------------------------------------------- 6

// Cluster labels of two graphs on the same vertex ids agree up to a cyclic shift mod 3.
bool same_mod3(const ClusteredGraph& a, const ClusteredGraph& b) {
    for (int shift = 0; shift < 3; ++shift) {
        bool ok = true;
        for (int v = 0; v < a.num_vertices() && ok; ++v)
            ok = ((a.gamma(v) + shift) % 3 + 3) % 3 == ((b.gamma(v) % 3) + 3) % 3;
        if (ok) return true;
    }
    return false;
}

Outcome reduction_roundtrip() {
    int n3 = 0, nstrip = 0;
    for (const auto& t : enumerate_three_cluster_trees(7)) {
        ClusteredGraph s = three_cluster_tree_to_strip(t);
        ClusteredGraph back = strip_to_three_clusters(s);
        if (!same_mod3(t, back)) return {false, "3-cluster labels not recovered"};
        ClusteredGraph s2 = three_cluster_tree_to_strip(back);
        OracleResult a = oracle_decide(s), b = oracle_decide(s2);
        if (a.status == OracleStatus::BudgetExceeded || b.status == OracleStatus::BudgetExceeded)
            return {false, "oracle budget exceeded"};
        if (a.status != b.status) return {false, "decision changed across the round trip"};
        if (cplanarity_three_cluster_tree(t) != (a.status == OracleStatus::Planar))
            return {false, "c-planarity via reduction disagrees with the oracle"};
        ++n3;
    }
    for (const auto& g : enumerate_strip_trees(7, 3)) {
        if (g.num_clusters() != 3) continue;
        ClusteredGraph t = strip_to_three_clusters(g);
        ClusteredGraph s = three_cluster_tree_to_strip(t);
        OracleResult a = oracle_decide(g), b = oracle_decide(s);
        if (a.status == OracleStatus::BudgetExceeded || b.status == OracleStatus::BudgetExceeded)
            return {false, "oracle budget exceeded"};
        if (a.status != b.status) return {false, "strip decision changed across the round trip"};
        ++nstrip;
    }
    return {true, fmt("%d three-cluster trees and %d strip trees keep their decision", n3, nstrip)};
}

// ---------------------------------------------------------------- 7

Outcome weak_ht_pipeline() {
    Rng rng(77);
    int ok = 0;
    for (int it = 0; it < 1000; ++it) {
        int n = 5 + rng() % 20, k = 2 + rng() % 5;
        EmbeddedGraph emb = random_strip_planar_embedding(rng, n, k, n + n / 2, 1);
        ParityDrawing d = perturb_even(ParityDrawing::from_embedding(emb), rng);
        if (evenness_report(d).kind != Evenness::Even) return {false, fmt("instance %d: perturbation broke evenness", it)};
        WeakHtResult w = weak_ht_embed(d);
        if (!same_cyclic_rotation(emb.rotations(), w.embedding.rotations()))
            return {false, fmt("instance %d: rotation system changed", it)};
        Violation a = verify_strip_embedding(w.drawing);
        Violation b = verify_realizes(w.drawing, w.embedding);
        if (!a.ok() || !b.ok()) return {false, fmt("instance %d: drawing fails verification", it)};
        ++ok;
    }
    return {true, fmt("%d perturbed drawings embedded with identical rotations and verified drawings", ok)};
}

// ---------------------------------------------------------------- 8

std::vector<int> first_reach_prefix(const std::vector<int>& labels, int target, int other) {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        if (labels[i] == target) return std::vector<int>(labels.begin(), labels.begin() + i + 1);
        if (labels[i] == other) return {};
    }
    return {};
}

Outcome parity_invariants() {
    Rng rng(88);
    // Odd number of outer faces.
    for (int it = 0; it < 1000; ++it) {
        int n = 4 + rng() % 20, k = 2 + rng() % 5;
        EmbeddedGraph emb = random_strip_planar_embedding(rng, n, k, n + n / 2, 1);
        ParityDrawing d = perturb_even(ParityDrawing::from_embedding(emb), rng);
        if (it % 3 == 0 && d.graph.num_edges() > 0) d = wrap_edge_around_graph(d, rng() % d.graph.num_edges());
        if (count_outer_faces(d).count % 2 != 1) return {false, fmt("even drawing %d has an even outer-face count", it)};
    }
    // Four-term sum on cap/cup quadruples of independently even drawings of subdivided stars.
    long quadruples = 0;
    int drawings = 0;
    while (drawings < 1000) {
        int deg = 4 + rng() % 4, center = 4;
        std::vector<std::vector<int>> legs(deg);
        for (auto& leg : legs) {
            int len = 1 + rng() % 6, at = center;
            for (int i = 0; i < len; ++i) {
                at = std::clamp(at + static_cast<int>(rng() % 3) - 1, 1, 7);
                leg.push_back(at);
            }
        }
        ClusteredGraph g = make_star(center, legs);
        StarSolution sol = solve_star(g);
        if (!sol.planar) continue;
        ++drawings;
        ParityDrawing d = perturb_independently_even(ParityDrawing::from_embedding(*sol.embedding), rng);
        StarInfo info = analyze_star(g);
        int v = info.center, c = g.gamma(v);
        for (int s = c - 1; s >= 1; --s)
            for (int b = c + 1; b <= 7; ++b) {
                std::vector<int> caps, cups;
                for (int l = 0; l < deg; ++l) {
                    if (!first_reach_prefix(info.leg_labels[l], s, b).empty()) caps.push_back(dart_edge(info.leg_darts[l]));
                    if (!first_reach_prefix(info.leg_labels[l], b, s).empty()) cups.push_back(dart_edge(info.leg_darts[l]));
                }
                for (size_t i = 0; i < caps.size(); ++i)
                    for (size_t j = i + 1; j < caps.size(); ++j)
                        for (size_t p = 0; p < cups.size(); ++p)
                            for (size_t q = p + 1; q < cups.size(); ++q) {
                                if (separation_parity(d, v, caps[i], caps[j], cups[p], cups[q]) != 0)
                                    return {false, fmt("four-term sum odd in drawing %d", drawings)};
                                ++quadruples;
                            }
            }
    }
    if (quadruples == 0) return {false, "no cap/cup quadruple witnessed"};
    // Anti-separation pattern.
    int patterns = 0;
    for (int it = 0; it < 300; ++it) {
        int deg = 6 + rng() % 4;
        ClusteredGraph g;
        g.add_vertex("v", 2);
        for (int i = 0; i < deg; ++i) g.add_edge(0, g.add_vertex("x" + std::to_string(i), 1 + rng() % 3));
        std::vector<std::vector<int>> rot(g.num_vertices());
        for (int i = 0; i < deg; ++i) {
            rot[0].push_back(make_dart(i, 0));
            rot[i + 1] = {make_dart(i, 1)};
        }
        std::shuffle(rot[0].begin(), rot[0].end(), rng);
        EmbeddedGraph emb(g, rot, rot[0][0]);
        ParityDrawing d = ParityDrawing::from_embedding(emb);
        std::vector<int> pos(deg);
        std::iota(pos.begin(), pos.end(), 0);
        std::shuffle(pos.begin(), pos.end(), rng);
        pos.resize(6);
        std::sort(pos.begin(), pos.end());
        int shift = rng() % 6;
        std::vector<int> e(6);
        for (int i = 0; i < 6; ++i) e[i] = dart_edge(rot[0][pos[(i + shift) % 6]]);
        d.flip(e[0], e[1]);
        d.flip(e[2], e[3]);
        d.flip(e[4], e[5]);
        for (int p = rng() % 5; p > 0; --p) pull_in_place(d, rng() % deg, 0);
        try {
            normalize_rotation_block(d, 0, {e[1], e[3], e[5]}, {e[0], e[2], e[4]});
            return {false, fmt("pattern %d accepted", it)};
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::ParityObstruction) return {false, std::string("unexpected error: ") + err.what()};
        }
        ++patterns;
    }
    return {true, fmt("1000 even drawings with odd outer-face count; %ld quadruples in 1000 drawings sum to 0; "
                      "%d anti-separation patterns rejected",
                      quadruples, patterns)};
}

// ---------------------------------------------------------------- 9

Outcome embedder_soundness() {
    Rng rng(99);
    int accepted = 0, tried = 0, fancy = 0;
    while (accepted < 500) {
        ++tried;
        int n = 8 + rng() % 24, k = 3 + rng() % 6;
        EmbeddedGraph emb = random_strip_planar_embedding(rng, n, k, n + n / 3, 1 + rng() % 3);
        NormalizedInstance nm = normalize(emb);
        if (!nm.valid) return {false, fmt("planar instance %d normalized as invalid", tried)};
        std::vector<FaceInfo> faces = classify_faces(nm.embedding);
        FancyEuler fe = fancy_face_euler(nm.embedding, faces);
        if (fe.fancy_faces == 0) continue;  // keep instances with a nonempty fancy-face subgraph
        ++accepted;
        fancy += fe.fancy_faces;
        ExtremeAssignment a = assign_extremes(nm.embedding, faces);
        if (!a.saturated) return {false, fmt("instance %d: assignment not saturated", accepted)};
        if (a.num_extremes != a.demand) return {false, fmt("instance %d: extremes %d vs demand %d", accepted, a.num_extremes, a.demand)};
        if (!fe.holds) return {false, fmt("instance %d: Euler identity fails", accepted)};
        StripDrawing d = build_strip_drawing(nm, faces, a);
        if (!verify_strip_embedding(d).ok() || !verify_realizes(d, emb).ok())
            return {false, fmt("instance %d: drawing fails verification", accepted)};
    }
    return {true, fmt("500 instances with fancy faces (%d total, %d sampled): saturated, verified, Euler and demand hold",
                      fancy, tried)};
}

// ---------------------------------------------------------------- 10

double slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double n = static_cast<double>(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        double x = std::log(xs[i]), y = std::log(ys[i]);
        sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double median_time(const std::function<void()>& f, int runs = 5) {
    std::vector<double> t;
    for (int r = 0; r < runs; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        t.push_back(seconds_since(t0));
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

Outcome complexity() {
    std::vector<double> ns, tree_t;
    for (int n : {50, 100, 200, 400, 800}) {
        Rng rng(1000 + n);
        std::vector<ClusteredGraph> trees;
        for (int i = 0; i < 3; ++i) trees.push_back(random_tree(rng, n, 8));
        ns.push_back(n);
        tree_t.push_back(median_time([&] {
            for (const auto& t : trees) solve_tree(t);
        }));
    }
    double e_tree = slope(ns, tree_t);
    std::vector<double> rs, red_t;
    for (int n : {50, 100, 200, 400, 800}) {
        Rng rng(2000 + n);
        ClusteredGraph t = random_tree(rng, n, 8);
        ClusteredGraph t3 = strip_to_three_clusters(t);
        rs.push_back(n);
        red_t.push_back(median_time([&] {
            for (int i = 0; i < 400; ++i) {
                strip_to_three_clusters(t);
                three_cluster_tree_to_strip(t3);
            }
        }));
    }
    double e_red = slope(rs, red_t);
    bool pass = e_tree <= 3.3 && e_red <= 1.2;
    return {pass, fmt("tree solver exponent %.2f (n=50..800, %.3fs at 800); reductions exponent %.2f (n=50..800)",
                      e_tree, tree_t.back(), e_red)};
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"Tucker obstructions", tucker_obstructions},
        {"circular-ones completeness", circular_ones_completeness},
        {"interval order of the reference star", figure_twelve},
        {"trees match the oracle", tree_oracle},
        {"stars and thetas match the oracle", star_theta_oracle},
        {"reduction round trip", reduction_roundtrip},
        {"weak Hanani-Tutte pipeline", weak_ht_pipeline},
        {"parity invariants", parity_invariants},
        {"embedder soundness", embedder_soundness},
        {"complexity smoke test", complexity},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    int failed = 0;
    for (int i = 0; i < static_cast<int>(criteria.size()); ++i) {
        if (!only.empty() && !only.count(i + 1)) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("criterion %d [%s] %s: %s (%.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
