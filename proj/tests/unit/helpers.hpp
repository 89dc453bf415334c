#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sp/families.hpp"
#include "sp/graph.hpp"

namespace sp::test {

struct PlaneVertex {
    std::string name;
    int cluster;
    double x, y;
};

// Straight-line plane graph: rotations from the geometry (clockwise = decreasing angle) and the
// outer face on the west side of the leftmost vertex. No vertical edges at the leftmost vertex.
inline EmbeddedGraph plane(const std::vector<PlaneVertex>& vs, const std::vector<std::pair<int, int>>& es) {
    ClusteredGraph g;
    for (const auto& v : vs) g.add_vertex(v.name, v.cluster);
    for (auto [a, b] : es) g.add_edge(a, b);
    auto angle = [&](int d) {
        const auto &p = vs[g.tail(d)], &q = vs[g.head(d)];
        return std::atan2(q.y - p.y, q.x - p.x);
    };
    std::vector<std::vector<int>> rot(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        rot[v] = g.darts_at(v);
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) { return angle(a) > angle(b); });
    }
    int outer = -1;
    if (g.num_edges() > 0) {
        int left = 0;
        for (int v = 1; v < g.num_vertices(); ++v)
            if (g.degree(v) > 0 && (g.degree(left) == 0 || vs[v].x < vs[left].x)) left = v;
        int lowest = *std::min_element(rot[left].begin(), rot[left].end(),
                                       [&](int a, int b) { return angle(a) < angle(b); });
        outer = dart_rev(lowest);
    }
    return EmbeddedGraph(g, rot, outer);
}

// Labels visited by a path from `from` through each stop in turn, one step at a time.
inline std::vector<int> zigzag(int from, const std::vector<int>& stops) {
    std::vector<int> out;
    int at = from;
    for (int s : stops)
        while (at != s) {
            at += s > at ? 1 : -1;
            out.push_back(at);
        }
    return out;
}

// Subdivided star centred in cluster 5 whose interval rows contain the 4x6 Tucker matrix M2.
inline ClusteredGraph tucker_star() {
    return make_star(5, {zigzag(5, {4, 9, 2}), zigzag(5, {4, 8, 2, 9}), zigzag(5, {6, 3, 9, 2}), zigzag(5, {6, 2, 9}),
                         zigzag(5, {9, 2}), zigzag(5, {8, 2, 9})});
}

// Wheel with rim a,b,c,d around hub h; outer face is the rim when rim_outer, else triangle h,b,a.
inline EmbeddedGraph wheel(int rim_cluster, int hub_cluster, bool rim_outer = true) {
    ClusteredGraph g;
    for (const char* n : {"a", "b", "c", "d"}) g.add_vertex(n, rim_cluster);
    g.add_vertex("h", hub_cluster);
    for (int i = 0; i < 4; ++i) g.add_edge(i, (i + 1) % 4);
    for (int i = 0; i < 4; ++i) g.add_edge(4, i);
    // a top, b right, c bottom, d left; hub in the middle
    std::vector<std::vector<int>> rot = {{make_dart(4, 1), make_dart(3, 1), make_dart(0, 0)},
                                         {make_dart(5, 1), make_dart(0, 1), make_dart(1, 0)},
                                         {make_dart(6, 1), make_dart(1, 1), make_dart(2, 0)},
                                         {make_dart(7, 1), make_dart(2, 1), make_dart(3, 0)},
                                         {make_dart(4, 0), make_dart(5, 0), make_dart(6, 0), make_dart(7, 0)}};
    EmbeddedGraph emb(g, rot, 0);
    FaceMap fm = trace_faces(emb);
    for (const auto& f : fm.faces) {
        bool has_hub = false;
        for (int d : f.darts) has_hub |= g.tail(d) == 4;
        if (has_hub != rim_outer) {
            emb.set_outer_dart(f.darts[0]);
            break;
        }
    }
    return emb;
}

}  // namespace sp::test
