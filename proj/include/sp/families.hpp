#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sp/graph.hpp"

namespace sp {

using Rng = std::mt19937_64;

// Canonical string of a vertex-labelled tree (least rooted encoding over all roots).
std::string tree_canonical_form(const ClusteredGraph& g);

// Unlabelled trees on n vertices up to isomorphism, as edge lists over 0..n-1.
std::vector<std::vector<std::pair<int, int>>> unlabeled_trees(int n);

// Strip clustered trees with at most max_vertices vertices and at most max_clusters clusters,
// one per isomorphism class of labelled trees up to reversing the cluster order.
std::vector<ClusteredGraph> enumerate_strip_trees(int max_vertices, int max_clusters, int min_vertices = 1);

// Trees with clusters 0, 1, 2 (any edge allowed), one per labelled isomorphism class.
std::vector<ClusteredGraph> enumerate_three_cluster_trees(int max_vertices, int min_vertices = 1);

// Subdivided stars with center degree in [3, max_degree], legs of length 1..max_leg,
// at most max_clusters clusters, up to leg permutation and reversing the cluster order.
std::vector<ClusteredGraph> enumerate_stars(int max_degree, int max_leg, int max_clusters);

// Theta graphs with 3..max_paths paths of length 1..max_len (at most one direct edge),
// at most max_clusters clusters, up to path permutation, pole swap and cluster reversal.
std::vector<ClusteredGraph> enumerate_thetas(int max_paths, int max_len, int max_clusters);

ClusteredGraph make_star(int center_label, const std::vector<std::vector<int>>& legs);
// Poles "u" and "v"; each path lists the labels of its internal vertices.
ClusteredGraph make_theta(int u_label, int v_label, const std::vector<std::vector<int>>& paths);

ClusteredGraph random_tree(Rng& rng, int n, int k);

// Random connected plane strip clustered graph built by inserting pendant vertices and chords
// inside faces; the outer face is a random face.
EmbeddedGraph random_plane_strip_graph(Rng& rng, int n, int k, int chords);

// Strip planar instance read off a random straight-line drawing: n points in strips 1..k, and
// non-crossing segments spanning at most max_span strips added greedily up to max_edges. The
// rotation system and outer face are those of the drawing; only the largest connected piece is kept.
EmbeddedGraph random_strip_planar_embedding(Rng& rng, int n, int k, int max_edges, int max_span = 1);

}  // namespace sp
