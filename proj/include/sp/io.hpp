#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sp/characterization.hpp"
#include "sp/embedder.hpp"
#include "sp/graph.hpp"
#include "sp/parity.hpp"
#include "sp/pctree.hpp"

namespace sp {

using Json = nlohmann::ordered_json;

// Instance file: vertices [{id, cluster}], edges [[u, v], ...], and optionally
// rotation {id: [edge index, ...]} (clockwise), outer_face [id, id, ...] (a facial walk, or
// its first two vertices), crossing_parities [[e, f], ...] listing the odd edge pairs, and
// ray_parities [[e, id], ...] listing the edges crossing the ray of a vertex oddly.
struct Instance {
    ClusteredGraph graph;
    std::optional<std::vector<std::vector<int>>> rotation;  // darts per vertex
    int outer_dart = -1;
    std::vector<std::pair<int, int>> odd_pairs;
    std::optional<std::vector<std::pair<int, int>>> odd_rays;  // (edge, vertex)

    bool embedded() const { return rotation.has_value(); }
    // Throws InvalidInput when the instance has no rotation block.
    EmbeddedGraph embedding() const;
    // Rays default to those of the plane drawing of the rotation system and outer face.
    ParityDrawing parity_drawing() const;
};

struct ParseOptions {
    // When false, clusters are kept as given and edges may join any two clusters.
    bool strip = true;
};

// Throws Error(InvalidInput or a graph error kind) on malformed input.
Instance parse_instance(const nlohmann::json& j, const ParseOptions& opt = {});
Instance parse_instance_text(const std::string& text, const ParseOptions& opt = {});
// "-" reads standard input.
std::string read_text(const std::string& path);

Json graph_to_json(const ClusteredGraph& g);
// Graph plus rotation and outer face, readable by parse_instance.
Json embedding_to_json(const EmbeddedGraph& emb);
Json rotation_to_json(const ClusteredGraph& g, const std::vector<std::vector<int>>& rotation);
Json darts_to_json(const ClusteredGraph& g, const std::vector<int>& darts);
Json vertices_to_json(const ClusteredGraph& g, const std::vector<int>& vertices);
Json witness_to_json(const ClusteredGraph& g, const WitnessVariant& w);
Json drawing_to_json(const StripDrawing& d);

// Matrix text: one row per line over {0,1,*}; blanks are ignored, '#' starts a comment.
AmbiguousMatrix parse_matrix(const std::string& text);
bool is_binary(const AmbiguousMatrix& m);
BinaryMatrix to_binary(const AmbiguousMatrix& m);
std::string format_matrix(const BinaryMatrix& m);

}  // namespace sp
