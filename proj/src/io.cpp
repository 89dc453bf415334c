#include "sp/io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace sp {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

std::string id_string(const nlohmann::json& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    invalid(std::string(what) + ": vertex id must be a string or an integer");
}

int int_value(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer()) invalid(std::string(what) + ": expected an integer");
    return j.get<int>();
}

const nlohmann::json& array_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) invalid(std::string("missing field '") + key + "'");
    const auto& a = j.at(key);
    if (!a.is_array()) invalid(std::string("field '") + key + "' must be an array");
    return a;
}

int vertex_of(const ClusteredGraph& g, const nlohmann::json& j, const char* what) {
    std::string name = id_string(j, what);
    auto v = g.find_vertex(name);
    if (!v) throw Error(ErrorKind::DanglingEndpoint, std::string(what) + ": unknown vertex " + name);
    return *v;
}

int edge_index(const ClusteredGraph& g, const nlohmann::json& j, const char* what) {
    int e = int_value(j, what);
    if (e < 0 || e >= g.num_edges()) invalid(std::string(what) + ": edge index out of range");
    return e;
}

ClusteredGraph build_free(const GraphSpec& spec) {
    ClusteredGraph g;
    for (const auto& [name, c] : spec.vertices) {
        if (g.find_vertex(name)) throw Error(ErrorKind::DuplicateVertexId, name);
        g.add_vertex(name, c);
    }
    for (const auto& [a, b] : spec.edges) {
        auto u = g.find_vertex(a), v = g.find_vertex(b);
        if (!u) throw Error(ErrorKind::DanglingEndpoint, a);
        if (!v) throw Error(ErrorKind::DanglingEndpoint, b);
        if (*u == *v) invalid("loop at " + a);
        g.add_edge(*u, *v);
    }
    return g;
}

std::vector<int> walk_vertices(const EmbeddedGraph& emb, int start) {
    std::vector<int> out;
    int d = start;
    do {
        out.push_back(emb.graph().tail(d));
        d = emb.face_next(d);
    } while (d != start);
    return out;
}

int outer_dart_from_walk(const EmbeddedGraph& emb, const std::vector<int>& walk) {
    const ClusteredGraph& g = emb.graph();
    for (int d : g.darts_at(walk[0])) {
        if (g.head(d) != walk[1]) continue;
        if (walk.size() == 2) return d;
        if (walk_vertices(emb, d) == walk) return d;
    }
    invalid("outer_face is not a facial walk of the rotation system");
}

std::string rational_string(const Rational& r) { return r.str(); }

Json point_json(const Point& p) { return Json::array({rational_string(p.x), rational_string(p.y)}); }

Json cap_cup_json(const ClusteredGraph& g, const CapCup& c) {
    Json j;
    j["kind"] = c.kind == CapCupKind::Cap ? "cap" : "cup";
    j["level"] = c.level;
    j["path"] = vertices_to_json(g, c.path);
    return j;
}

}  // namespace

EmbeddedGraph Instance::embedding() const {
    if (!rotation) invalid("instance has no rotation block");
    return EmbeddedGraph(graph, *rotation, outer_dart);
}

ParityDrawing Instance::parity_drawing() const {
    ParityDrawing d = ParityDrawing::from_embedding(embedding());
    for (const auto& [e, f] : odd_pairs) d.cr[e][f] = d.cr[f][e] = 1;
    if (odd_rays) {
        for (auto& row : d.ray) std::fill(row.begin(), row.end(), 0);
        for (const auto& [e, v] : *odd_rays) d.ray[e][v] = 1;
    }
    return d;
}

Instance parse_instance(const nlohmann::json& j, const ParseOptions& opt) {
    if (!j.is_object()) invalid("instance must be a JSON object");
    GraphSpec spec;
    for (const auto& v : array_field(j, "vertices")) {
        if (!v.is_object() || !v.contains("id") || !v.contains("cluster")) invalid("vertex entries need id and cluster");
        spec.vertices.emplace_back(id_string(v.at("id"), "vertices"), int_value(v.at("cluster"), "cluster"));
    }
    for (const auto& e : array_field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) invalid("edge entries must be [u, v]");
        spec.edges.emplace_back(id_string(e[0], "edges"), id_string(e[1], "edges"));
    }
    Instance inst;
    inst.graph = opt.strip ? build_clustered_graph(spec) : build_free(spec);
    const ClusteredGraph& g = inst.graph;

    if (j.contains("rotation") && !j.at("rotation").is_null()) {
        const auto& r = j.at("rotation");
        if (!r.is_object()) invalid("rotation must map vertex ids to edge lists");
        std::vector<std::vector<int>> rot(g.num_vertices());
        std::vector<int> given(g.num_vertices(), 0);
        for (const auto& [key, list] : r.items()) {
            auto v = g.find_vertex(key);
            if (!v) throw Error(ErrorKind::DanglingEndpoint, "rotation: unknown vertex " + key);
            if (!list.is_array()) invalid("rotation of " + key + " must be an array");
            given[*v] = 1;
            for (const auto& x : list) {
                int e = edge_index(g, x, "rotation");
                if (g.edge(e).u == *v) rot[*v].push_back(make_dart(e, 0));
                else if (g.edge(e).v == *v) rot[*v].push_back(make_dart(e, 1));
                else invalid("rotation of " + key + " lists a non-incident edge");
            }
        }
        for (int v = 0; v < g.num_vertices(); ++v)
            if (!given[v] && g.degree(v) > 0) invalid("rotation missing for vertex " + g.name(v));
        inst.rotation = rot;
        int first = -1;
        for (const auto& darts : rot)
            if (!darts.empty()) {
                first = darts[0];
                break;
            }
        inst.outer_dart = first;
        if (j.contains("outer_face") && !j.at("outer_face").is_null()) {
            const auto& of = j.at("outer_face");
            if (!of.is_array() || of.size() < 2) invalid("outer_face must list at least two vertices");
            std::vector<int> walk;
            for (const auto& x : of) walk.push_back(vertex_of(g, x, "outer_face"));
            inst.outer_dart = outer_dart_from_walk(inst.embedding(), walk);
        }
        inst.embedding();  // validates the rotation system
    } else if (j.contains("outer_face") && !j.at("outer_face").is_null()) {
        invalid("outer_face given without rotation");
    }

    if (j.contains("crossing_parities") && !j.at("crossing_parities").is_null()) {
        for (const auto& p : array_field(j, "crossing_parities")) {
            if (!p.is_array() || p.size() != 2) invalid("crossing_parities entries must be [e, f]");
            int e = edge_index(g, p[0], "crossing_parities"), f = edge_index(g, p[1], "crossing_parities");
            if (e == f) invalid("crossing_parities pairs an edge with itself");
            inst.odd_pairs.emplace_back(e, f);
        }
    }
    if (j.contains("ray_parities") && !j.at("ray_parities").is_null()) {
        std::vector<std::pair<int, int>> rays;
        for (const auto& p : array_field(j, "ray_parities")) {
            if (!p.is_array() || p.size() != 2) invalid("ray_parities entries must be [e, vertex]");
            rays.emplace_back(edge_index(g, p[0], "ray_parities"), vertex_of(g, p[1], "ray_parities"));
        }
        inst.odd_rays = rays;
    }
    if ((!inst.odd_pairs.empty() || inst.odd_rays) && !inst.rotation) invalid("parities given without rotation");
    return inst;
}

Instance parse_instance_text(const std::string& text, const ParseOptions& opt) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        invalid(std::string("malformed JSON: ") + e.what());
    }
    return parse_instance(j, opt);
}

std::string read_text(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) invalid("cannot open " + path);
    ss << in.rdbuf();
    return ss.str();
}

Json graph_to_json(const ClusteredGraph& g) {
    Json j;
    j["vertices"] = Json::array();
    for (int v = 0; v < g.num_vertices(); ++v) j["vertices"].push_back({{"id", g.name(v)}, {"cluster", g.gamma(v)}});
    j["edges"] = Json::array();
    for (const auto& e : g.edges()) j["edges"].push_back({g.name(e.u), g.name(e.v)});
    return j;
}

Json rotation_to_json(const ClusteredGraph& g, const std::vector<std::vector<int>>& rotation) {
    Json j = Json::object();
    for (int v = 0; v < g.num_vertices(); ++v) {
        Json list = Json::array();
        for (int d : rotation[v]) list.push_back(dart_edge(d));
        j[g.name(v)] = list;
    }
    return j;
}

Json embedding_to_json(const EmbeddedGraph& emb) {
    const ClusteredGraph& g = emb.graph();
    Json j = graph_to_json(g);
    j["rotation"] = rotation_to_json(g, emb.rotations());
    if (emb.outer_dart() >= 0) j["outer_face"] = vertices_to_json(g, walk_vertices(emb, emb.outer_dart()));
    return j;
}

Json darts_to_json(const ClusteredGraph& g, const std::vector<int>& darts) {
    Json j = Json::array();
    for (int d : darts) j.push_back({{"edge", dart_edge(d)}, {"from", g.name(g.tail(d))}, {"to", g.name(g.head(d))}});
    return j;
}

Json vertices_to_json(const ClusteredGraph& g, const std::vector<int>& vertices) {
    Json j = Json::array();
    for (int v : vertices) j.push_back(g.name(v));
    return j;
}

Json witness_to_json(const ClusteredGraph& g, const WitnessVariant& w) {
    Json j;
    if (const auto* p = std::get_if<PairWitness>(&w)) {
        j["type"] = "interleaving_pair";
        j["cap"] = cap_cup_json(g, p->pair.cap);
        j["cup"] = cap_cup_json(g, p->pair.cup);
        j["shared"] = vertices_to_json(g, p->pair.shared);
        j["intersection_half"] = p->ia_half;
    } else if (const auto* t = std::get_if<TrappedWitness>(&w)) {
        j["type"] = "trapped_vertex";
        j["vertex"] = g.name(t->vertex);
        j["cycle"] = vertices_to_json(g, t->cycle);
        j["cycle_edges"] = t->cycle_edges;
    } else if (const auto* h = std::get_if<HallWitness>(&w)) {
        j["type"] = "hall_violation";
        j["faces"] = h->faces;
    } else if (const auto* c = std::get_if<CandidateWitness>(&w)) {
        j["type"] = "alternating_vertex";
        j["vertex"] = g.name(c->vertex);
    } else {
        j = nullptr;
    }
    return j;
}

Json drawing_to_json(const StripDrawing& d) {
    const ClusteredGraph& g = d.graph;
    Json j;
    j["vertices"] = Json::array();
    for (int v = 0; v < g.num_vertices(); ++v) {
        Point p = d.position[v];
        j["vertices"].push_back({{"id", g.name(v)}, {"x", rational_string(p.x)}, {"y", rational_string(p.y)}});
    }
    j["edges"] = Json::array();
    for (int e = 0; e < g.num_edges(); ++e) {
        Json bends = Json::array();
        for (const auto& p : d.bends[e]) bends.push_back(point_json(p));
        j["edges"].push_back({{"edge", e}, {"bends", bends}});
    }
    return j;
}

AmbiguousMatrix parse_matrix(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        lines.push_back(line);
    }
    AmbiguousMatrix m = AmbiguousMatrix::parse(lines);
    if (m.rows.empty()) invalid("matrix has no rows");
    return m;
}

bool is_binary(const AmbiguousMatrix& m) {
    for (const auto& r : m.rows)
        for (int x : r)
            if (x == AmbiguousMatrix::kStar) return false;
    return true;
}

BinaryMatrix to_binary(const AmbiguousMatrix& m) {
    if (!is_binary(m)) invalid("matrix contains '*' entries");
    return m.rows;
}

std::string format_matrix(const BinaryMatrix& m) {
    std::string out;
    for (const auto& r : m) {
        for (int x : r) out += x == AmbiguousMatrix::kStar ? '*' : static_cast<char>('0' + x);
        out += '\n';
    }
    return out;
}

}  // namespace sp
