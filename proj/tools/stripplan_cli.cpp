#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sp/characterization.hpp"
#include "sp/embedder.hpp"
#include "sp/io.hpp"
#include "sp/oracle.hpp"
#include "sp/parity.hpp"
#include "sp/pctree.hpp"
#include "sp/reductions.hpp"
#include "sp/star.hpp"
#include "sp/theta.hpp"
#include "sp/tree.hpp"

using namespace sp;

namespace {

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kInvalid = 2;
constexpr int kBudget = 3;

struct Outcome {
    Json report;
    int code = kAccept;
};

std::string planar_word(bool planar) { return planar ? "planar" : "not_planar"; }

// Drawing certificate for a planar embedding, re-verified independently of the embedder.
void attach_drawing(Json& r, const EmbeddedGraph& emb, const std::string& svg_path = "") {
    EmbedResult er = embed(emb);
    if (!er.drawing) {
        r["drawing"] = nullptr;
        r["drawing_verified"] = false;
        return;
    }
    Violation a = verify_strip_embedding(*er.drawing);
    Violation b = verify_realizes(*er.drawing, emb);
    r["drawing"] = drawing_to_json(*er.drawing);
    r["drawing_verified"] = a.ok() && b.ok();
    if (!a.ok()) r["drawing_violation"] = a.describe();
    else if (!b.ok()) r["drawing_violation"] = b.describe();
    if (!svg_path.empty()) {
        std::ofstream out(svg_path);
        if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + svg_path);
        out << render_svg(*er.drawing);
    }
}

Json matrix_json(const AmbiguousMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < static_cast<int>(m.rows.size()); ++i) rows.push_back(m.row_string(i));
    return rows;
}

Json obstruction_json(const AmbiguousMatrix& m, int failing_row) {
    Json j;
    j["failing_row"] = failing_row;
    if (failing_row >= 0 && failing_row < static_cast<int>(m.rows.size())) {
        j["row"] = m.row_string(failing_row);
        if (failing_row < static_cast<int>(m.row_tags.size())) j["row_tag"] = m.row_tags[failing_row];
    }
    j["matrix"] = matrix_json(m);
    return j;
}

bool is_path(const ClusteredGraph& g) {
    if (!g.is_tree()) return false;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool is_subdivided_star(const ClusteredGraph& g) {
    if (!g.is_tree()) return false;
    int high = 0;
    for (int v = 0; v < g.num_vertices(); ++v) high += g.degree(v) >= 3;
    return high == 1;
}

EmbeddedGraph trivial_embedding(const ClusteredGraph& g) {
    std::vector<std::vector<int>> rot(g.num_vertices());
    int outer = -1;
    for (int v = 0; v < g.num_vertices(); ++v) {
        rot[v] = g.darts_at(v);
        if (outer < 0 && !rot[v].empty()) outer = rot[v][0];
    }
    return EmbeddedGraph(g, rot, outer);
}

Outcome solved(const std::string& solver, bool planar, const std::optional<EmbeddedGraph>& emb) {
    Outcome o;
    o.report["solver"] = solver;
    o.report["verdict"] = planar_word(planar);
    o.code = planar ? kAccept : kReject;
    if (planar && emb) {
        o.report["embedding"] = embedding_to_json(*emb);
        attach_drawing(o.report, *emb);
    }
    return o;
}

Outcome solve_star_cmd(const ClusteredGraph& g) {
    StarSolution s = solve_star(g);
    Outcome o = solved("star", s.planar, s.embedding);
    if (s.planar) o.report["center_rotation"] = darts_to_json(g, s.center_rotation);
    else o.report["obstruction"] = obstruction_json(s.matrix, s.failing_row);
    return o;
}

Outcome solve_tree_cmd(const ClusteredGraph& g) {
    TreeSolution s = solve_tree(g);
    Outcome o = solved("tree", s.planar, s.embedding);
    if (s.planar) o.report["leaf_order"] = vertices_to_json(g, s.leaf_order);
    else o.report["obstruction"] = obstruction_json(s.master.matrix, s.failing_row);
    return o;
}

Outcome solve_theta_cmd(const ClusteredGraph& g, const ThetaOptions& opt) {
    ThetaSolution s = solve_theta(g, opt);
    Outcome o = solved("theta", s.planar, s.embedding);
    if (s.planar) {
        o.report["u_rotation"] = darts_to_json(g, s.u_rotation);
        o.report["v_rotation"] = darts_to_json(g, s.v_rotation);
    } else {
        o.report["exhausted_orders"] = s.orders_tried;
    }
    return o;
}

Outcome oracle_cmd(const ClusteredGraph& g, const OracleLimits& limits) {
    OracleResult r = oracle_decide(g, limits);
    Outcome o;
    o.report["solver"] = "oracle";
    o.report["verdict"] = oracle_status_name(r.status);
    o.report["rotation_systems"] = r.rotation_systems;
    if (r.status == OracleStatus::Planar) {
        o.code = kAccept;
        if (r.embedding) {
            o.report["embedding"] = embedding_to_json(*r.embedding);
            attach_drawing(o.report, *r.embedding);
        }
    } else {
        o.code = r.status == OracleStatus::NotPlanar ? kReject : kBudget;
    }
    return o;
}

Outcome check_embedded_cmd(const EmbeddedGraph& emb, CheckMode mode, const CheckOptions& opt) {
    Verdict v = check_embedded(emb, mode, opt);
    Outcome o;
    o.report["verdict"] = planar_word(v.planar);
    o.code = v.planar ? kAccept : kReject;
    if (v.planar) attach_drawing(o.report, emb);
    else o.report["witness"] = witness_to_json(emb.graph(), v.witness);
    return o;
}

Outcome embed_cmd(const EmbeddedGraph& emb, const std::string& svg) {
    EmbedResult er = embed(emb);
    Outcome o;
    o.report["verdict"] = planar_word(er.verdict.planar);
    o.code = er.verdict.planar ? kAccept : kReject;
    if (!er.verdict.planar) {
        o.report["witness"] = witness_to_json(emb.graph(), er.verdict.witness);
        return o;
    }
    if (!er.drawing) throw Error(ErrorKind::InternalContradiction, "planar verdict without a drawing");
    Violation a = verify_strip_embedding(*er.drawing);
    Violation b = verify_realizes(*er.drawing, emb);
    o.report["drawing"] = drawing_to_json(*er.drawing);
    o.report["drawing_verified"] = a.ok() && b.ok();
    if (!a.ok()) o.report["drawing_violation"] = a.describe();
    else if (!b.ok()) o.report["drawing_violation"] = b.describe();
    if (!svg.empty()) {
        std::ofstream out(svg);
        if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + svg);
        out << render_svg(*er.drawing);
        o.report["svg"] = svg;
    }
    return o;
}

Outcome weak_ht_cmd(const Instance& inst) {
    ParityDrawing d = inst.parity_drawing();
    EvennessReport ev = evenness_report(d);
    Outcome o;
    o.report["evenness"] = evenness_name(ev.kind);
    if (ev.kind == Evenness::Neither)
        throw Error(ErrorKind::NotEven, "independent edges cross oddly");
    if (ev.kind == Evenness::IndependentlyEven) {
        if (!is_subdivision_of_3connected(d.graph))
            throw Error(ErrorKind::NotEven, "adjacent edges cross oddly and the graph is not a subdivided 3-connected graph");
        OddRemovalResult rr = remove_odd_crossings_3connected(d);
        o.report["vertex_splits"] = static_cast<int>(rr.splits.size());
        d = rr.drawing;
    }
    WeakHtResult w = weak_ht_embed(d);
    Violation a = verify_strip_embedding(w.drawing);
    Violation b = verify_realizes(w.drawing, w.embedding);
    o.report["verdict"] = "planar";
    o.report["outer_face_count"] = w.outer_face_count;
    o.report["same_rotation"] = w.embedding.rotations() == d.rotation;
    o.report["embedding"] = embedding_to_json(w.embedding);
    o.report["drawing"] = drawing_to_json(w.drawing);
    o.report["drawing_verified"] = a.ok() && b.ok();
    o.code = kAccept;
    return o;
}

Outcome pctree_cmd(const std::string& mode, const AmbiguousMatrix& m) {
    Outcome o;
    o.report["columns"] = m.num_columns;
    o.report["rows"] = static_cast<int>(m.rows.size());
    auto tucker = [&](Json& r) {
        TuckerObstruction t = tucker_scan(m.rows, m.num_columns);
        r["type"] = tucker_type_name(t.type);
        r["rows"] = t.rows;
        r["columns"] = t.columns;
        return t.type != TuckerType::None;
    };
    if (mode == "scan") {
        if (!is_binary(m)) throw Error(ErrorKind::InvalidInput, "scan needs a 0/1 matrix");
        Json t;
        bool found = tucker(t);
        o.report["verdict"] = found ? "reject" : "accept";
        o.report["obstruction"] = t;
        o.code = found ? kReject : kAccept;
        return o;
    }
    CircularResult r = is_binary(m) ? test_circular_ones(m.rows, m.num_columns) : test_ambiguous(m);
    o.report["verdict"] = r.feasible ? "accept" : "reject";
    o.code = r.feasible ? kAccept : kReject;
    if (r.feasible) {
        o.report["order"] = r.order;
    } else {
        Json obs;
        obs["failing_row"] = r.failing_row;
        if (is_binary(m)) {
            Json t;
            tucker(t);
            obs["tucker"] = t;
        }
        o.report["obstruction"] = obs;
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strip planarity toolkit"};
    app.require_subcommand(1);
    bool no_timings = false;
    app.add_flag("--no-timings", no_timings, "Omit timings so reports are byte-identical across runs");

    std::string input = "-";
    auto add_input = [&](CLI::App* s) { s->add_option("input", input, "Input file, - for stdin"); };

    CheckOptions check;
    std::string mode = "exhaustive";
    auto* c_check = app.add_subcommand("check-embedded", "Decide strip planarity of a fixed embedding");
    add_input(c_check);
    c_check->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "constructive"}));
    c_check->add_option("--path-budget", check.path_budget);
    c_check->add_option("--cycle-budget", check.cycle_budget);

    std::string cls = "auto";
    ThetaOptions theta;
    OracleLimits limits;
    auto* c_solve = app.add_subcommand("solve", "Decide strip planarity for stars, trees and thetas");
    add_input(c_solve);
    c_solve->add_option("--class", cls)->check(CLI::IsMember({"auto", "star", "tree", "theta"}));
    c_solve->add_option("--max-paths", theta.max_paths);
    c_solve->add_option("--max-vertices", limits.max_vertices);
    c_solve->add_option("--max-rotations", limits.max_rotation_systems);

    std::string svg;
    auto* c_embed = app.add_subcommand("embed", "Strip drawing of an embedded instance");
    add_input(c_embed);
    c_embed->add_option("--svg", svg);

    auto* c_oracle = app.add_subcommand("oracle", "Exhaustive decision over all embeddings");
    add_input(c_oracle);
    c_oracle->add_option("--max-vertices", limits.max_vertices);
    c_oracle->add_option("--max-rotations", limits.max_rotation_systems);

    std::string reduction;
    auto* c_reduce = app.add_subcommand("reduce", "Instance reductions");
    c_reduce->add_option("kind", reduction)->required()->check(CLI::IsMember({"strip-to-3c", "3c-tree-to-strip"}));
    add_input(c_reduce);

    std::string pc_mode;
    auto* c_pc = app.add_subcommand("pctree", "Circular-ones test or Tucker scan of a matrix file");
    c_pc->add_option("mode", pc_mode)->required()->check(CLI::IsMember({"test", "scan"}));
    add_input(c_pc);

    auto* c_render = app.add_subcommand("render", "Render the strip drawing of an embedded instance");
    add_input(c_render);
    c_render->add_option("--svg", svg)->required();

    auto* c_weak = app.add_subcommand("weak-ht", "Embedding from an even drawing given by crossing parities");
    add_input(c_weak);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return kInvalid;
    }

    auto start = std::chrono::steady_clock::now();
    CLI::App* sub = app.get_subcommands().front();
    Outcome out;
    try {
        std::string text = read_text(input);
        if (sub == c_pc) {
            out = pctree_cmd(pc_mode, parse_matrix(text));
        } else if (sub == c_reduce) {
            bool strip = reduction == "strip-to-3c";
            Instance inst = parse_instance_text(text, ParseOptions{strip});
            ClusteredGraph r = strip ? strip_to_three_clusters(inst.graph) : three_cluster_tree_to_strip(inst.graph);
            out.report["instance"] = graph_to_json(r);
        } else {
            Instance inst = parse_instance_text(text);
            const ClusteredGraph& g = inst.graph;
            if (sub == c_check) {
                out = check_embedded_cmd(inst.embedding(), mode == "exhaustive" ? CheckMode::Exhaustive : CheckMode::Constructive, check);
            } else if (sub == c_embed || sub == c_render) {
                out = embed_cmd(inst.embedding(), svg);
            } else if (sub == c_oracle) {
                out = oracle_cmd(g, limits);
            } else if (sub == c_weak) {
                out = weak_ht_cmd(inst);
            } else if (cls == "star") {
                out = solve_star_cmd(g);
            } else if (cls == "tree") {
                out = solve_tree_cmd(g);
            } else if (cls == "theta") {
                out = solve_theta_cmd(g, theta);
            } else if (is_path(g)) {
                out = solved("path", true, trivial_embedding(g));
            } else if (is_subdivided_star(g)) {
                out = solve_star_cmd(g);
            } else if (g.is_tree()) {
                out = solve_tree_cmd(g);
            } else {
                bool done = false;
                try {
                    out = solve_theta_cmd(g, theta);
                    done = true;
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::NotATheta) throw;
                }
                if (done) {
                } else if (inst.embedded()) {
                    out = check_embedded_cmd(inst.embedding(), CheckMode::Exhaustive, CheckOptions{});
                    out.report["solver"] = "check-embedded";
                    out.report["scope"] = "fixed_embedding";
                } else if (g.num_vertices() <= limits.max_vertices) {
                    out = oracle_cmd(g, limits);
                } else {
                    throw Error(ErrorKind::UnsupportedClass, "no polynomial algorithm for this class and the graph exceeds the oracle limit");
                }
            }
        }
    } catch (const Error& e) {
        bool budget = e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::SearchBudgetExceeded;
        out.report = Json::object();
        out.report["verdict"] = budget ? "budget_exceeded" : "error";
        out.report["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
        out.code = budget ? kBudget : kInvalid;
        std::cerr << e.what() << "\n";
    } catch (const std::exception& e) {
        out.report = Json::object();
        out.report["verdict"] = "error";
        out.report["error"] = {{"kind", "InvalidInput"}, {"message", e.what()}};
        out.code = kInvalid;
        std::cerr << e.what() << "\n";
    }

    Json report;
    report["command"] = sub->get_name();
    for (auto& [k, v] : out.report.items()) report[k] = v;
    report["exit_code"] = out.code;
    if (!no_timings) {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report["timings"] = {{"total_ms", ms}};
    }
    std::cout << report.dump(2) << "\n";
    return out.code;
}
