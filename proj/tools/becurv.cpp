// Command-line surface: family generation, curvature tables, CD checks,
// structural reports, and classification scans.
//
// Exit codes: 0 success / condition holds, 1 definite negative answer
// (CD fails, theorem verification fails), 2 usage or input error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "becurv/classify.hpp"
#include "becurv/curvature.hpp"
#include "becurv/families.hpp"
#include "becurv/graph.hpp"
#include "becurv/graph_io.hpp"
#include "becurv/operators.hpp"

namespace {

using becurv::DimensionParameter;
using becurv::WeightedGraph;

std::string fmt12(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

nlohmann::json json_number_or_inf(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Both file formats are accepted. Edge-list lines start with a directive
// token ('#', or e/v/m followed by whitespace), none of which can begin a
// graph6 line: graph6 bytes are confined to [63, 126] and never contain
// whitespace after the first character position in that way.
bool looks_like_edge_list(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' ||
                               text[i] == '\n'))
        ++i;
    if (i >= text.size()) return true;  // empty file: let the edge-list parser report it
    char c = text[i];
    if (c == '#') return true;
    if (c == 'e' || c == 'v' || c == 'm') {
        return i + 1 < text.size() && (text[i + 1] == ' ' || text[i + 1] == '\t');
    }
    return false;
}

WeightedGraph load_graph(const std::string& path, WeightedGraph::Preset preset) {
    const std::string text = read_file(path);
    if (looks_like_edge_list(text)) return becurv::parse_edge_list(text, preset);
    if (preset == WeightedGraph::Preset::custom)
        throw std::runtime_error("custom preset requires an edge-list file with m lines; "
                                 "graph6 carries no measures");
    std::string line = text;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    return becurv::decode_graph6(line, preset);
}

WeightedGraph::Preset parse_preset_or_throw(const std::string& s) {
    auto p = becurv::parse_preset(s);
    if (!p) throw std::runtime_error("unknown laplacian preset: " + s);
    return *p;
}

unsigned threads_from_env() {
    const char* env = std::getenv("THREADS");
    if (env == nullptr || *env == '\0') return 0;  // default: all cores
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == nullptr || *end != '\0' || v == 0 || v > 1024) {
        std::cerr << "warning: ignoring invalid THREADS value '" << env << "'\n";
        return 0;
    }
    return static_cast<unsigned>(v);
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << content;
}

// Sorted (natural order) listing of a witness function's support.
void print_witness_lines(std::ostream& os, const becurv::VertexFunction& f,
                         const std::string& indent) {
    std::vector<std::string> names;
    for (const auto& [name, value] : f.values()) names.push_back(name);
    std::sort(names.begin(), names.end(), becurv::NaturalLess{});
    os << indent << "witness (normalized to Gamma(f) = 1 at the vertex):\n";
    for (const auto& name : names) os << indent << "f(" << name << ") = " << fmt12(f(name)) << "\n";
}

nlohmann::json witness_json(const becurv::VertexFunction& f) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, value] : f.values()) j[name] = value;
    return j;
}

// ---- generate ------------------------------------------------------------

unsigned parse_param(const std::string& s) {
    char* end = nullptr;
    unsigned long v = std::strtoul(s.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || s.empty() || v > 1000000)
        throw std::runtime_error("invalid numeric parameter: " + s);
    return static_cast<unsigned>(v);
}

int run_generate(const std::string& family, const std::vector<std::string>& params,
                 const std::string& format, const std::string& out_path) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw std::runtime_error("family '" + family + "' takes " + std::to_string(count) +
                                     " parameter(s), got " + std::to_string(params.size()));
    };
    WeightedGraph g = [&]() -> WeightedGraph {
        if (family == "path") { need(1); return becurv::families::path(parse_param(params[0])); }
        if (family == "cycle") { need(1); return becurv::families::cycle(parse_param(params[0])); }
        if (family == "star") { need(1); return becurv::families::star(parse_param(params[0])); }
        if (family == "star3-plus") { need(1); return becurv::families::star3_plus(parse_param(params[0])); }
        if (family == "paw") { need(0); return becurv::families::paw(); }
        if (family == "friendship") { need(1); return becurv::families::friendship(parse_param(params[0])); }
        if (family == "complete") { need(1); return becurv::families::complete(parse_param(params[0])); }
        if (family == "hypercube") { need(1); return becurv::families::hypercube(parse_param(params[0])); }
        throw std::runtime_error("unknown family: " + family +
                                 " (known: path, cycle, star, star3-plus, paw, friendship, "
                                 "complete, hypercube)");
    }();
    std::string content = format == "graph6" ? becurv::encode_graph6(g) + "\n"
                                             : becurv::serialize_edge_list(g);
    write_output(out_path, content);
    return 0;
}

// ---- curvature -----------------------------------------------------------

int run_curvature(const std::string& file, const std::string& preset_str,
                  std::vector<std::string> dim_strs, const std::string& vertex,
                  bool with_witness, bool as_json) {
    WeightedGraph::Preset preset = parse_preset_or_throw(preset_str);
    WeightedGraph g = load_graph(file, preset);

    if (dim_strs.empty()) dim_strs.push_back("inf");
    std::vector<DimensionParameter> dims;
    for (const auto& s : dim_strs) {
        auto d = DimensionParameter::parse(s);
        if (!d) throw std::runtime_error("invalid dimension parameter: " + s +
                                         " (expected a positive real or 'inf')");
        dims.push_back(*d);
    }

    std::vector<std::string> targets;
    if (vertex.empty()) {
        targets = g.vertex_names();
    } else {
        if (!g.find(vertex)) throw std::runtime_error("no such vertex: " + vertex);
        targets.push_back(vertex);
    }

    if (as_json) {
        nlohmann::json records = nlohmann::json::array();
        for (const auto& name : targets) {
            for (const auto& d : dims) {
                auto res = becurv::curvature(g, name, d);
                nlohmann::json rec{{"vertex", name},
                                   {"N", d.to_string()},
                                   {"K", json_number_or_inf(res.k)},
                                   {"preset", becurv::preset_name(preset)}};
                if (with_witness && res.witness) rec["witness"] = witness_json(*res.witness);
                records.push_back(rec);
            }
        }
        std::cout << records.dump(2) << "\n";
        return 0;
    }

    std::cout << "curvature  preset=" << becurv::preset_name(preset) << "  dimensions=";
    for (std::size_t i = 0; i < dims.size(); ++i)
        std::cout << (i ? "," : "") << dims[i].to_string();
    std::cout << "\n";
    std::size_t name_w = 6;
    for (const auto& name : targets) name_w = std::max(name_w, name.size());
    std::cout << "vertex";
    for (std::size_t p = 6; p < name_w + 2; ++p) std::cout << ' ';
    std::cout << "N        K\n";
    for (const auto& name : targets) {
        for (const auto& d : dims) {
            auto res = becurv::curvature(g, name, d);
            std::cout << name;
            for (std::size_t p = name.size(); p < name_w + 2; ++p) std::cout << ' ';
            std::string ns = d.to_string();
            std::cout << ns;
            for (std::size_t p = ns.size(); p < 9; ++p) std::cout << ' ';
            std::cout << fmt12(res.k) << "\n";
            if (with_witness && res.witness) print_witness_lines(std::cout, *res.witness, "    ");
        }
    }
    return 0;
}

// ---- check-cd ------------------------------------------------------------

int run_check_cd(const std::string& file, const std::string& preset_str, double k,
                 const std::string& n_str, double tol) {
    WeightedGraph::Preset preset = parse_preset_or_throw(preset_str);
    auto n = DimensionParameter::parse(n_str);
    if (!n) throw std::runtime_error("invalid dimension parameter: " + n_str);
    WeightedGraph g = load_graph(file, preset);

    auto report = becurv::check_cd(g, k, *n, tol);
    std::cout << "check-cd  preset=" << becurv::preset_name(preset) << "  K=" << fmt12(k)
              << "  N=" << n->to_string() << "  tol=" << tol << "\n";
    if (report.holds) {
        std::cout << "HOLDS  (minimum curvature " << fmt12(report.min_curvature) << " at vertex "
                  << report.min_vertex << ")\n";
        return 0;
    }
    std::cout << "FAILS at vertex " << *report.violating_vertex << "  (curvature "
              << fmt12(report.min_curvature) << ", required >= " << fmt12(k) << ")\n";
    if (report.witness) print_witness_lines(std::cout, *report.witness, "  ");
    return 1;
}

// ---- structure -----------------------------------------------------------

int run_structure(const std::string& file, const std::string& vertex) {
    WeightedGraph g = load_graph(file, WeightedGraph::Preset::non_normalized);

    unsigned gi = becurv::girth(g);
    std::cout << "structure  vertices=" << g.order() << "  edges=" << g.num_edges() << "\n";
    std::cout << "girth: " << (gi == becurv::kInfiniteGirth ? "inf" : std::to_string(gi)) << "\n";
    std::cout << "triangle-free: " << (becurv::is_triangle_free(g) ? "yes" : "no") << "\n";
    std::cout << "C4-free: " << (becurv::is_c4_free(g) ? "yes" : "no") << "\n";

    std::vector<std::string> targets;
    if (vertex.empty()) {
        targets = g.vertex_names();
    } else {
        if (!g.find(vertex)) throw std::runtime_error("no such vertex: " + vertex);
        targets.push_back(vertex);
    }
    for (const auto& name : targets) {
        becurv::VertexId x = g.index_of(name);
        unsigned gx = becurv::girth_at(g, x);
        std::cout << "vertex " << name << ": girth_at="
                  << (gx == becurv::kInfiniteGirth ? "inf" : std::to_string(gx))
                  << "  components(r,s):";
        auto comps = becurv::punctured_ball_components(g, x);
        if (comps.empty()) std::cout << " none";
        for (const auto& comp : comps) {
            std::cout << " (" << comp.r << "," << comp.s << "){";
            for (std::size_t i = 0; i < comp.vertices.size(); ++i)
                std::cout << (i ? "," : "") << g.name_of(comp.vertices[i]);
            std::cout << "}";
        }
        std::cout << "\n";
    }
    return 0;
}

// ---- scan ----------------------------------------------------------------

struct ScanArgs {
    unsigned max_n = 7;
    bool c4_free = false;
    bool triangle_free = false;
    unsigned min_degree = 0;
    std::string preset_str = "non-normalized";
    std::string theorem;
    bool conjecture = false;
    bool as_json = false;
    bool preset_given = false;
    bool min_degree_given = false;
};

int run_scan(const ScanArgs& args) {
    unsigned threads = threads_from_env();

    if (!args.theorem.empty() && args.conjecture)
        throw std::runtime_error("--verify-theorem and --conjecture are mutually exclusive");

    if (args.conjecture) {
        auto report = becurv::conjecture_scan(args.max_n, threads);
        std::cout << (args.as_json ? report.to_json() + "\n" : report.to_table());
        return 0;
    }

    if (!args.theorem.empty()) {
        auto id = becurv::parse_theorem_id(args.theorem);
        if (!id)
            throw std::runtime_error("unknown theorem id: " + args.theorem +
                                     " (known: 2.2, 2.4, 2.5, 2.6)");
        // Explicitly provided constraints must agree with the theorem's
        // hypotheses; anything omitted is filled in automatically.
        auto uni = becurv::theorem_universe(*id, args.max_n);
        if (args.preset_given && parse_preset_or_throw(args.preset_str) != uni.preset)
            throw std::runtime_error(std::string("theorem ") + args.theorem +
                                     " is stated for the " + becurv::preset_name(uni.preset) +
                                     " laplacian");
        if (args.c4_free && !uni.c4_free)
            throw std::runtime_error("--c4-free does not match the theorem's universe");
        if (args.triangle_free && !uni.triangle_free)
            throw std::runtime_error("--triangle-free does not match the theorem's universe");
        if (args.min_degree_given && args.min_degree != uni.min_degree)
            throw std::runtime_error("--min-degree does not match the theorem's universe (" +
                                     std::to_string(uni.min_degree) + ")");
        auto report = becurv::verify_theorem(*id, args.max_n, threads);
        std::cout << (args.as_json ? report.to_json() + "\n" : report.to_table());
        return report.passed() ? 0 : 1;
    }

    becurv::EnumerationOptions opts;
    opts.n_max = args.max_n;
    opts.c4_free = args.c4_free;
    opts.triangle_free = args.triangle_free;
    opts.min_degree = args.min_degree;
    opts.preset = parse_preset_or_throw(args.preset_str);
    opts.threads = threads;
    auto report = becurv::scan_classification(opts);
    std::cout << (args.as_json ? report.to_json() + "\n" : report.to_table());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bakry-Emery curvature of locally finite weighted graphs: curvature tables, "
                 "CD(K,N) certification, and classification scans"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a named graph family");
    std::string gen_family;
    std::vector<std::string> gen_params;
    std::string gen_format = "edgelist";
    std::string gen_out;
    gen->add_option("family", gen_family, "path|cycle|star|star3-plus|paw|friendship|complete|hypercube")
        ->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("--format", gen_format, "output format")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->capture_default_str();
    gen->add_option("-o,--output", gen_out, "output file (default: stdout)");

    // curvature
    auto* curv = app.add_subcommand("curvature", "Per-vertex curvature K(G,x;N)");
    std::string curv_file, curv_preset = "non-normalized", curv_vertex;
    std::vector<std::string> curv_dims;
    bool curv_witness = false, curv_json = false;
    curv->add_option("file", curv_file, "graph file (edge list or graph6)")->required();
    curv->add_option("--laplacian", curv_preset, "normalized|non-normalized|custom")
        ->capture_default_str();
    curv->add_option("--dimension", curv_dims, "dimension N (positive real or 'inf'); repeatable");
    curv->add_option("--vertex", curv_vertex, "restrict to one vertex");
    curv->add_flag("--witness", curv_witness, "print the minimizing function");
    curv->add_flag("--json", curv_json, "JSON records instead of a table");

    // check-cd
    auto* cd = app.add_subcommand("check-cd", "Certify the curvature-dimension condition CD(K,N)");
    std::string cd_file, cd_preset = "non-normalized", cd_n = "inf";
    double cd_k = 0.0, cd_tol = 1e-9;
    cd->add_option("file", cd_file, "graph file (edge list or graph6)")->required();
    cd->add_option("--K", cd_k, "curvature lower bound")->required();
    cd->add_option("--N", cd_n, "dimension (positive real or 'inf')")->required();
    cd->add_option("--tol", cd_tol, "tolerance")->capture_default_str();
    cd->add_option("--laplacian", cd_preset, "normalized|non-normalized|custom")
        ->capture_default_str();

    // structure
    auto* st = app.add_subcommand("structure", "Girth, C4/triangle freeness, punctured 2-ball components");
    std::string st_file, st_vertex;
    st->add_option("file", st_file, "graph file (edge list or graph6)")->required();
    st->add_option("--vertex", st_vertex, "restrict to one vertex");

    // scan
    auto* sc = app.add_subcommand("scan", "Enumerate small graphs and test CD(0,inf)");
    ScanArgs sa;
    auto* sc_maxn = sc->add_option("--max-n", sa.max_n, "largest vertex count (<= 8)")
                        ->capture_default_str();
    (void)sc_maxn;
    sc->add_flag("--c4-free", sa.c4_free, "restrict to C4-free graphs");
    sc->add_flag("--triangle-free", sa.triangle_free, "restrict to triangle-free graphs");
    auto* sc_mind = sc->add_option("--min-degree", sa.min_degree, "minimum degree");
    auto* sc_lap = sc->add_option("--laplacian", sa.preset_str, "normalized|non-normalized")
                       ->capture_default_str();
    sc->add_option("--verify-theorem", sa.theorem, "compare against a classification list: 2.2|2.4|2.5|2.6");
    sc->add_flag("--conjecture", sa.conjecture, "triangle-free probe for induced cycles >= 5");
    sc->add_flag("--json", sa.as_json, "JSON report instead of a table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    sa.preset_given = sc_lap->count() > 0;
    sa.min_degree_given = sc_mind->count() > 0;

    try {
        if (app.got_subcommand(gen)) return run_generate(gen_family, gen_params, gen_format, gen_out);
        if (app.got_subcommand(curv))
            return run_curvature(curv_file, curv_preset, curv_dims, curv_vertex, curv_witness,
                                 curv_json);
        if (app.got_subcommand(cd)) return run_check_cd(cd_file, cd_preset, cd_k, cd_n, cd_tol);
        if (app.got_subcommand(st)) return run_structure(st_file, st_vertex);
        if (app.got_subcommand(sc)) return run_scan(sa);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;  // unreachable with require_subcommand(1)
}
