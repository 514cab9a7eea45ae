// linlay: build, verify, solve and draw linear graph layouts.
//
// Exit codes: 0 valid/SAT, 1 invalid/UNSAT, 2 usage error, 3 backend failure.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "linlay/bounds.hpp"
#include "linlay/constructions.hpp"
#include "linlay/deque_sim.hpp"
#include "linlay/layout_io.hpp"
#include "linlay/render.hpp"
#include "linlay/sat_layout.hpp"
#include "linlay/verify.hpp"

using json = nlohmann::json;
using namespace linlay;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBackend = 3;

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    std::vector<Edge> edges;
    int max_id = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        int u, v;
        if (ls >> u >> v) {
            edges.emplace_back(u, v);
            max_id = std::max({max_id, u, v});
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(max_id + 1, std::move(edges));
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

LayoutKind parse_kind_or_throw(const std::string& s) {
    auto k = parse_layout_kind(s);
    if (!k) throw CLI::ValidationError("--kind", "unknown kind '" + s + "'");
    return *k;
}

struct GraphChoice {
    int kn = 0;
    int knn = 0;
    std::string edges_file;

    Graph build() const {
        if (kn > 0) return Graph::complete(kn);
        if (knn > 0) return Graph::complete_bipartite(knn, knn);
        if (!edges_file.empty()) return load_edge_list(edges_file);
        throw CLI::ValidationError("graph", "give one of --kn, --knn or --edges");
    }
    std::string name() const {
        if (kn > 0) return "K_" + std::to_string(kn);
        if (knn > 0) return "K_{" + std::to_string(knn) + "," + std::to_string(knn) + "}";
        return edges_file;
    }
    bool vertex_transitive() const { return kn > 0 || knn > 0; }

    void attach(CLI::App* cmd) {
        cmd->add_option("--kn", kn, "complete graph K_n");
        cmd->add_option("--knn", knn, "complete bipartite graph K_{n,n}");
        cmd->add_option("--edges", edges_file, "edge list file, one 'u v' per line");
    }
};

int cmd_generate(const std::string& family, int n, const std::string& out) {
    LinearLayout layout;
    if (family == "kn-stack")
        layout = stack_layout_kn(n);
    else if (family == "kn-deque")
        layout = deque_layout_kn(n);
    else if (family == "kn-rique")
        layout = rique_layout_kn(n);
    else if (family == "knn-deque")
        layout = deque_layout_knn(n);
    else if (family == "knn-rique")
        layout = rique_layout_knn(n);
    else
        throw CLI::ValidationError("--family", "unknown family '" + family + "'");
    write_text(out, serialize_layout(layout));
    return kExitOk;
}

int cmd_verify(const std::string& path, bool quiet) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open layout: " + path);
    LinearLayout layout = parse_layout(in);
    VerificationReport report = validate_layout(layout);
    if (!quiet) std::cout << report.summary();
    return report.valid() ? kExitOk : kExitNegative;
}

int cmd_solve(const GraphChoice& gc, const std::string& kind_s, int pages, bool find_min,
              int max_pages, const std::string& solver_cmd, int timeout_s,
              const std::string& witness_out, const std::string& dimacs_out,
              const std::string& log_path) {
    Graph graph = gc.build();
    LayoutKind kind = parse_kind_or_throw(kind_s);
    SolverBackend backend = solver_cmd.empty() ? SolverBackend::from_environment()
                                               : SolverBackend::external(solver_cmd);
    backend.timeout_seconds = timeout_s;

    std::ofstream log;
    if (!log_path.empty()) log.open(log_path, std::ios::app);
    auto log_record = [&](int p, const std::string& status, double seconds,
                          const std::string& witness_path) {
        if (!log.is_open()) return;
        json rec{{"graph", gc.name()},
                 {"kind", std::string(to_string(kind))},
                 {"pages", p},
                 {"status", status},
                 {"seconds", seconds},
                 {"witness", witness_path}};
        log << rec.dump() << "\n";
    };

    int lo = find_min ? 1 : pages;
    int hi = find_min ? max_pages : pages;
    if (lo < 1) throw CLI::ValidationError("--pages", "need a positive page count");
    if (graph.num_vertices() >= 3 && !graph.edges().empty() &&
        (kind == LayoutKind::Deque || kind == LayoutKind::Rique)) {
        int bound = static_cast<int>(density_lower_bound(
            graph.num_vertices(), static_cast<std::int64_t>(graph.num_edges()), kind));
        if (bound > hi) {
            std::cerr << gc.name() << ": density bound already needs " << bound
                      << " page(s), more than " << hi << "\n";
            log_record(hi, "unsat", 0.0, "");
            return kExitNegative;
        }
        lo = std::max(lo, bound);
    }

    for (int p = lo; p <= hi; ++p) {
        EncodeOptions eopts;
        eopts.symmetry_breaking = gc.vertex_transitive();
        LayoutCnf enc = encode(graph, p, kind, eopts);
        if (!dimacs_out.empty()) write_text(dimacs_out, write_dimacs(enc.cnf));
        auto t0 = std::chrono::steady_clock::now();
        SolveResult res = enc.trivial_sat
                              ? SolveResult{SolveResult::Status::Sat, {}, {}}
                              : solve(enc.cnf, backend);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        switch (res.status) {
            case SolveResult::Status::Sat: {
                LinearLayout witness = decode(res.model, enc);
                std::string path = witness_out;
                write_text(path, serialize_layout(witness));
                log_record(p, "sat", secs, path.empty() ? "-" : path);
                std::cerr << gc.name() << " admits a " << p << "-page "
                          << to_string(kind) << " layout\n";
                return kExitOk;
            }
            case SolveResult::Status::Unsat:
                log_record(p, "unsat", secs, "");
                if (!find_min || p == hi) {
                    std::cerr << gc.name() << ": no " << p << "-page " << to_string(kind)
                              << " layout\n";
                    if (find_min)
                        std::cerr << "(no layout up to " << hi << " pages)\n";
                    return kExitNegative;
                }
                break;
            case SolveResult::Status::Unknown:
                log_record(p, "unknown", secs, "");
                std::cerr << "solver backend failed at p=" << p << ": " << res.diagnostics
                          << "\n";
                return kExitBackend;
        }
    }
    return kExitNegative;
}

int cmd_exact(const GraphChoice& gc, const std::string& kind_s, int max_pages) {
    Graph graph = gc.build();
    LayoutKind kind = parse_kind_or_throw(kind_s);
    ExactSearchOptions opts;
    opts.fix_first_vertex = gc.kn > 0;  // complete graphs are vertex-transitive
    auto result = exact_page_number(graph, kind, max_pages, opts);
    json out{{"graph", gc.name()},
             {"kind", std::string(to_string(kind))},
             {"max_pages", max_pages}};
    if (result)
        out["pages"] = *result;
    else
        out["pages"] = nullptr;
    std::cout << out.dump(2) << "\n";
    return result ? kExitOk : kExitNegative;
}

int cmd_bounds(const std::string& family, const std::string& kind_s, int n) {
    LayoutKind kind = parse_kind_or_throw(kind_s);
    std::int64_t m;
    if (family == "kn")
        m = static_cast<std::int64_t>(n) * (n - 1) / 2;
    else if (family == "knn")
        m = static_cast<std::int64_t>(n) * n;
    else
        throw CLI::ValidationError("--family", "family must be kn or knn");
    int vertices = family == "kn" ? n : 2 * n;
    BoundsReport rep = bounds_report(vertices, m, kind);
    json out{{"family", family},
             {"n", n},
             {"vertices", rep.n},
             {"edges", rep.m},
             {"kind", std::string(to_string(kind))},
             {"max_edges_one_page", rep.max_edges_one_page},
             {"lower_bound_pages", rep.lower_bound_pages},
             {"identity_checked", rep.identity_checked}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_render(const std::string& path, const std::string& mode, int cell,
               const std::string& out) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open layout: " + path);
    LinearLayout layout = parse_layout(in);
    RenderSpec spec;
    spec.cell = cell;
    if (mode == "grid")
        spec.mode = RenderSpec::Mode::Grid;
    else if (mode == "arcs")
        spec.mode = RenderSpec::Mode::Arcs;
    else
        throw CLI::ValidationError("--mode", "mode must be grid or arcs");
    write_text(out, render_svg(layout, spec));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear layouts: constructions, validation, SAT search, rendering"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "emit a constructed layout");
    std::string gen_family, gen_out = "-";
    int gen_n = 0;
    gen->add_option("--family", gen_family,
                    "kn-stack | kn-deque | kn-rique | knn-deque | knn-rique")
        ->required();
    gen->add_option("--n", gen_n, "size parameter n")->required();
    gen->add_option("--out", gen_out, "output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "validate a layout file");
    std::string ver_path;
    bool ver_quiet = false;
    ver->add_option("file", ver_path, "layout file")->required();
    ver->add_flag("--quiet", ver_quiet, "suppress the report text");

    auto* sol = app.add_subcommand("solve", "decide page counts via SAT");
    GraphChoice sol_graph;
    sol_graph.attach(sol);
    std::string sol_kind = "deque", sol_cmd, sol_witness, sol_dimacs, sol_log;
    int sol_pages = 0, sol_max = 12, sol_timeout = 0;
    bool sol_min = false;
    sol->add_option("--kind", sol_kind, "stack | queue | rique | deque");
    sol->add_option("--pages", sol_pages, "test this exact page count");
    sol->add_flag("--min", sol_min, "search the least feasible page count");
    sol->add_option("--max-pages", sol_max, "upper limit for --min (default 12)");
    sol->add_option("--solver", sol_cmd,
                    "external solver command, '{cnf}' replaced by the DIMACS path "
                    "(default: LINLAY_SAT_CMD or the builtin solver)");
    sol->add_option("--timeout", sol_timeout, "external solver timeout in seconds");
    sol->add_option("--witness", sol_witness, "write the decoded layout here");
    sol->add_option("--dimacs", sol_dimacs, "also dump the CNF to this file");
    sol->add_option("--log", sol_log, "append JSON-lines records per solved instance");

    auto* exa = app.add_subcommand("exact", "exhaustive page number on tiny graphs");
    GraphChoice exa_graph;
    exa_graph.attach(exa);
    std::string exa_kind = "deque";
    int exa_max = 4;
    exa->add_option("--kind", exa_kind, "stack | queue | rique | deque");
    exa->add_option("--max-pages", exa_max, "search limit (default 4)");

    auto* bnd = app.add_subcommand("bounds", "density bounds as JSON");
    std::string bnd_family = "kn", bnd_kind = "deque";
    int bnd_n = 0;
    bnd->add_option("--family", bnd_family, "kn | knn");
    bnd->add_option("--kind", bnd_kind, "deque | rique");
    bnd->add_option("--n", bnd_n, "size parameter n")->required();

    auto* ren = app.add_subcommand("render", "draw a layout file as SVG");
    std::string ren_path, ren_mode = "grid", ren_out = "-";
    int ren_cell = 18;
    ren->add_option("file", ren_path, "layout file")->required();
    ren->add_option("--mode", ren_mode, "grid | arcs (default grid)");
    ren->add_option("--cell", ren_cell, "cell size in pixels");
    ren->add_option("--out", ren_out, "output SVG file (default stdout)");

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return cmd_generate(gen_family, gen_n, gen_out);
        if (ver->parsed()) return cmd_verify(ver_path, ver_quiet);
        if (sol->parsed()) {
            if (!sol_min && sol_pages < 1)
                throw CLI::ValidationError("--pages", "give --pages or --min");
            return cmd_solve(sol_graph, sol_kind, sol_pages, sol_min, sol_max, sol_cmd,
                             sol_timeout, sol_witness, sol_dimacs, sol_log);
        }
        if (exa->parsed()) return cmd_exact(exa_graph, exa_kind, exa_max);
        if (bnd->parsed()) return cmd_bounds(bnd_family, bnd_kind, bnd_n);
        if (ren->parsed()) return cmd_render(ren_path, ren_mode, ren_cell, ren_out);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    } catch (const UnsupportedSizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const LayoutParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBackend;
    }
}
