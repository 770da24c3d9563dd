#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "potc/coloring.hpp"
#include "potc/generator.hpp"
#include "potc/io.hpp"
#include "potc/oracle.hpp"

namespace {

using namespace potc;

// Exit codes: 0 success/valid, 1 invalid input or verification failure,
// 2 not colorable / counterexample found, 3 budget exhausted,
// 4 internal invariant violation.
constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kNotColorable = 2;
constexpr int kBudget = 3;
constexpr int kInternal = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

Diagram load_valid_diagram(const std::string& path) {
    Diagram d = parse_diagram(read_file(path));
    ValidationReport rep = validate_diagram(d);
    if (!rep.valid) {
        for (const std::string& p : rep.problems) std::cerr << "invalid diagram: " << p << "\n";
        throw std::runtime_error("diagram failed validation");
    }
    return d;
}

ListAssignment load_lists(const std::string& lists_path, int uniform_k, const Graph& g) {
    if (!lists_path.empty() && uniform_k > 0)
        throw std::runtime_error("--lists and --uniform are mutually exclusive");
    if (!lists_path.empty()) {
        ListAssignment L = parse_lists(read_file(lists_path), g);
        if (!L.covers(g)) throw std::runtime_error("list file leaves elements without a list (add 'default <k>')");
        return L;
    }
    if (uniform_k > 0) return uniform_lists(g, uniform_k);
    throw std::runtime_error("provide --lists FILE or --uniform K");
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("PO_COLOR_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed PO_COLOR_BUDGET\n";
    }
    return 20'000'000ULL;
}

int cmd_color(const std::string& diagram_path, const std::string& lists_path, int uniform_k,
              const std::string& out_path, bool trace, bool force_oracle, std::uint64_t budget) {
    Diagram d = load_valid_diagram(diagram_path);
    Graph g = to_graph(d);
    ListAssignment L = load_lists(lists_path, uniform_k, g);

    EngineOptions opt;
    opt.force_oracle_when_undersized = force_oracle;
    opt.oracle_budget = budget;
    ColoringOutcome outcome = color_list_total(g, L, opt);

    switch (outcome.status) {
        case ColoringOutcome::Status::Success: {
            VerifyReport rep = verify_total_coloring(g, L, outcome.coloring);
            if (!rep.valid) {
                std::cerr << "internal error: produced coloring failed re-verification\n";
                return kInternal;
            }
            write_output(out_path, coloring_to_json(outcome.coloring, true, outcome.trace));
            if (trace) {
                std::cerr << "trace:";
                for (const TraceEntry& t : outcome.trace) std::cerr << " " << t.tag;
                std::cerr << "\n";
            }
            return kOk;
        }
        case ColoringOutcome::Status::UndersizedLists:
            std::cerr << outcome.message << " (use --force-oracle to attempt exhaustive search)\n";
            return kInvalid;
        case ColoringOutcome::Status::NotColorable:
            std::cerr << outcome.message << "\n";
            return kNotColorable;
        case ColoringOutcome::Status::BudgetExhausted:
            std::cerr << outcome.message << "\n";
            return kBudget;
        case ColoringOutcome::Status::NotReducible: {
            std::cerr << outcome.message << "\nirreducible vertices:";
            for (VertexId v : outcome.irreducible) std::cerr << " " << v;
            std::cerr << "\n";
            return kInternal;
        }
        case ColoringOutcome::Status::InternalError:
            std::cerr << outcome.message << "\n";
            return kInternal;
    }
    return kInternal;
}

int cmd_verify(const std::string& diagram_path, const std::string& lists_path, int uniform_k,
               const std::string& coloring_path) {
    Diagram d = load_valid_diagram(diagram_path);
    Graph g = to_graph(d);
    ListAssignment L = load_lists(lists_path, uniform_k, g);
    PartialColoring phi = coloring_from_json(read_file(coloring_path));
    VerifyReport rep = verify_total_coloring(g, L, phi);
    for (const Element& x : rep.missing) std::cout << "missing: " << x.to_string() << "\n";
    for (const auto& [a, b] : rep.conflicts)
        std::cout << "conflict: " << a.to_string() << " and " << b.to_string() << "\n";
    for (const Element& x : rep.off_list) std::cout << "off-list: " << x.to_string() << "\n";
    return rep.valid ? kOk : kInvalid;
}

int cmd_find_config(const std::string& diagram_path) {
    Diagram d = load_valid_diagram(diagram_path);
    Graph g = to_graph(d);
    nlohmann::json j;
    if (g.n_vertices() == 0 || g.min_degree() < 2) {
        j["reducible"] = "low-degree";
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::optional<Configuration> c = find_configuration(g);
    if (!c) {
        std::cerr << "no configuration found despite minimum degree 2 (input likely not pseudo-outerplanar)\n";
        return kNotColorable;
    }
    j["tag"] = to_string(c->tag);
    nlohmann::json b;
    for (const auto& [role, v] : c->bindings) b[role] = v;
    j["bindings"] = std::move(b);
    std::cout << j.dump(2) << "\n";
    return kOk;
}

int cmd_gen(const GenParams& params, const std::string& out_path) {
    Diagram d = gen_random_diagram(params);
    write_output(out_path, print_diagram(d));
    return kOk;
}

int cmd_enumerate(int n, bool min_deg2, const std::string& out_dir) {
    if (n > 9) {
        std::cerr << "enumeration cap is n <= 9\n";
        return kInvalid;
    }
    int idx = 0;
    enumerate_diagrams(n, min_deg2, [&](const Diagram& d) {
        std::string pod = print_diagram(d);
        if (out_dir.empty()) {
            // one record per line; ';' separates the POD lines
            std::string line;
            for (char ch : pod) line += (ch == '\n') ? ';' : ch;
            while (!line.empty() && line.back() == ';') line.pop_back();
            std::cout << line << "\n";
        } else {
            std::ostringstream name;
            name << out_dir << "/enum_" << n << "_" << idx << ".pod";
            write_output(name.str(), pod);
        }
        ++idx;
    });
    std::cerr << idx << " diagrams\n";
    return kOk;
}

int cmd_oracle_color(const std::string& diagram_path, const std::string& lists_path, int uniform_k,
                     const std::string& out_path, std::uint64_t budget) {
    Diagram d = load_valid_diagram(diagram_path);
    Graph g = to_graph(d);
    ListAssignment L = load_lists(lists_path, uniform_k, g);
    OracleResult r = brute_force_l_total(g, L, OracleBudget{budget, 0.0});
    nlohmann::json j;
    j["nodes"] = r.nodes;
    switch (r.status) {
        case OracleResult::Status::Found: {
            j["status"] = "found";
            std::cout << j.dump(2) << "\n";
            if (!out_path.empty()) write_output(out_path, coloring_to_json(r.coloring, true, {}));
            return kOk;
        }
        case OracleResult::Status::NotColorable:
            j["status"] = "not-colorable";
            std::cout << j.dump(2) << "\n";
            return kNotColorable;
        case OracleResult::Status::BudgetExhausted:
            j["status"] = "budget-exhausted";
            std::cout << j.dump(2) << "\n";
            return kBudget;
    }
    return kInternal;
}

int cmd_oracle_chi(const std::string& diagram_path, std::uint64_t budget) {
    Diagram d = load_valid_diagram(diagram_path);
    Graph g = to_graph(d);
    ChiResult r = total_chromatic_number(g, OracleBudget{budget, 0.0});
    nlohmann::json j;
    j["nodes"] = r.nodes;
    if (r.status == ChiResult::Status::BudgetExhausted) {
        j["status"] = "budget-exhausted";
        std::cout << j.dump(2) << "\n";
        return kBudget;
    }
    j["status"] = "ok";
    j["chi"] = r.chi;
    std::cout << j.dump(2) << "\n";
    return kOk;
}

int cmd_oracle_sample(const std::string& diagram_path, int k, int trials, int palette, std::uint64_t seed,
                      std::uint64_t budget) {
    Diagram d = load_valid_diagram(diagram_path);
    Graph g = to_graph(d);
    ChoosabilityResult r = sample_choosability(g, k, trials, palette, seed, OracleBudget{budget, 0.0});
    nlohmann::json j;
    switch (r.verdict) {
        case ChoosabilityResult::Verdict::NoCounterexampleFound:
            j["verdict"] = "no-counterexample-found";
            j["trials"] = trials;
            std::cout << j.dump(2) << "\n";
            return kOk;
        case ChoosabilityResult::Verdict::CounterexampleFound:
            j["verdict"] = "counterexample";
            j["trial"] = r.failing_trial;
            j["lists"] = print_lists(r.counterexample, palette);
            std::cout << j.dump(2) << "\n";
            return kNotColorable;
        case ChoosabilityResult::Verdict::BudgetExhausted:
            j["verdict"] = "budget-exhausted";
            j["trial"] = r.failing_trial;
            std::cout << j.dump(2) << "\n";
            return kBudget;
    }
    return kInternal;
}

int cmd_export_dot(const std::string& diagram_path, const std::string& coloring_path,
                   const std::string& out_path) {
    Diagram d = load_valid_diagram(diagram_path);
    std::optional<PartialColoring> phi;
    if (!coloring_path.empty()) phi = coloring_from_json(read_file(coloring_path));
    write_output(out_path, export_dot(d, phi ? &*phi : nullptr));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"list total coloring of pseudo-outerplanar graphs"};
    app.require_subcommand(1);

    std::string diagram_path, lists_path, coloring_path, out_path, out_dir;
    int uniform_k = 0;
    bool trace = false, force_oracle = false, min_deg2 = false;
    std::uint64_t budget = default_budget();
    std::uint64_t seed = 0;
    int n = 4, k = 6, trials = 100, palette = 9;
    GenParams gp;

    auto* color = app.add_subcommand("color", "color a diagram with the reduction engine");
    color->add_option("--diagram", diagram_path, "POD file")->required();
    color->add_option("--lists", lists_path, "LST file");
    color->add_option("--uniform", uniform_k, "uniform lists {1..K}");
    color->add_option("--out", out_path, "output JSON path ('-' for stdout)");
    color->add_flag("--trace", trace, "print the reduction tag sequence to stderr");
    color->add_flag("--force-oracle", force_oracle, "fall back to exhaustive search on undersized lists");
    color->add_option("--budget", budget, "oracle node budget");

    auto* verify = app.add_subcommand("verify", "verify a coloring JSON against a diagram and lists");
    verify->add_option("--diagram", diagram_path, "POD file")->required();
    verify->add_option("--lists", lists_path, "LST file");
    verify->add_option("--uniform", uniform_k, "uniform lists {1..K}");
    verify->add_option("--coloring", coloring_path, "coloring JSON")->required();

    auto* findc = app.add_subcommand("find-config", "locate a reducible configuration");
    findc->add_option("--diagram", diagram_path, "POD file")->required();

    auto* gen = app.add_subcommand("gen", "generate a random valid diagram");
    gen->add_option("--n", gp.n_vertices, "vertex count")->required();
    gen->add_option("--blocks", gp.n_blocks, "block count");
    gen->add_option("--chord-density", gp.chord_density, "chord density in [0,1]");
    gen->add_option("--crossing-density", gp.crossing_density, "crossing density in [0,1]");
    gen->add_option("--boundary-density", gp.boundary_edge_density, "boundary edge density in [0,1]");
    gen->add_flag("--min-degree-2", gp.ensure_min_degree_2, "repair to minimum degree 2");
    gen->add_option("--seed", gp.seed, "seed");
    gen->add_option("--out", out_path, "output POD path ('-' for stdout)");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate all single-block diagrams on n vertices");
    enumerate->add_option("--n", n, "boundary size (<= 9)")->required();
    enumerate->add_flag("--min-degree-2", min_deg2, "keep only diagrams with minimum degree 2");
    enumerate->add_option("--out-dir", out_dir, "write one POD file per diagram");

    auto* oracle = app.add_subcommand("oracle", "exact brute-force reference");
    oracle->require_subcommand(1);
    auto* ocolor = oracle->add_subcommand("color", "decide/construct an L-total coloring");
    ocolor->add_option("--diagram", diagram_path, "POD file")->required();
    ocolor->add_option("--lists", lists_path, "LST file");
    ocolor->add_option("--uniform", uniform_k, "uniform lists {1..K}");
    ocolor->add_option("--out", out_path, "coloring JSON output");
    ocolor->add_option("--budget", budget, "node budget");
    auto* ochi = oracle->add_subcommand("chi", "total chromatic number");
    ochi->add_option("--diagram", diagram_path, "POD file")->required();
    ochi->add_option("--budget", budget, "node budget");
    auto* osample = oracle->add_subcommand("sample", "sample k-lists hunting for a counterexample");
    osample->add_option("--diagram", diagram_path, "POD file")->required();
    osample->add_option("--k", k, "list size")->required();
    osample->add_option("--trials", trials, "number of sampled assignments");
    osample->add_option("--palette", palette, "palette size")->required();
    osample->add_option("--seed", seed, "base seed");
    osample->add_option("--budget", budget, "node budget per trial");

    auto* dot = app.add_subcommand("export-dot", "emit a DOT drawing with circular block layout");
    dot->add_option("--diagram", diagram_path, "POD file")->required();
    dot->add_option("--coloring", coloring_path, "coloring JSON to annotate");
    dot->add_option("--out", out_path, "output path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;  // help/version exit clean, misuse is invalid input
    }

    try {
        if (app.got_subcommand(color))
            return cmd_color(diagram_path, lists_path, uniform_k, out_path, trace, force_oracle, budget);
        if (app.got_subcommand(verify)) return cmd_verify(diagram_path, lists_path, uniform_k, coloring_path);
        if (app.got_subcommand(findc)) return cmd_find_config(diagram_path);
        if (app.got_subcommand(gen)) return cmd_gen(gp, out_path);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(n, min_deg2, out_dir);
        if (app.got_subcommand(oracle)) {
            if (oracle->got_subcommand(ocolor))
                return cmd_oracle_color(diagram_path, lists_path, uniform_k, out_path, budget);
            if (oracle->got_subcommand(ochi)) return cmd_oracle_chi(diagram_path, budget);
            if (oracle->got_subcommand(osample))
                return cmd_oracle_sample(diagram_path, k, trials, palette, seed, budget);
        }
        if (app.got_subcommand(dot)) return cmd_export_dot(diagram_path, coloring_path, out_path);
    } catch (const potc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kInvalid;
    } catch (const potc::InfeasibleParams& e) {
        std::cerr << "infeasible parameters: " << e.what() << "\n";
        return kInvalid;
    } catch (const potc::HypothesisViolation& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kInternal;
    } catch (const potc::InternalInvariantError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
