// Command-line front end: corpus emission, extensions, projections, cosine and
// heat evolution, scaling-limit ladders, and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input or config.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "membrane/corpus.hpp"
#include "membrane/csv.hpp"
#include "membrane/errors.hpp"
#include "membrane/evolution.hpp"
#include "membrane/extensions.hpp"
#include "membrane/projections.hpp"
#include "membrane/scaling.hpp"
#include "membrane/verify.hpp"

namespace {

using namespace membrane;

struct Options {
    double grid_L = 30.0;
    std::int64_t grid_n = 6001;
    double alpha = 1.0;
    double beta = 1.0;
    std::uint64_t seed = 1;
    std::string input;
    std::string out;
    std::string func = "gauss";
    std::string func2;
    std::string kind = "snapping";
    std::string mode = "cosine";
    std::string target = "c";
    std::string experiment = "projection";
    std::string ladder = "1,2,4,8,16,32,64";
    std::string t_set;
    std::string suite;
    std::string out_dir = "figures";
    double t = 1.0;
    double tol = 1e-3;
    bool list = false;
    bool grid_n_given = false;
};

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw MembraneError("empty numeric list: '" + s + "'");
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (double v : parse_doubles(s)) out.push_back(static_cast<int>(v));
    return out;
}

/// Corpus names may carry arguments: step(jL,jR), const(c).
SharpFunction make_corpus(const std::string& spec, const Grid& grid) {
    const auto open = spec.find('(');
    if (open == std::string::npos) return corpus_sharp(spec, grid);
    if (spec.back() != ')') throw MembraneError("malformed corpus spec: " + spec);
    const std::string name = spec.substr(0, open);
    const std::vector<double> args = parse_doubles(spec.substr(open + 1, spec.size() - open - 2));
    if (name == "step" && args.size() == 2) return step_sharp(grid, args[0], args[1]);
    if (name == "const" && args.size() == 1) return constant_sharp(grid, args[0]);
    throw MembraneError("malformed corpus spec: " + spec);
}

SharpFunction load_sharp(const Options& o, const Grid& grid) {
    if (!o.input.empty()) return read_sharp_csv_file(o.input);
    return make_corpus(o.func, grid);
}

EvolutionKind parse_kind(const std::string& s) {
    if (s == "free") return EvolutionKind::Free;
    if (s == "snapping") return EvolutionKind::Snapping;
    if (s == "perp") return EvolutionKind::Perp;
    if (s == "skew") return EvolutionKind::Skew;
    if (s == "weks") return EvolutionKind::Weks;
    throw MembraneError("unknown kind: " + s + " (free|snapping|perp|skew|weks)");
}

Evolution make_evolution(const Options& o) {
    const EvolutionKind k = parse_kind(o.kind);
    if (k == EvolutionKind::Free) return Evolution::free();
    return Evolution{k, MembraneParams(o.alpha, o.beta)};
}

std::ostream& open_out(std::ofstream& file, const Options& o) {
    if (o.out.empty() || o.out == "-") return std::cout;
    file.open(o.out);
    if (!file) throw MembraneError("cannot open for writing: " + o.out);
    return file;
}

// ------------------------------------------------------------------ commands

int cmd_corpus(const Options& o) {
    if (o.list) {
        for (const auto& n : corpus_names()) std::cout << n << "\n";
        return 0;
    }
    const Grid grid(o.grid_L, static_cast<int>(o.grid_n));
    std::ofstream file;
    write_sharp_csv(open_out(file, o), make_corpus(o.func, grid));
    return 0;
}

int cmd_extend(const Options& o) {
    const Grid grid(o.grid_L, static_cast<int>(o.grid_n));
    const SharpFunction f = load_sharp(o, grid);
    const MembraneParams params(o.alpha, o.beta);
    FunctionPair p = [&] {
        if (o.kind == "snapping") return extend_snapping(params, f);
        if (o.kind == "perp") return extend_perp(params, f);
        if (o.kind == "skew") return extend_skew(params, f);
        if (o.kind == "weks") return extend_weks(params, f);
        throw MembraneError("unknown extension kind: " + o.kind);
    }();
    std::ofstream file;
    write_pair_csv(open_out(file, o), p);
    return 0;
}

FunctionPair load_pair(const Options& o, const Grid& grid) {
    if (!o.input.empty()) return read_pair_csv_file(o.input);
    const std::string f2 = o.func2.empty() ? "expabs" : o.func2;
    return {line_from_sharp(make_corpus(o.func, grid), 1e300),
            line_from_sharp(make_corpus(f2, grid), 1e300)};
}

int cmd_project(const Options& o) {
    const Grid grid(o.grid_L, static_cast<int>(o.grid_n));
    const FunctionPair p = load_pair(o, grid);
    const MembraneParams params(o.alpha, o.beta);
    FunctionPair out = [&] {
        if (o.target == "c") return project_C(params, p);
        if (o.target == "d") return project_D(params, p);
        if (o.target == "c-skew") return project_C_skew(params, p);
        if (o.target == "d-weks") return project_D_weks(params, p);
        throw MembraneError("unknown projection target: " + o.target +
                            " (c|d|c-skew|d-weks)");
    }();
    std::ofstream file;
    write_pair_csv(open_out(file, o), out);
    return 0;
}

int cmd_evolve(const Options& o) {
    const Grid grid(o.grid_L, static_cast<int>(o.grid_n));
    const SharpFunction f = load_sharp(o, grid);
    const Evolution ev = make_evolution(o);
    SharpFunction u = (o.mode == "semigroup") ? semigroup_evolve(ev, o.t, f)
                      : (o.mode == "cosine")
                          ? cosine_evolve(ev, o.t, f)
                          : throw MembraneError("mode must be cosine or semigroup");
    std::ofstream file;
    write_sharp_csv(open_out(file, o), u);
    return 0;
}

Grid converge_grid(const Options& o, const MembraneParams& params, int n_max) {
    if (o.grid_n_given) return Grid(o.grid_L, static_cast<int>(o.grid_n));
    // Auto-refine the default grid until the ladder resolution guard holds.
    const double h_needed = 1.0 / (static_cast<double>(n_max) * params.sum());
    int half = static_cast<int>(o.grid_L) * 100;  // default h = 0.01
    const int needed = static_cast<int>(std::ceil(o.grid_L / h_needed));
    half = std::max(half, needed);
    return Grid(o.grid_L, 2 * half + 1);
}

int cmd_converge(const Options& o) {
    const MembraneParams params(o.alpha, o.beta);
    const std::vector<int> ladder = parse_ints(o.ladder);
    int guard_n = ladder.back();
    if (o.experiment == "semigroup") guard_n *= 2;
    const Grid grid = converge_grid(o, params, guard_n);
    std::vector<double> t_set =
        o.t_set.empty() ? std::vector<double>{0.25, 0.5, 1.0, 2.0, 4.0} : parse_doubles(o.t_set);

    std::mt19937_64 rng(o.seed);
    LadderReport rep = [&] {
        if (o.experiment == "cosine")
            return converge_cosine(params, load_sharp(o, grid), ladder, t_set);
        if (o.experiment == "semigroup")
            return converge_semigroup(params, load_sharp(o, grid), ladder, t_set);
        if (o.experiment == "perp")
            return converge_perp(params, load_sharp(o, grid), ladder, t_set);
        if (o.experiment == "projection") {
            const FunctionPair p = o.input.empty() && o.func == "random"
                                       ? random_pair(grid, rng)
                                       : load_pair(o, grid);
            return converge_projection(params, p, ladder);
        }
        throw MembraneError("unknown experiment: " + o.experiment +
                            " (cosine|semigroup|perp|projection)");
    }();

    std::ofstream file;
    write_ladder_csv(open_out(file, o), rep);
    std::cerr << "verdict: " << to_string(rep.verdict);
    if (rep.witness_t) std::cerr << " (witness t = " << *rep.witness_t << ")";
    if (rep.limit_error) std::cerr << " (limit error " << *rep.limit_error << ")";
    std::cerr << "\n";
    return 0;
}

int cmd_verify(const Options& o) {
    if (o.list) {
        for (const auto& n : suite_names()) std::cout << n << "\n";
        return 0;
    }
    VerifyOptions vo;
    vo.seed = o.seed;
    std::vector<SuiteResult> results;
    if (o.suite.empty() || o.suite == "all") {
        results = run_all_suites(vo);
    } else {
        if (!is_suite_name(o.suite))
            throw MembraneError("unknown suite: " + o.suite + " (see verify --list)");
        results.push_back(run_suite(o.suite, vo));
    }
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.detail << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

int cmd_figures(const Options& o) {
    namespace fs = std::filesystem;
    fs::create_directories(o.out_dir);
    const Grid grid(o.grid_L, static_cast<int>(o.grid_n));
    auto path = [&](const char* name) { return (fs::path(o.out_dir) / name).string(); };

    // Snapping extensions of the unit step, swept over alpha at beta = 1.
    {
        const SharpFunction f = corpus_sharp("step", grid);
        std::ofstream os(path("extension_alpha_sweep.csv"));
        const std::vector<double> alphas = {0.1, 0.5, 1.0, 2.0, 8.0};
        os << "x";
        for (double a : alphas) os << ",fl_alpha" << a << ",fr_alpha" << a;
        os << "\n";
        std::vector<FunctionPair> exts;
        for (double a : alphas) exts.push_back(extend_snapping(MembraneParams(a, 1.0), f));
        for (int k = 0; k < grid.n_points(); ++k) {
            os << grid.node(k);
            for (const auto& e : exts)
                os << "," << e.first.samples[static_cast<std::size_t>(k)] << ","
                   << e.second.samples[static_cast<std::size_t>(k)];
            os << "\n";
        }
    }
    // One snapping extension pair next to the input branches.
    {
        std::mt19937_64 rng(o.seed);
        const SharpFunction f = random_sharp(grid, rng);
        write_pair_csv_file(path("extension_pair.csv"),
                            extend_snapping(MembraneParams(o.alpha, o.beta), f));
        write_sharp_csv_file(path("extension_input.csv"), f);
    }
    // Ladder of scaled extensions against the skew limit extension.
    {
        const SharpFunction f = corpus_sharp("ratio", grid);
        const MembraneParams params(0.5, 0.5);
        std::ofstream os(path("skew_limit_ladder.csv"));
        os << "x,skew";
        const std::vector<int> ns = {1, 4, 16, 64};
        for (int n : ns) os << ",n" << n;
        os << "\n";
        const FunctionPair ref = extend_skew(params, f);
        std::vector<FunctionPair> exts;
        for (int n : ns)
            exts.push_back(extend_snapping(params.scaled(static_cast<double>(n)), f));
        for (int k = 0; k < grid.n_points(); ++k) {
            os << grid.node(k) << "," << ref.first.samples[static_cast<std::size_t>(k)];
            for (const auto& e : exts)
                os << "," << e.first.samples[static_cast<std::size_t>(k)];
            os << "\n";
        }
    }
    std::cout << "figure data written to " << o.out_dir << "\n";
    return 0;
}

// --------------------------------------------------------------------- wiring

std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::ifstream is(path);
    if (!is) throw MembraneError("cannot open config file: " + path);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw MembraneError("config line without '=': " + line);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerics for membrane transmission conditions: extensions, "
                 "complementary projections, cosine families, heat semigroups, "
                 "and skew-limit experiments"};
    app.require_subcommand(1);

    Options o;
    std::string config_path;
    app.add_option("--config", config_path, "flat key=value config file (flags win)");

    std::vector<CLI::App*> subs;
    auto add_common = [&](CLI::App* s) {
        s->add_option("--grid-L", o.grid_L, "grid half-width");
        s->add_option("--grid-n", o.grid_n, "number of grid nodes (odd)");
        s->add_option("--alpha", o.alpha, "left permeability");
        s->add_option("--beta", o.beta, "right permeability");
        s->add_option("--seed", o.seed, "seed for randomized corpora");
        s->add_option("--tol", o.tol, "tolerance override where applicable");
        s->add_option("--input", o.input, "input CSV path");
        s->add_option("--out", o.out, "output CSV path (default stdout)");
        subs.push_back(s);
        return s;
    };

    auto* c_corpus = add_common(app.add_subcommand("corpus", "emit a named test function"));
    c_corpus->add_option("--func", o.func, "corpus name, e.g. gauss or step(1,2)");
    c_corpus->add_flag("--list", o.list, "list corpus names");

    auto* c_extend = add_common(app.add_subcommand("extend", "extend a sharp function to a pair"));
    c_extend->add_option("--kind", o.kind, "snapping|perp|skew|weks");
    c_extend->add_option("--func", o.func, "corpus input when --input is absent");

    auto* c_project = add_common(app.add_subcommand("project", "project a pair onto a subspace"));
    c_project->add_option("--target", o.target, "c|d|c-skew|d-weks");
    c_project->add_option("--func", o.func, "corpus name for the first component");
    c_project->add_option("--func2", o.func2, "corpus name for the second component");

    auto* c_evolve = add_common(app.add_subcommand("evolve", "apply Cos(t) or e^{tA}"));
    c_evolve->add_option("--kind", o.kind, "free|snapping|perp|skew|weks");
    c_evolve->add_option("--mode", o.mode, "cosine|semigroup");
    c_evolve->add_option("--t", o.t, "time");
    c_evolve->add_option("--func", o.func, "corpus input when --input is absent");

    auto* c_converge = add_common(app.add_subcommand("converge", "run an n-ladder experiment"));
    c_converge->add_option("--experiment", o.experiment, "cosine|semigroup|perp|projection");
    c_converge->add_option("--ladder", o.ladder, "comma-separated rungs");
    c_converge->add_option("--t-set", o.t_set, "comma-separated times");
    c_converge->add_option("--func", o.func, "corpus input (or 'random' for projection)");
    c_converge->add_option("--func2", o.func2, "second component for projection input");

    auto* c_verify = add_common(app.add_subcommand("verify", "run verification suites"));
    c_verify->add_option("--suite", o.suite, "suite name or 'all'");
    c_verify->add_flag("--list", o.list, "list suite names");

    auto* c_figures = add_common(app.add_subcommand("figures", "emit plot data CSVs"));
    c_figures->add_option("--out-dir", o.out_dir, "output directory");

    try {
        app.parse(argc, argv);

        if (!config_path.empty()) {
            const auto kv = read_config(config_path);
            for (CLI::App* s : subs) {
                if (!s->parsed()) continue;
                for (const auto& [key, value] : kv) {
                    CLI::Option* opt = s->get_option_no_throw("--" + key);
                    if (opt != nullptr && opt->count() == 0) opt->add_result(value);
                }
                // re-run callbacks so config values land in the bound variables
                for (const auto& [key, value] : kv) {
                    CLI::Option* opt = s->get_option_no_throw("--" + key);
                    if (opt != nullptr) opt->run_callback();
                }
            }
        }
        o.grid_n_given = false;
        for (CLI::App* s : subs)
            if (s->parsed() && s->get_option_no_throw("--grid-n") != nullptr &&
                s->get_option_no_throw("--grid-n")->count() > 0)
                o.grid_n_given = true;

        if (c_corpus->parsed()) return cmd_corpus(o);
        if (c_extend->parsed()) return cmd_extend(o);
        if (c_project->parsed()) return cmd_project(o);
        if (c_evolve->parsed()) return cmd_evolve(o);
        if (c_converge->parsed()) return cmd_converge(o);
        if (c_verify->parsed()) return cmd_verify(o);
        if (c_figures->parsed()) return cmd_figures(o);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const MembraneError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
