// Command-line front end over the C API: solve, gen, validate, bench.
//
// Exit codes: 0 success (or decision Yes), 2 decision No, 64 unreadable or
// malformed input (also bad usage), 65 instance unusable for the requested
// algorithm, 70 exhausted budgets or internal failures, 1 failed validate or
// bench checks. stdout stays deterministic for identical instance + flags;
// wall times go to stderr (solve) or the CSV time column (bench).

#include "rct.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitNo = 2;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 64;
constexpr int kExitMismatch = 65;
constexpr int kExitResource = 70;

struct InstancePtr {
    rct_instance* p = nullptr;
    ~InstancePtr() { rct_instance_free(p); }
};

struct DecompPtr {
    rct_decomposition* p = nullptr;
    ~DecompPtr() { rct_decomposition_free(p); }
};

struct SolutionPtr {
    rct_solution* p = nullptr;
    ~SolutionPtr() { rct_solution_free(p); }
};

struct OptionsPtr {
    rct_solve_options* p = nullptr;
    OptionsPtr() : p(rct_solve_options_new()) {}
    ~OptionsPtr() { rct_solve_options_free(p); }
};

struct ErrMsg {
    char* p = nullptr;
    ~ErrMsg() { reset(); }
    void reset() {
        rct_string_free(p);
        p = nullptr;
    }
    std::string str() const { return p ? p : "unknown error"; }
};

int exit_for_status(int rc) {
    switch (rc) {
    case RCT_OK:
        return 0;
    case RCT_ERR_PARSE:
        return kExitInput;
    case RCT_ERR_INVALID_ARGUMENT:
    case RCT_ERR_PRECONDITION:
    case RCT_ERR_NOT_CACTUS:
        return kExitMismatch;
    default:
        return kExitResource;
    }
}

std::optional<std::string> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit_json(const ordered_json& j) { std::cout << j.dump() << "\n"; }

// Loads the instance named on the command line; any failure is an input
// error (exit 64) with the reason on stderr.
int load_instance(const std::string& path, InstancePtr& inst) {
    ErrMsg err;
    int rc = rct_instance_read_file(path.c_str(), &inst.p, &err.p);
    if (rc != RCT_OK) {
        std::cerr << "error: " << path << ": " << err.str() << "\n";
        return kExitInput;
    }
    return 0;
}

void append_instance_summary(ordered_json& j, const std::string& path,
                             const rct_instance* inst) {
    j["file"] = path;
    j["n"] = rct_instance_num_vertices(inst);
    j["m"] = rct_instance_num_edges(inst);
    j["colors"] = rct_instance_num_colors(inst);
    j["max_degree"] = rct_instance_max_degree(inst);
    j["class"] = rct_instance_class(inst);
}

struct SolveArgs {
    std::string instance_path;
    std::string algo = "auto";
    std::optional<std::uint64_t> decision;
    std::string td_path;
    std::uint64_t max_trees = 0;
    bool json_only = false;
};

int cmd_solve(const SolveArgs& a) {
    InstancePtr inst;
    if (int rc = load_instance(a.instance_path, inst)) return rc;

    DecompPtr td;
    if (!a.td_path.empty()) {
        ErrMsg err;
        int rc = rct_decomposition_read_file(a.td_path.c_str(), &td.p, &err.p);
        if (rc != RCT_OK) {
            std::cerr << "error: " << a.td_path << ": " << err.str() << "\n";
            return kExitInput;
        }
        err.reset();
        rc = rct_decomposition_validate(inst.p, td.p, &err.p);
        if (rc != RCT_OK) {
            std::cerr << "error: decomposition does not fit the instance: " << err.str()
                      << "\n";
            return kExitMismatch;
        }
    }

    OptionsPtr opts;
    if (!opts.p) {
        std::cerr << "error: out of memory\n";
        return kExitResource;
    }
    if (rct_solve_options_set_algo(opts.p, a.algo.c_str()) != RCT_OK) {
        std::cerr << "error: unknown algorithm '" << a.algo << "'\n";
        return kExitInput;
    }
    if (a.decision) rct_solve_options_set_decision(opts.p, *a.decision);
    if (td.p) rct_solve_options_set_decomposition(opts.p, td.p);
    if (a.max_trees) {
        // The caller picked the tree budget as the resource axis; lift the
        // default step budget out of the way.
        rct_solve_options_set_max_trees(opts.p, a.max_trees);
        rct_solve_options_set_max_operations(opts.p, UINT64_MAX);
    }

    SolutionPtr sol;
    ErrMsg err;
    auto t0 = std::chrono::steady_clock::now();
    int rc = rct_solve(inst.p, opts.p, &sol.p, &err.p);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (rc != RCT_OK) {
        std::cerr << "error: " << err.str() << "\n";
        return exit_for_status(rc);
    }

    bool yes = rct_solution_yes(sol.p) != 0;
    ordered_json j;
    j["command"] = "solve";
    append_instance_summary(j, a.instance_path, inst.p);
    j["algorithm"] = rct_solution_algorithm(sol.p);
    j["selection"] = a.algo == "auto" ? "auto" : "forced";
    if (a.decision) {
        j["mode"] = "decision";
        j["k"] = *a.decision;
        j["answer"] = yes ? "yes" : "no";
    } else {
        j["mode"] = "minimize";
        j["opt"] = rct_solution_opt(sol.p);
    }
    std::vector<int> witness;
    for (int32_t i = 0; i < rct_solution_tree_size(sol.p); ++i)
        witness.push_back(rct_solution_tree_edge(sol.p, i));
    if (yes) j["witness"] = witness;
    j["width"] = rct_solution_width(sol.p);
    j["trees_examined"] = rct_solution_trees_examined(sol.p);
    j["sat_probes"] = rct_solution_sat_probes(sol.p);
    j["max_table"] = rct_solution_max_table(sol.p);

    if (!a.json_only) {
        std::cout << "instance: " << a.instance_path << "\n";
        std::cout << "graph: n=" << j["n"] << " m=" << j["m"] << " colors=" << j["colors"]
                  << " max-degree=" << j["max_degree"]
                  << " class=" << j["class"].get<std::string>() << "\n";
        std::cout << "algorithm: " << j["algorithm"].get<std::string>() << " ("
                  << j["selection"].get<std::string>() << ")\n";
        if (a.decision) {
            std::cout << "decision: k=" << *a.decision << " answer=" << (yes ? "yes" : "no")
                      << "\n";
        } else {
            std::cout << "opt: " << rct_solution_opt(sol.p) << "\n";
        }
        if (yes) {
            std::cout << "witness:";
            for (int e : witness) std::cout << ' ' << e;
            std::cout << "\n";
        }
    }
    emit_json(j);
    std::cerr << "time_ms: " << ms << "\n";
    return !a.decision || yes ? 0 : kExitNo;
}

struct GenArgs {
    std::string reduction;
    std::string source_path;
    std::string out_path;
    int n = 0;
    bool n_set = false;
    double cycle_prob = 0.35;
    int colors = 8;
    std::uint64_t max_cost = 20;
    std::uint64_t seed = 0;
    bool json_only = false;
};

int cmd_gen(const GenArgs& a) {
    InstancePtr inst;
    ErrMsg err;
    int rc;

    if (a.reduction == "random-cactus") {
        if (!a.n_set) {
            std::cerr << "error: random-cactus needs --n\n";
            return kExitInput;
        }
        rc = rct_gen_random_cactus(a.n, a.cycle_prob, a.colors, a.max_cost, a.seed,
                                   &inst.p, &err.p);
    } else {
        if (a.source_path.empty()) {
            std::cerr << "error: reduction '" << a.reduction << "' needs a source file\n";
            return kExitInput;
        }
        auto text = slurp(a.source_path);
        if (!text) {
            std::cerr << "error: cannot open '" << a.source_path << "'\n";
            return kExitInput;
        }
        if (a.reduction == "3sat-outerplanar")
            rc = rct_gen_outerplanar_from_3sat(text->c_str(), &inst.p, &err.p);
        else if (a.reduction == "3sat-deg3")
            rc = rct_gen_degree3_from_3sat(text->c_str(), &inst.p, &err.p);
        else if (a.reduction == "partition")
            rc = rct_gen_planar_from_partition(text->c_str(), &inst.p, &err.p);
        else if (a.reduction == "ubp")
            rc = rct_gen_from_unary_binpacking(text->c_str(), &inst.p, &err.p);
        else {
            std::cerr << "error: unknown reduction '" << a.reduction << "'\n";
            return kExitInput;
        }
    }
    if (rc != RCT_OK) {
        std::cerr << "error: " << err.str() << "\n";
        return exit_for_status(rc);
    }

    if (a.out_path.empty()) {
        // The instance text is the whole output, ready for redirection.
        char* text = nullptr;
        err.reset();
        rc = rct_instance_to_text(inst.p, &text, &err.p);
        if (rc != RCT_OK) {
            std::cerr << "error: " << err.str() << "\n";
            return exit_for_status(rc);
        }
        std::cout << text;
        rct_string_free(text);
        return 0;
    }

    err.reset();
    rc = rct_instance_write_file(inst.p, a.out_path.c_str(), &err.p);
    if (rc != RCT_OK) {
        std::cerr << "error: " << err.str() << "\n";
        return exit_for_status(rc);
    }

    ordered_json j;
    j["command"] = "gen";
    j["reduction"] = a.reduction;
    append_instance_summary(j, a.out_path, inst.p);
    if (rct_instance_has_budget(inst.p))
        j["budget"] = rct_instance_budget(inst.p);
    else
        j["budget"] = nullptr;
    if (!a.json_only) {
        std::cout << "wrote " << a.out_path << ": n=" << j["n"] << " m=" << j["m"]
                  << " colors=" << j["colors"];
        if (rct_instance_has_budget(inst.p))
            std::cout << " budget=" << rct_instance_budget(inst.p);
        std::cout << "\n";
    }
    emit_json(j);
    return 0;
}

struct ValidateArgs {
    std::string instance_path;
    std::string td_path;
    bool json_only = false;
};

int cmd_validate(const ValidateArgs& a) {
    ordered_json j;
    j["command"] = "validate";
    j["file"] = a.instance_path;
    bool hard_fail = false;

    auto text = slurp(a.instance_path);
    InstancePtr inst;
    std::string parse_msg;
    bool parsed = false;
    bool symmetric = true;
    if (!text) {
        parse_msg = "cannot open '" + a.instance_path + "'";
    } else {
        ErrMsg err;
        int rc = rct_instance_parse(text->c_str(), &inst.p, &err.p);
        parsed = rc == RCT_OK;
        if (!parsed) {
            parse_msg = err.str();
            symmetric = parse_msg.find("symmetr") == std::string::npos;
        }
    }

    // Symmetry failures parse structurally but break the cost contract;
    // report them as their own check.
    bool format_ok = parsed || !symmetric;
    j["format"] = format_ok;
    j["symmetry"] = symmetric;
    if (!a.json_only) {
        std::cout << "format: " << (format_ok ? "ok" : "FAILED " + parse_msg) << "\n";
        std::cout << "symmetry: " << (symmetric ? "ok" : "FAILED " + parse_msg) << "\n";
    }
    if (!parsed) {
        hard_fail = true;
        j["pass"] = false;
        emit_json(j);
        return kExitCheckFailed;
    }

    bool connected = rct_instance_is_connected(inst.p) != 0;
    bool cactus = rct_instance_is_cactus(inst.p) != 0;
    bool triangle = rct_instance_satisfies_triangle_inequality(inst.p) != 0;
    j["n"] = rct_instance_num_vertices(inst.p);
    j["m"] = rct_instance_num_edges(inst.p);
    j["colors"] = rct_instance_num_colors(inst.p);
    j["max_degree"] = rct_instance_max_degree(inst.p);
    j["class"] = rct_instance_class(inst.p);
    j["connected"] = connected;
    j["cactus"] = cactus;
    j["triangle_inequality"] = triangle;
    if (rct_instance_has_budget(inst.p))
        j["budget"] = rct_instance_budget(inst.p);
    else
        j["budget"] = nullptr;

    if (!a.json_only) {
        std::cout << "graph: n=" << j["n"] << " m=" << j["m"] << " colors=" << j["colors"]
                  << " max-degree=" << j["max_degree"]
                  << " class=" << j["class"].get<std::string>() << "\n";
        std::cout << "connected: " << (connected ? "yes" : "no") << "\n";
        std::cout << "cactus: " << (cactus ? "yes" : "no") << "\n";
        std::cout << "triangle-inequality: " << (triangle ? "yes" : "no") << "\n";
        if (rct_instance_has_budget(inst.p))
            std::cout << "budget: " << rct_instance_budget(inst.p) << "\n";
        else
            std::cout << "budget: none\n";
    }

    if (!a.td_path.empty()) {
        DecompPtr td;
        ErrMsg err;
        int rc = rct_decomposition_read_file(a.td_path.c_str(), &td.p, &err.p);
        if (rc != RCT_OK) {
            hard_fail = true;
            j["decomposition"] = "unreadable";
            if (!a.json_only)
                std::cout << "decomposition: FAILED " << err.str() << "\n";
        } else {
            err.reset();
            rc = rct_decomposition_validate(inst.p, td.p, &err.p);
            if (rc == RCT_OK) {
                j["decomposition"] = "ok";
                j["width"] = rct_decomposition_width(td.p);
                if (!a.json_only)
                    std::cout << "decomposition: ok width=" << rct_decomposition_width(td.p)
                              << "\n";
            } else {
                hard_fail = true;
                j["decomposition"] = "invalid";
                if (!a.json_only)
                    std::cout << "decomposition: FAILED " << err.str() << "\n";
            }
        }
    }

    j["pass"] = !hard_fail;
    emit_json(j);
    return hard_fail ? kExitCheckFailed : 0;
}

struct BenchArgs {
    std::string dir;
    bool json_only = false;
};

int cmd_bench(const BenchArgs& a) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(a.dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".rct")
            files.push_back(entry.path().string());
    }
    if (ec) {
        std::cerr << "error: cannot read directory '" << a.dir << "': " << ec.message()
                  << "\n";
        return kExitInput;
    }
    std::sort(files.begin(), files.end());

    bool agreement = true;
    int failures = 0;
    std::size_t rows = 0;
    if (!a.json_only) std::cout << "instance,algo,opt,time_ms\n";

    for (const auto& file : files) {
        InstancePtr inst;
        ErrMsg err;
        if (rct_instance_read_file(file.c_str(), &inst.p, &err.p) != RCT_OK) {
            std::cerr << "error: " << file << ": " << err.str() << "\n";
            ++failures;
            continue;
        }

        std::vector<std::string> algos = {"brute"};
        if (rct_instance_is_cactus(inst.p)) algos.push_back("cactus");
        algos.push_back("twdp");

        std::optional<std::uint64_t> agreed;
        int solved = 0;
        for (const auto& algo : algos) {
            OptionsPtr opts;
            if (!opts.p || rct_solve_options_set_algo(opts.p, algo.c_str()) != RCT_OK)
                continue;
            SolutionPtr sol;
            ErrMsg serr;
            auto t0 = std::chrono::steady_clock::now();
            int rc = rct_solve(inst.p, opts.p, &sol.p, &serr.p);
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            if (rc != RCT_OK) {
                std::cerr << "note: " << file << " [" << algo << "]: " << serr.str()
                          << "\n";
                continue;
            }
            std::uint64_t opt = rct_solution_opt(sol.p);
            if (!a.json_only)
                std::cout << file << ',' << algo << ',' << opt << ',' << ms << "\n";
            ++rows;
            ++solved;
            if (!agreed) {
                agreed = opt;
            } else if (*agreed != opt) {
                agreement = false;
                std::cerr << "disagreement: " << file << " [" << algo << "] opt " << opt
                          << " vs " << *agreed << "\n";
            }
        }
        if (solved == 0) {
            std::cerr << "error: " << file << ": no algorithm produced a result\n";
            ++failures;
        }
    }

    ordered_json j;
    j["command"] = "bench";
    j["dir"] = a.dir;
    j["instances"] = files.size();
    j["rows"] = rows;
    j["agreement"] = agreement;
    j["failures"] = failures;
    emit_json(j);
    return agreement && failures == 0 ? 0 : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers for minimum reload-cost diameter spanning trees"};
    app.require_subcommand(1);

    SolveArgs sa;
    CLI::App* solve = app.add_subcommand("solve", "solve one instance file");
    solve->add_option("instance", sa.instance_path, "instance file")->required();
    solve->add_option("--algo", sa.algo, "auto|brute|cactus|twdp")
        ->check(CLI::IsMember({"auto", "brute", "cactus", "twdp"}))
        ->capture_default_str();
    CLI::Option* dec = solve->add_option("--decision", "decide diameter <= k");
    solve->add_option("--td", sa.td_path, "tree decomposition file for the DP solver");
    solve->add_option("--max-trees", sa.max_trees,
                      "abort brute force after this many spanning trees");
    solve->add_flag("--json", sa.json_only, "print only the JSON summary line");

    GenArgs ga;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("reduction", ga.reduction,
                    "3sat-outerplanar|3sat-deg3|partition|ubp|random-cactus")
        ->required()
        ->check(CLI::IsMember(
            {"3sat-outerplanar", "3sat-deg3", "partition", "ubp", "random-cactus"}));
    gen->add_option("source", ga.source_path, "source file for the file-based reductions");
    gen->add_option("-o,--out", ga.out_path, "output instance file (stdout when absent)");
    CLI::Option* gn = gen->add_option("--n", ga.n, "random-cactus: vertex count");
    gen->add_option("--cycle-prob", ga.cycle_prob, "random-cactus: cycle attachment bias")
        ->capture_default_str();
    gen->add_option("--colors", ga.colors, "random-cactus: palette size")
        ->capture_default_str();
    gen->add_option("--max-cost", ga.max_cost, "random-cactus: cost table bound")
        ->capture_default_str();
    gen->add_option("--seed", ga.seed, "random-cactus: RNG seed")->capture_default_str();
    gen->add_flag("--json", ga.json_only, "print only the JSON summary line");

    ValidateArgs va;
    CLI::App* validate = app.add_subcommand("validate", "check an instance file");
    validate->add_option("instance", va.instance_path, "instance file")->required();
    validate->add_option("decomposition", va.td_path, "optional decomposition file");
    validate->add_flag("--json", va.json_only, "print only the JSON summary line");

    BenchArgs ba;
    CLI::App* bench = app.add_subcommand("bench", "cross-solver agreement over a directory");
    bench->add_option("dir", ba.dir, "directory of .rct instances")->required();
    bench->add_flag("--json", ba.json_only, "print only the JSON summary line");

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) {
        if (dec->count()) sa.decision = dec->as<std::uint64_t>();
        return cmd_solve(sa);
    }
    if (gen->parsed()) {
        ga.n_set = gn->count() > 0;
        return cmd_gen(ga);
    }
    if (validate->parsed()) return cmd_validate(va);
    if (bench->parsed()) return cmd_bench(ba);
    return kExitInput;
}
