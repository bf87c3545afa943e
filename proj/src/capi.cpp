#include "rct.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>

#include "rct/decomposition.hpp"
#include "rct/generators.hpp"
#include "rct/graph.hpp"
#include "rct/instance_io.hpp"
#include "rct/solve.hpp"
#include "rct/types.hpp"

struct rct_instance {
    rct::Instance inst;
    explicit rct_instance(rct::Instance i) : inst(std::move(i)) {}
};

struct rct_decomposition {
    rct::TreeDecomposition td;
};

struct rct_solve_options {
    rct::SolveOptions opts;
    const rct_decomposition* td = nullptr; // borrowed
};

struct rct_solution {
    rct::SolveResult res;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void clear_err(char** errmsg) {
    if (errmsg) *errmsg = nullptr;
}

void set_err(char** errmsg, const char* msg) {
    if (errmsg) *errmsg = dup_string(msg);
}

int bad_arg(char** errmsg, const char* msg) {
    set_err(errmsg, msg);
    return RCT_ERR_INVALID_ARGUMENT;
}

// Runs fn, translating the exception hierarchy into status codes. errmsg is
// cleared first so callers can rely on NULL-on-success.
template <typename Fn>
int guarded(char** errmsg, Fn&& fn) {
    clear_err(errmsg);
    try {
        fn();
        return RCT_OK;
    } catch (const rct::ParseError& e) {
        set_err(errmsg, e.what());
        return RCT_ERR_PARSE;
    } catch (const rct::NotACactusError& e) {
        set_err(errmsg, e.what());
        return RCT_ERR_NOT_CACTUS;
    } catch (const rct::PreconditionError& e) {
        set_err(errmsg, e.what());
        return RCT_ERR_PRECONDITION;
    } catch (const rct::InvalidArgument& e) {
        set_err(errmsg, e.what());
        return RCT_ERR_INVALID_ARGUMENT;
    } catch (const rct::ResourceLimitError& e) {
        set_err(errmsg, e.what());
        return RCT_ERR_RESOURCE;
    } catch (const rct::OverflowError& e) {
        set_err(errmsg, e.what());
        return RCT_ERR_OVERFLOW;
    } catch (const rct::Error& e) {
        set_err(errmsg, e.what());
        return RCT_ERR_INTERNAL;
    } catch (const std::bad_alloc&) {
        set_err(errmsg, "out of memory");
        return RCT_ERR_RESOURCE;
    } catch (const std::exception& e) {
        set_err(errmsg, e.what());
        return RCT_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* rct_version(void) { return "0.1.0"; }

const char* rct_status_name(int status) {
    switch (status) {
    case RCT_OK: return "ok";
    case RCT_ERR_PARSE: return "parse";
    case RCT_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case RCT_ERR_PRECONDITION: return "precondition";
    case RCT_ERR_NOT_CACTUS: return "not-a-cactus";
    case RCT_ERR_RESOURCE: return "resource";
    case RCT_ERR_OVERFLOW: return "overflow";
    case RCT_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

void rct_string_free(char* s) { std::free(s); }

/* ---- Instances ------------------------------------------------------- */

int rct_instance_parse(const char* text, rct_instance** out, char** errmsg) {
    if (out) *out = nullptr;
    clear_err(errmsg);
    if (!text || !out) return bad_arg(errmsg, "text and out must be non-NULL");
    return guarded(errmsg, [&] {
        *out = std::make_unique<rct_instance>(rct::parse_instance(text)).release();
    });
}

int rct_instance_read_file(const char* path, rct_instance** out, char** errmsg) {
    if (out) *out = nullptr;
    clear_err(errmsg);
    if (!path || !out) return bad_arg(errmsg, "path and out must be non-NULL");
    return guarded(errmsg, [&] {
        *out = std::make_unique<rct_instance>(rct::read_instance_file(path)).release();
    });
}

int rct_instance_to_text(const rct_instance* inst, char** out, char** errmsg) {
    if (out) *out = nullptr;
    clear_err(errmsg);
    if (!inst || !out) return bad_arg(errmsg, "inst and out must be non-NULL");
    return guarded(errmsg, [&] {
        *out = dup_string(rct::serialize_instance(inst->inst));
        if (!*out) throw std::bad_alloc();
    });
}

int rct_instance_write_file(const rct_instance* inst, const char* path, char** errmsg) {
    clear_err(errmsg);
    if (!inst || !path) return bad_arg(errmsg, "inst and path must be non-NULL");
    return guarded(errmsg, [&] { rct::write_instance_file(path, inst->inst); });
}

void rct_instance_free(rct_instance* inst) { delete inst; }

int32_t rct_instance_num_vertices(const rct_instance* inst) {
    return inst ? inst->inst.graph.num_vertices() : 0;
}

int32_t rct_instance_num_edges(const rct_instance* inst) {
    return inst ? inst->inst.graph.num_edges() : 0;
}

int32_t rct_instance_num_colors(const rct_instance* inst) {
    return inst ? inst->inst.costs.num_colors() : 0;
}

int32_t rct_instance_max_degree(const rct_instance* inst) {
    return inst ? inst->inst.graph.max_degree() : 0;
}

int rct_instance_is_connected(const rct_instance* inst) {
    return inst && inst->inst.graph.is_connected() ? 1 : 0;
}

int rct_instance_is_cactus(const rct_instance* inst) {
    return inst && inst->inst.graph.is_cactus() ? 1 : 0;
}

int rct_instance_satisfies_triangle_inequality(const rct_instance* inst) {
    return inst && inst->inst.satisfies_triangle_inequality() ? 1 : 0;
}

const char* rct_instance_class(const rct_instance* inst) {
    if (!inst) return "unknown";
    if (!inst->inst.graph.is_connected()) return "disconnected";
    return rct::to_string(rct::classify_connected(inst->inst.graph));
}

int rct_instance_has_budget(const rct_instance* inst) {
    return inst && inst->inst.budget ? 1 : 0;
}

uint64_t rct_instance_budget(const rct_instance* inst) {
    return inst && inst->inst.budget ? *inst->inst.budget : 0;
}

uint64_t rct_instance_max_cost(const rct_instance* inst) {
    return inst ? inst->inst.costs.max_cost() : 0;
}

int rct_instance_edge(const rct_instance* inst, int32_t edge, int32_t* u,
                      int32_t* v, int32_t* color, char** errmsg) {
    clear_err(errmsg);
    if (!inst) return bad_arg(errmsg, "inst must be non-NULL");
    if (edge < 0 || edge >= inst->inst.graph.num_edges())
        return bad_arg(errmsg, "edge id out of range");
    const rct::Edge& e = inst->inst.graph.edge(edge);
    if (u) *u = e.u;
    if (v) *v = e.v;
    if (color) *color = e.color;
    return RCT_OK;
}

int rct_instance_cost(const rct_instance* inst, int32_t color_a, int32_t color_b,
                      uint64_t* out, char** errmsg) {
    if (out) *out = 0;
    clear_err(errmsg);
    if (!inst || !out) return bad_arg(errmsg, "inst and out must be non-NULL");
    return guarded(errmsg, [&] { *out = inst->inst.costs.get(color_a, color_b); });
}

/* ---- Tree decompositions --------------------------------------------- */

int rct_decomposition_parse(const char* text, rct_decomposition** out, char** errmsg) {
    if (out) *out = nullptr;
    clear_err(errmsg);
    if (!text || !out) return bad_arg(errmsg, "text and out must be non-NULL");
    return guarded(errmsg, [&] {
        auto h = std::make_unique<rct_decomposition>();
        h->td = rct::parse_tree_decomposition(text);
        *out = h.release();
    });
}

int rct_decomposition_read_file(const char* path, rct_decomposition** out, char** errmsg) {
    if (out) *out = nullptr;
    clear_err(errmsg);
    if (!path || !out) return bad_arg(errmsg, "path and out must be non-NULL");
    return guarded(errmsg, [&] {
        auto h = std::make_unique<rct_decomposition>();
        h->td = rct::read_tree_decomposition_file(path);
        *out = h.release();
    });
}

int rct_decomposition_to_text(const rct_decomposition* td, char** out, char** errmsg) {
    if (out) *out = nullptr;
    clear_err(errmsg);
    if (!td || !out) return bad_arg(errmsg, "td and out must be non-NULL");
    return guarded(errmsg, [&] {
        *out = dup_string(rct::serialize_tree_decomposition(td->td));
        if (!*out) throw std::bad_alloc();
    });
}

int rct_decomposition_heuristic(const rct_instance* inst, rct_decomposition** out,
                                char** errmsg) {
    if (out) *out = nullptr;
    clear_err(errmsg);
    if (!inst || !out) return bad_arg(errmsg, "inst and out must be non-NULL");
    return guarded(errmsg, [&] {
        auto h = std::make_unique<rct_decomposition>();
        h->td = rct::heuristic_decomposition(inst->inst.graph);
        *out = h.release();
    });
}

int rct_decomposition_validate(const rct_instance* inst, const rct_decomposition* td,
                               char** errmsg) {
    clear_err(errmsg);
    if (!inst || !td) return bad_arg(errmsg, "inst and td must be non-NULL");
    auto fail = rct::validate_decomposition(inst->inst.graph, td->td);
    if (!fail) return RCT_OK;
    set_err(errmsg, fail->c_str());
    return RCT_ERR_INVALID_ARGUMENT;
}

int32_t rct_decomposition_width(const rct_decomposition* td) {
    return td ? td->td.width() : -1;
}

void rct_decomposition_free(rct_decomposition* td) { delete td; }

/* ---- Solving ---------------------------------------------------------- */

rct_solve_options* rct_solve_options_new(void) {
    return new (std::nothrow) rct_solve_options();
}

void rct_solve_options_free(rct_solve_options* opts) { delete opts; }

int rct_solve_options_set_algo(rct_solve_options* opts, const char* name) {
    if (!opts || !name) return RCT_ERR_INVALID_ARGUMENT;
    auto algo = rct::algo_from_string(name);
    if (!algo) return RCT_ERR_INVALID_ARGUMENT;
    opts->opts.algo = *algo;
    return RCT_OK;
}

void rct_solve_options_set_decision(rct_solve_options* opts, uint64_t k) {
    if (opts) opts->opts.decision = k;
}

void rct_solve_options_clear_decision(rct_solve_options* opts) {
    if (opts) opts->opts.decision.reset();
}

void rct_solve_options_set_decomposition(rct_solve_options* opts,
                                         const rct_decomposition* td) {
    if (opts) opts->td = td;
}

void rct_solve_options_set_max_operations(rct_solve_options* opts, uint64_t n) {
    if (opts) opts->opts.max_operations = n;
}

void rct_solve_options_set_max_trees(rct_solve_options* opts, uint64_t n) {
    if (opts) opts->opts.max_trees = n;
}

int rct_solve(const rct_instance* inst, const rct_solve_options* opts,
              rct_solution** out, char** errmsg) {
    if (out) *out = nullptr;
    clear_err(errmsg);
    if (!inst || !out) return bad_arg(errmsg, "inst and out must be non-NULL");
    return guarded(errmsg, [&] {
        rct::SolveOptions so;
        if (opts) {
            so = opts->opts;
            so.decomposition = opts->td ? &opts->td->td : nullptr;
        }
        auto h = std::make_unique<rct_solution>();
        h->res = rct::solve(inst->inst, so);
        *out = h.release();
    });
}

void rct_solution_free(rct_solution* sol) { delete sol; }

int rct_solution_yes(const rct_solution* sol) { return sol && sol->res.yes ? 1 : 0; }

int rct_solution_has_opt(const rct_solution* sol) {
    return sol && sol->res.opt ? 1 : 0;
}

uint64_t rct_solution_opt(const rct_solution* sol) {
    return sol && sol->res.opt ? *sol->res.opt : 0;
}

const char* rct_solution_algorithm(const rct_solution* sol) {
    return sol ? rct::to_string(sol->res.algorithm) : "unknown";
}

const char* rct_solution_detected_class(const rct_solution* sol) {
    return sol ? rct::to_string(sol->res.detected) : "unknown";
}

int32_t rct_solution_tree_size(const rct_solution* sol) {
    return sol ? static_cast<int32_t>(sol->res.tree.size()) : 0;
}

int32_t rct_solution_tree_edge(const rct_solution* sol, int32_t i) {
    if (!sol || i < 0 || i >= static_cast<int32_t>(sol->res.tree.size())) return -1;
    return sol->res.tree[i];
}

int32_t rct_solution_width(const rct_solution* sol) { return sol ? sol->res.width : -1; }

uint64_t rct_solution_trees_examined(const rct_solution* sol) {
    return sol ? sol->res.trees_examined : 0;
}

uint64_t rct_solution_sat_probes(const rct_solution* sol) {
    return sol ? sol->res.sat_probes : 0;
}

uint64_t rct_solution_max_table(const rct_solution* sol) {
    return sol ? sol->res.max_table : 0;
}

/* ---- Instance generators ---------------------------------------------- */

int rct_gen_outerplanar_from_3sat(const char* dimacs, rct_instance** out, char** errmsg) {
    if (out) *out = nullptr;
    clear_err(errmsg);
    if (!dimacs || !out) return bad_arg(errmsg, "dimacs and out must be non-NULL");
    return guarded(errmsg, [&] {
        rct::CnfFormula f = rct::parse_dimacs_cnf(dimacs);
        *out = std::make_unique<rct_instance>(rct::gen_outerplanar_from_3sat(f)).release();
    });
}

int rct_gen_degree3_from_3sat(const char* dimacs, rct_instance** out, char** errmsg) {
    if (out) *out = nullptr;
    clear_err(errmsg);
    if (!dimacs || !out) return bad_arg(errmsg, "dimacs and out must be non-NULL");
    return guarded(errmsg, [&] {
        rct::CnfFormula f = rct::normalize_3sat_three_occurrences(rct::parse_dimacs_cnf(dimacs));
        *out = std::make_unique<rct_instance>(rct::gen_degree3_from_3sat(f)).release();
    });
}

int rct_gen_planar_from_partition(const char* text, rct_instance** out, char** errmsg) {
    if (out) *out = nullptr;
    clear_err(errmsg);
    if (!text || !out) return bad_arg(errmsg, "text and out must be non-NULL");
    return guarded(errmsg, [&] {
        rct::PartitionInstance p = rct::parse_partition(text);
        *out = std::make_unique<rct_instance>(rct::gen_planar_from_partition(p)).release();
    });
}

int rct_gen_from_unary_binpacking(const char* text, rct_instance** out, char** errmsg) {
    if (out) *out = nullptr;
    clear_err(errmsg);
    if (!text || !out) return bad_arg(errmsg, "text and out must be non-NULL");
    return guarded(errmsg, [&] {
        rct::BinPackingInstance b = rct::parse_bin_packing(text);
        *out = std::make_unique<rct_instance>(rct::gen_from_unary_binpacking(b)).release();
    });
}

int rct_gen_random_cactus(int32_t n, double cycle_prob, int32_t num_colors,
                          uint64_t max_cost, uint64_t seed, rct_instance** out,
                          char** errmsg) {
    if (out) *out = nullptr;
    clear_err(errmsg);
    if (!out) return bad_arg(errmsg, "out must be non-NULL");
    return guarded(errmsg, [&] {
        rct::ColoredGraph g = rct::gen_random_cactus(n, cycle_prob, seed, num_colors);
        rct::ReloadCostTable costs = rct::gen_random_costs(num_colors, max_cost, seed + 1);
        *out = std::make_unique<rct_instance>(
                   rct::Instance(std::move(g), std::move(costs)))
                   .release();
    });
}

} /* extern "C" */
