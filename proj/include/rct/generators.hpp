#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rct/graph.hpp"

namespace rct {

// CNF formula in DIMACS conventions: variables are 1..num_vars, a literal
// is +v or -v, never 0. Clauses may repeat a literal.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

struct PartitionInstance {
    std::vector<Cost> items; // all >= 1
};

struct BinPackingInstance {
    std::vector<Cost> items; // all >= 1
    Cost capacity = 0;
    int bins = 0; // >= 2
};

// DIMACS cnf: comment lines starting with 'c' or '#', one
// 'p cnf <vars> <clauses>' header, then whitespace-separated literals with
// a 0 ending each clause. Clause count and variable range must match the
// header. Errors carry the 1-based line number.
CnfFormula parse_dimacs_cnf(const std::string& text);
CnfFormula read_dimacs_cnf_file(const std::string& path);

// 'p part <n>' header followed by n positive integers; 'c'/'#' comments.
PartitionInstance parse_partition(const std::string& text);
PartitionInstance read_partition_file(const std::string& path);

// 'p ubp <n> <capacity> <bins>' header followed by n positive integers.
BinPackingInstance parse_bin_packing(const std::string& text);
BinPackingInstance read_bin_packing_file(const std::string& path);

// Hub-and-gadget instance: per clause, three vertices fanned off a shared
// hub plus two rim edges, a distinct color per edge, costs in {1,5,10}.
// The formula is satisfiable iff the result has a spanning tree of reload
// diameter at most 9; the budget field is set to 9. Outerplanar, and only
// the hub exceeds degree 3. Every clause must have exactly three literals
// and no clause may contain a literal together with its negation.
Instance gen_outerplanar_from_3sat(const CnfFormula& f);

// Rewrites a CNF with clause sizes 2..3 where every variable occurs at
// most three times into an equisatisfiable formula where every variable
// occurs exactly three times with both polarities: variables seen with a
// single polarity are assigned and removed together with their clauses
// (cascading), then each variable left with two occurrences gains a fresh
// companion y via the clauses (x v y) and (y v -y). Variables are
// renumbered compactly. Throws when a variable occurs more than three
// times.
CnfFormula normalize_3sat_three_occurrences(const CnfFormula& f);

// Max-degree-3 instance over exactly nine colors with costs in {0,1} from
// a formula where every variable occurs exactly three times with both
// polarities (see normalize_3sat_three_occurrences); satisfiable iff some
// spanning tree has reload diameter 0. The budget field is set to 0.
Instance gen_degree3_from_3sat(const CnfFormula& f);

// Two mirrored ladders of item gadgets whose roots are joined by an edge;
// the items split into two halves of equal sum iff the result has a
// spanning tree of reload diameter at most B = sum of all items. The
// budget field is set to B. Planar, max degree 3, one distinct color per
// edge, sentinel cost B+1.
Instance gen_planar_from_partition(const PartitionInstance& in);

// A root fanning into `bins` parallel chains of item gadgets, mirrored
// into two copies sharing the root; the items pack into `bins` bins of
// the given capacity iff the result has a spanning tree of reload
// diameter at most twice the capacity. The budget field is set to
// 2*capacity. Max degree 2*bins, distinct color per edge, sentinel cost
// 2*capacity+1. Requires bins >= 2.
Instance gen_from_unary_binpacking(const BinPackingInstance& in);

// Random connected cactus grown by attaching pendant edges and cycles of
// length 3..5 to already-placed vertices; cycle_prob in [0,1] steers the
// mix. Colors are drawn uniformly from 0..num_colors-1. Deterministic in
// the seed.
ColoredGraph gen_random_cactus(int n, double cycle_prob, std::uint64_t seed,
                               int num_colors = 8);

// Symmetric table with zero diagonal and uniform entries in [0, max_cost].
// Deterministic in the seed.
ReloadCostTable gen_random_costs(int num_colors, Cost max_cost, std::uint64_t seed);

} // namespace rct
