#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace rct {

// Literal encoding: variable v has positive literal 2v and negative 2v+1.
using Lit = int;

struct TwoSatStats {
    std::uint64_t ops = 0; // graph nodes + arcs touched during solving
};

class TwoSat {
public:
    explicit TwoSat(int num_vars = 0);

    int num_vars() const { return num_vars_; }
    int add_var();

    static Lit pos(int var) { return 2 * var; }
    static Lit neg(int var) { return 2 * var + 1; }
    static Lit negate(Lit l) { return l ^ 1; }

    void add_clause(Lit a, Lit b); // a or b
    void add_unit(Lit a);          // a
    void add_implication(Lit a, Lit b) { add_clause(negate(a), b); }

    // Satisfying assignment (index = variable), or nullopt when unsatisfiable.
    // The returned assignment is re-verified against every clause.
    std::optional<std::vector<bool>> solve(TwoSatStats* stats = nullptr) const;

private:
    void check_lit(Lit l) const;

    int num_vars_;
    std::vector<std::pair<Lit, Lit>> clauses_;
};

} // namespace rct
