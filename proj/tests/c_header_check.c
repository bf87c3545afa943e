/* Compiled as C11 against the public header: proves the interface needs no
 * C++ compiler and exercises one full parse/solve/generate cycle. */

#include "rct.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

static void expect(int ok, const char* what) {
    if (!ok) {
        fprintf(stderr, "FAIL: %s\n", what);
        ++failures;
    }
}

int main(void) {
    const char* text =
        "rct 3 3 3\n"
        "e 0 1 0\n"
        "e 1 2 1\n"
        "e 2 0 2\n"
        "c 0 1 1\n"
        "c 1 0 1\n"
        "c 1 1 0\n";

    expect(rct_version() != NULL, "version string");
    expect(strcmp(rct_status_name(RCT_OK), "ok") == 0, "status name");

    rct_instance* inst = NULL;
    char* err = NULL;
    int rc = rct_instance_parse(text, &inst, &err);
    expect(rc == RCT_OK && inst != NULL, "parse triangle");
    if (err) {
        fprintf(stderr, "parse error: %s\n", err);
        rct_string_free(err);
    }
    expect(rct_instance_num_vertices(inst) == 3, "vertex count");
    expect(rct_instance_is_cactus(inst) == 1, "cactus check");
    expect(strcmp(rct_instance_class(inst), "cycle") == 0, "class");

    rct_solution* sol = NULL;
    rc = rct_solve(inst, NULL, &sol, &err);
    expect(rc == RCT_OK && sol != NULL, "solve");
    if (err) {
        fprintf(stderr, "solve error: %s\n", err);
        rct_string_free(err);
    }
    expect(rct_solution_has_opt(sol) == 1, "opt present");
    expect(rct_solution_opt(sol) == 1, "opt value");
    expect(rct_solution_tree_size(sol) == 2, "witness size");
    expect(strcmp(rct_solution_algorithm(sol), "cactus") == 0, "algorithm");
    rct_solution_free(sol);

    rct_solve_options* opts = rct_solve_options_new();
    expect(opts != NULL, "options allocate");
    rct_solve_options_set_decision(opts, 0);
    rc = rct_solve(inst, opts, &sol, NULL);
    expect(rc == RCT_OK && rct_solution_yes(sol) == 0, "decision no at zero");
    rct_solution_free(sol);
    rct_solve_options_free(opts);
    rct_instance_free(inst);

    rct_instance* gen = NULL;
    rc = rct_gen_random_cactus(10, 0.5, 8, 20, 42, &gen, NULL);
    expect(rc == RCT_OK && gen != NULL, "random cactus");
    expect(rct_instance_num_vertices(gen) == 10, "random cactus order");
    expect(rct_instance_is_cactus(gen) == 1, "random cactus shape");
    rct_instance_free(gen);

    rct_instance* bp = NULL;
    rc = rct_gen_from_unary_binpacking("p ubp 2 1 2\n1 1\n", &bp, NULL);
    expect(rc == RCT_OK && bp != NULL, "bin packing gadget");
    expect(rct_instance_has_budget(bp) == 1 && rct_instance_budget(bp) == 2,
           "bin packing budget");
    rct_instance_free(bp);

    if (failures) {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return 1;
    }
    puts("c header check passed");
    return 0;
}
