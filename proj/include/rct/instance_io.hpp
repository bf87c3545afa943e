#pragma once

#include <string>

#include "rct/graph.hpp"

namespace rct {

// Text format:
//   rct <num_vertices> <num_edges> <num_colors>
//   e <u> <v> <color>            one line per edge, 0-based
//   c <c0> <c1> ... <c_{q-1}>    one line per color, full symmetric matrix
//   k <budget>                   optional decision threshold
// Lines starting with '#' and blank lines are skipped. Errors carry the
// 1-based line number.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

Instance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const Instance& inst);

} // namespace rct
