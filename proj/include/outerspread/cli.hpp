#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "outerspread/graph.hpp"

namespace osp {

// Constructor expression (path:k, cycle:k, star:k, complete:k, fan:k,
// wheel:k, forest:[5,3,1], join(a,b), nestable) or a graph6 string.
Graph parse_graph_expr(const std::string& expr);

// Full command-line entry point, streams injected for in-process testing.
// Exit codes: 0 success, 1 usage error, 2 computation failure, 3 a checked
// invariant was violated (a finding, not a crash).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace osp
