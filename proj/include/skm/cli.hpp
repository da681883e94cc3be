#ifndef SKM_CLI_HPP
#define SKM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "skm/graph.hpp"

namespace skm {

/// Dispatches one subcommand. args excludes the program name.
/// Exit contract: 0 success, 1 negative decision / counterexample found,
/// 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// "K1 v (K5 u 2K1)" mini-expressions: complete-graph atoms K<m>,
/// scalar copies <c>K<m> or <c>(...), union "u", join "v" (loosest),
/// parentheses. Throws std::invalid_argument with a position on bad input.
Graph parse_build_expression(const std::string& text);

}  // namespace skm

#endif
