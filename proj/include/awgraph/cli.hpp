#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace awgraph {

/// Entry point of the awgraph command. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace awgraph
