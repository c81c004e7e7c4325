#pragma once

// Named computations over a parsed specification file.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "affgebra/specfile.hpp"

namespace affgebra {

// Unknown command, or a command whose required blocks are missing.
class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOptions {
  std::uint64_t seed = 1;
  int samples = 4;
};

struct CommandResult {
  std::string output;
  int exit_code = 0;  // 0 iff no check failed
};

const std::vector<std::string>& command_names();
CommandResult run_command(const std::string& cmd, const SpecFile& spec, const CommandOptions& options = {});

// Algebroid data in the specification-file syntax.
std::string print_algebroid_spec(const AlgebroidData& E);

}  // namespace affgebra
