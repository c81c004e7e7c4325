#include <iostream>

#include <CLI11.hpp>

#include "affgebra/commands.hpp"
#include "affgebra/errors.hpp"
#include "affgebra/specfile.hpp"

int main(int argc, char** argv) {
  using namespace affgebra;
  CLI::App app{"Verification tool for algebroid and affgebroid specifications"};
  std::string command, path;
  CommandOptions options;
  std::string list;
  for (const auto& c : command_names()) list += (list.empty() ? "" : ", ") + c;
  app.add_option("command", command, "One of: " + list)->required();
  app.add_option("file", path, "Specification file")->required()->check(CLI::ExistingFile);
  app.add_option("--seed", options.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--samples", options.samples, "Random samples per check")->capture_default_str()->check(
      CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    SpecFile spec = load_spec(path);
    CommandResult res = run_command(command, spec, options);
    std::cout << res.output;
    return res.exit_code;
  } catch (const SpecError& e) {
    std::cerr << path << ":" << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
