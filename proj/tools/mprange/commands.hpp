#pragma once

#include "output.hpp"

#include <CLI11.hpp>

#include <functional>
#include <string>

namespace mprange {

/// The command chosen on the command line, ready to run after parsing.
struct Selected {
  std::string name;
  std::function<Result()> run;
};

/// Registers every subcommand on app. Parsing a subcommand stores its
/// runner in `selected`.
void register_commands(CLI::App& app, Selected& selected);

}  // namespace mprange
