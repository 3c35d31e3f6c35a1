#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace liesym::cli {

struct Outcome {
  int exit_code = 0;  // 0 ok, 1 negative check result, 2 usage/parse/precondition error
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name). `in` backs `-f -`.
Outcome run(const std::vector<std::string>& args, std::istream& in);

/// Text form of a report. Every string leaf of the JSON appears verbatim.
std::string render_text(const nlohmann::ordered_json& report);

/// Names of all subcommands, in help order.
std::vector<std::string> command_names();

}  // namespace liesym::cli
