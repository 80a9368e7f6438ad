#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace freebound::cli {

enum class Format { Text, Json };

struct Invocation {
  std::string command;
  /// Inline rule text or a path to a file holding it.
  std::vector<std::string> morphisms;
  std::size_t depth = 12;
  std::optional<std::size_t> slack;
  std::size_t budget = 12;
  Format format = Format::Text;
  /// Where to write a DOT dump, if anywhere.
  std::optional<std::string> dot;
  std::uint64_t seed = 0;
};

const std::vector<std::string>& commands();

/// Reads `source` as a file when one exists at that path, else as rule text.
std::string load_morphism_text(const std::string& source);

/// 0 = decided, 1 = usage or input error, 2 = unknown or inconclusive.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and runs.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace freebound::cli
