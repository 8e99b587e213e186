#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mergeweaver/conflicts.hpp"
#include "mergeweaver/parser.hpp"
#include "mergeweaver/printer.hpp"
#include "mergeweaver/tree_diff.hpp"

namespace mergeweaver {

enum class Strategy { Example, Rule };

inline std::string strategy_name(Strategy s) { return s == Strategy::Example ? "example" : "rule"; }

/// A suggested fix for one conflict: a rewritten Am file.
struct Resolution {
  std::size_t conflict = 0;  // index into the scenario's conflict list
  Strategy strategy = Strategy::Rule;
  std::string target_file;   // path in Am
  std::vector<EditOp> ops;
  std::string resolved_text;
  bool partial = false;
  // example strategy only
  double sigma_m = 0.0;
  int c_m = 0;
  std::string example_host;
};

class TargetMissing : public std::runtime_error {
 public:
  explicit TargetMissing(const std::string& what)
      : std::runtime_error("conflict site not found in merged version: " + what) {}
};

/// Index of the Am file with the given path.
inline std::size_t am_file_index(const FourWayGraph& fw, const std::string& path) {
  for (std::size_t i = 0; i < fw.gam.files.size(); ++i) {
    if (fw.gam.files[i].path == path) return i;
  }
  throw TargetMissing(path);
}

/// Am entity declared with this fqn (first with a declaration node).
inline const Entity* am_entity(const FourWayGraph& fw, const std::string& fqn) {
  for (const Entity& e : fw.gam.entities) {
    if (e.fqn == fqn && !e.external) return &e;
  }
  return nullptr;
}

/// Prints the rewritten tree and checks that it parses again.
inline std::string print_checked(const std::string& path, const SyntaxTree& tree) {
  std::string text = pretty_print(tree);
  parse_unit(path, text);
  return text;
}

}  // namespace mergeweaver
