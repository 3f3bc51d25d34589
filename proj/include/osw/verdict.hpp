#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace osw {

/// A witnessed decision. When a quantified formula holds, `witnesses` maps
/// each universally quantified tuple to the lexicographically first
/// existential witness tuple (empty for purely universal formulas). When it
/// fails, `counterexample` is the lexicographically first failing tuple and
/// can be re-checked by direct evaluation.
struct Verdict {
  bool holds = true;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> witnesses;
  std::optional<std::vector<int>> counterexample;
};

}  // namespace osw
