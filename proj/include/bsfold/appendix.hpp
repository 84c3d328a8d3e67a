#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bsfold/curves.hpp"

namespace bsfold {

// Bundled type A morphism fixtures (numbered 3..8, keeping their customary
// ids) with the expected invariants: signs, rotations, full image tables,
// curve exceptions, preservation witnesses and topologicality verdicts.

struct AppendixCase {
  int id = 0;
  std::string summary;
  std::vector<std::string> failures;  // empty means the case passed
  bool passed() const { return failures.empty(); }
};

struct AppendixReport {
  std::vector<AppendixCase> cases;
  bool all_passed() const {
    for (const auto& c : cases)
      if (!c.passed()) return false;
    return true;
  }
};

FoldMorphism appendix_morphism(int id);  // 3..8
AppendixReport run_appendix();

}  // namespace bsfold
