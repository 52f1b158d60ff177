#pragma once

#include <map>
#include <string>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Bundled verification corpus: all solutions for sizes <= 3, brace-derived
// solutions for brace orders <= 4, Lyubashenko solutions for all
// permutations of sizes <= 4.
struct Corpus {
  std::vector<FiniteSolution> enumerated;
  std::vector<LeftBrace> braces;
  std::vector<FiniteSolution> brace_derived;
  std::vector<FiniteSolution> lyubashenko;

  // Deterministic union, deduplicated by canonical hash, in the order
  // enumerated / brace-derived / Lyubashenko.
  std::vector<FiniteSolution> all_unique() const;

  std::map<std::string, long> counts() const;
};

Corpus build_corpus(int max_enumerated = 3, int max_brace = 4, int max_lyubashenko = 4);

// Materializes corpus documents plus a counts.json fixture under dir;
// regeneration is byte-identical.
void write_corpus(const Corpus& c, const std::string& dir);

}  // namespace ybe
