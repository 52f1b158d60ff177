#include "ybe/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include <json.hpp>

#include "ybe/errors.hpp"
#include "ybe/io.hpp"
#include "ybe/lyubashenko.hpp"

namespace ybe {

std::vector<FiniteSolution> Corpus::all_unique() const {
  std::vector<FiniteSolution> out;
  std::set<std::string> seen;
  auto take = [&](const std::vector<FiniteSolution>& group) {
    for (const auto& s : group) {
      if (seen.insert(canonical_hash(s)).second) out.push_back(s);
    }
  };
  take(enumerated);
  take(brace_derived);
  take(lyubashenko);
  return out;
}

std::map<std::string, long> Corpus::counts() const {
  std::map<std::string, long> c;
  for (const auto& s : enumerated) ++c["solutions.n" + std::to_string(s.size())];
  for (const auto& b : braces) ++c["braces.n" + std::to_string(b.size())];
  for (const auto& s : lyubashenko) ++c["lyubashenko.n" + std::to_string(s.size())];
  c["unique-solutions"] = static_cast<long>(all_unique().size());
  return c;
}

Corpus build_corpus(int max_enumerated, int max_brace, int max_lyubashenko) {
  Corpus c;
  for (int n = 1; n <= max_enumerated; ++n) {
    auto sols = enumerate_solutions(n);
    c.enumerated.insert(c.enumerated.end(), sols.begin(), sols.end());
  }
  for (int n = 1; n <= max_brace; ++n) {
    auto braces = enumerate_braces(n);
    for (const auto& b : braces) {
      c.brace_derived.push_back(solution_from_brace(b));
      c.braces.push_back(b);
    }
  }
  for (int n = 1; n <= max_lyubashenko; ++n) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      c.lyubashenko.push_back(lyubashenko_solution(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return c;
}

void write_corpus(const Corpus& c, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(dir) / "solutions");
  fs::create_directories(fs::path(dir) / "braces");
  fs::create_directories(fs::path(dir) / "lyubashenko");

  auto write = [](const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw MalformedInput("cannot open " + p.string() + " for writing");
    out << content << "\n";
  };

  std::map<int, long> idx;
  for (const auto& s : c.enumerated) {
    write(fs::path(dir) / "solutions" /
              ("n" + std::to_string(s.size()) + "_" + std::to_string(idx[s.size()]++) + ".json"),
          write_solution(s));
  }
  idx.clear();
  for (const auto& b : c.braces) {
    write(fs::path(dir) / "braces" /
              ("n" + std::to_string(b.size()) + "_" + std::to_string(idx[b.size()]++) + ".json"),
          write_brace(b));
  }
  idx.clear();
  for (const auto& s : c.lyubashenko) {
    write(fs::path(dir) / "lyubashenko" /
              ("n" + std::to_string(s.size()) + "_" + std::to_string(idx[s.size()]++) + ".json"),
          write_solution(s));
  }
  nlohmann::ordered_json counts;
  for (const auto& [k, v] : c.counts()) counts[k] = v;
  write(fs::path(dir) / "counts.json", counts.dump(2));
}

}  // namespace ybe
