#pragma once

#include <string>
#include <vector>

#include "ybe/matrix.hpp"

namespace ybe {

// One verified identity: a stable string key, pass flag, first-counterexample
// witness when failed, and wall time.
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string witness;
  double millis = 0.0;
};

struct Report {
  std::string subject;
  std::vector<CheckItem> items;

  void add(std::string name, bool pass, std::string witness = "", double millis = 0.0) {
    items.push_back({std::move(name), pass, std::move(witness), millis});
  }

  bool all_pass() const {
    for (const auto& it : items) {
      if (!it.pass) return false;
    }
    return true;
  }

  const CheckItem* find(const std::string& name) const {
    for (const auto& it : items) {
      if (it.name == name) return &it;
    }
    return nullptr;
  }

  void merge(const Report& other) {
    for (const auto& it : other.items) items.push_back(it);
  }
};

// Asserts a == b, recording the first differing entry as witness.
void check_equal(Report& rep, const std::string& name, const SparseMat& a, const SparseMat& b);

std::string diff_witness(const SparseMat& a, const SparseMat& b);

}  // namespace ybe
