#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tetrabox/matrix.hpp"

namespace tetrabox {

/// One checked identity or inclusion. `residual` is set for failing matrix identities.
struct CheckEntry {
  std::string relation;
  std::string instance;
  bool pass = false;
  std::optional<Matrix> residual;
};

struct Report {
  std::vector<CheckEntry> entries;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.pass ? 0 : 1;
    return n;
  }
  void append(const Report& other) { entries.insert(entries.end(), other.entries.begin(), other.entries.end()); }
};

}  // namespace tetrabox
