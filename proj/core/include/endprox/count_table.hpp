#pragma once

#include <map>
#include <string>
#include <vector>

#include "endprox/bigint.hpp"
#include "endprox/models.hpp"

namespace endprox {

// Statistic value used for structures where the statistic is undefined,
// e.g. HEL of an all-unpaired structure.
inline constexpr int kAbsent = -1;

using StatKey = std::vector<int>;

// Exact finite-size distribution of one or more statistics at a fixed size.
template <class Weight>
struct CountTable {
  Model model = Model::Dyck;
  int size = 0;
  std::vector<std::string> stat_names;
  std::map<StatKey, Weight> entries;

  Weight total() const {
    Weight t{0};
    for (const auto& [key, w] : entries) t += w;
    return t;
  }
  Weight at(const StatKey& key) const {
    const auto it = entries.find(key);
    return it == entries.end() ? Weight{0} : it->second;
  }
};

using ExactTable = CountTable<BigInt>;
using RealTable = CountTable<double>;

}  // namespace endprox
