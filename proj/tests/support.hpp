#pragma once

// Conversions between library objects and the plain oracle representation.

#include <string>
#include <vector>

#include "oracles.hpp"
#include "ras/algebra.hpp"
#include "ras/approx.hpp"
#include "ras/audit.hpp"
#include "ras/universe.hpp"

namespace support {

inline oracle::Set to_set(const ras::SubsetU& s) {
  oracle::Set out;
  for (auto i : s.indices()) out.insert(static_cast<int>(i));
  return out;
}

inline ras::SubsetU to_subset(const ras::UniversePtr& u, const oracle::Set& s) {
  std::vector<ras::Index> idx(s.begin(), s.end());
  return ras::SubsetU::from_indices(u, idx);
}

inline oracle::Blocks to_blocks(const ras::ApproxSpace& space) {
  oracle::Blocks out;
  for (const auto& b : space.partition().blocks()) out.push_back(to_set(b));
  return out;
}

inline ras::ApproxSpace to_space(const ras::UniversePtr& u, const oracle::Blocks& blocks) {
  std::vector<ras::SubsetU> bs;
  for (const auto& b : blocks) bs.push_back(to_subset(u, b));
  return ras::make_space(u, bs);
}

inline oracle::Table to_table(const ras::OpTable& t) {
  oracle::Table g;
  g.n = static_cast<int>(t.universe()->size());
  for (auto x : t.elements()) g.carrier.push_back(static_cast<int>(x));
  for (auto x : t.elements())
    for (auto y : t.elements()) {
      auto c = t.at(x, y);
      g.cell[{static_cast<int>(x), static_cast<int>(y)}] = c ? static_cast<int>(*c) : -1;
    }
  return g;
}

inline ras::OpTable from_oracle(const ras::UniversePtr& u, const oracle::Table& g) {
  std::vector<ras::TableEntry> entries;
  for (const auto& [k, v] : g.cell) {
    entries.push_back({static_cast<ras::Index>(k.first), static_cast<ras::Index>(k.second),
                       v < 0 ? ras::Cell{} : ras::Cell{static_cast<ras::Index>(v)}});
  }
  std::vector<ras::Index> carrier(g.carrier.begin(), g.carrier.end());
  return ras::make_table(ras::SubsetU::from_indices(u, carrier), entries);
}

inline std::vector<int> to_ints(const std::vector<ras::Index>& v) {
  return {v.begin(), v.end()};
}

inline ras::Scenario example31() { return ras::load_fixture("example31.ras"); }
inline ras::Scenario example32() { return ras::load_fixture("example32.ras"); }
inline ras::Scenario z4() { return ras::load_fixture("z4.ras"); }

}  // namespace support
