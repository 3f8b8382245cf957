#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hhgr/partition.hpp"

namespace testgen {

inline constexpr std::uint32_t kSeed = 20240917;

/// Uniform over partitions of n (by picking from the full list).
inline hhgr::Partition random_partition(std::mt19937& rng, int n) {
  const auto all = hhgr::partitions_of(n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

/// Random partition with size drawn from [lo, hi].
inline hhgr::Partition random_partition(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> size(lo, hi);
  return random_partition(rng, size(rng));
}

/// Every partition of size lo..hi.
inline std::vector<hhgr::Partition> partitions_up_to(int lo, int hi) {
  std::vector<hhgr::Partition> out;
  for (int n = lo; n <= hi; ++n)
    for (auto& p : hhgr::partitions_of(n)) out.push_back(p);
  return out;
}

}  // namespace testgen
