#pragma once

// Reference tables used by both the unit tests and the acceptance binary.

#include <map>
#include <tuple>
#include <vector>

#include "hhgr/grothendieck.hpp"
#include "hhgr/partition.hpp"

namespace fixtures {

using hhgr::GrothendieckClass;
using hhgr::Partition;
using Expansion = std::map<Partition, std::int64_t>;

struct Product {
  Partition lambda;
  Partition mu;
  Expansion result;
};

inline const std::vector<Product>& lr_products() {
  static const std::vector<Product> table{
      {{1}, {1}, {{{2}, 1}, {{1, 1}, 1}}},
      {{2}, {1}, {{{3}, 1}, {{2, 1}, 1}}},
      {{1, 1}, {1}, {{{1, 1, 1}, 1}, {{2, 1}, 1}}},
      {{3}, {1}, {{{4}, 1}, {{3, 1}, 1}}},
      {{2, 1}, {1}, {{{3, 1}, 1}, {{2, 2}, 1}, {{2, 1, 1}, 1}}},
      {{1, 1, 1}, {1}, {{{1, 1, 1, 1}, 1}, {{2, 1, 1}, 1}}},
      {{2}, {2}, {{{4}, 1}, {{3, 1}, 1}, {{2, 2}, 1}}},
      {{2}, {1, 1}, {{{3, 1}, 1}, {{2, 1, 1}, 1}}},
      {{1, 1}, {1, 1}, {{{1, 1, 1, 1}, 1}, {{2, 1, 1}, 1}, {{2, 2}, 1}}},
  };
  return table;
}

inline const std::vector<Product>& plethysm_identities() {
  static const std::vector<Product> table{
      {{1, 1}, {1, 1}, {{{2, 1, 1}, 1}}},
      {{2}, {1, 1}, {{{1, 1, 1, 1}, 1}, {{2, 2}, 1}}},
  };
  return table;
}

inline const std::map<int, Expansion>& lie_tables() {
  static const std::map<int, Expansion> table{
      {1, {{{1}, 1}}},
      {2, {{{1, 1}, 1}}},
      {3, {{{2, 1}, 1}}},
      {4, {{{3, 1}, 1}, {{2, 1, 1}, 1}}},
      {5, {{{4, 1}, 1}, {{3, 2}, 1}, {{3, 1, 1}, 1}, {{2, 2, 1}, 1}, {{2, 1, 1, 1}, 1}}},
      {6,
       {{{5, 1}, 1},
        {{4, 2}, 1},
        {{4, 1, 1}, 2},
        {{3, 3}, 1},
        {{3, 2, 1}, 3},
        {{3, 1, 1, 1}, 1},
        {{2, 2, 1, 1}, 2},
        {{2, 1, 1, 1, 1}, 1}}},
  };
  return table;
}

/// Isotypical rows nu -> [beta S_nu] in arities 3 and 4.
inline const std::map<Partition, GrothendieckClass>& beta_tables() {
  static const std::map<Partition, GrothendieckClass> table{
      {{3}, {{{3}, 1}}},
      {{2, 1}, {{{2, 1}, 1}, {{2}, 1}, {{1, 1}, 1}, {{1}, 1}}},
      {{1, 1, 1}, {{{1, 1, 1}, 1}, {{2}, 1}, {{1, 1}, 1}}},
      {{4}, {{{4}, 1}}},
      {{3, 1}, {{{3, 1}, 1}, {{3}, 1}, {{2, 1}, 1}, {{2}, 1}, {{1, 1}, 1}, {{1}, 1}}},
      {{2, 2}, {{{2, 2}, 1}, {{1, 1, 1}, 1}, {{2, 1}, 1}, {{2}, 2}, {{1, 1}, 1}}},
      {{2, 1, 1},
       {{{2, 1, 1}, 1}, {{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}, {{1, 1}, 2}, {{2}, 1}, {{1}, 1}}},
      {{1, 1, 1, 1}, {{{1, 1, 1, 1}, 1}, {{1, 1, 1}, 1}, {{2, 1}, 1}, {{2}, 1}}},
  };
  return table;
}

inline GrothendieckClass to_class(const Expansion& e) {
  GrothendieckClass c;
  for (const auto& [p, m] : e) c.add(p, m);
  return c;
}

}  // namespace fixtures
