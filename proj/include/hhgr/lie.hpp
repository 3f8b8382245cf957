#pragma once

#include <cstdint>
#include <map>

#include "hhgr/partition.hpp"
#include "hhgr/symfunc.hpp"

namespace hhgr {

/// Decomposition of the S_n-module Lie(n) into simples S_lambda.
struct LieClass {
  int n = 0;
  std::map<Partition, std::int64_t> mult;

  std::int64_t multiplicity(const Partition& lambda) const {
    auto it = mult.find(lambda);
    return it == mult.end() ? 0 : it->second;
  }

  /// sum mult(lambda) * dim S_lambda; equals (n-1)! for n >= 1.
  std::uint64_t total_dimension() const;

  SchurVector to_schur() const;

  friend bool operator==(const LieClass&, const LieClass&) = default;
};

/// Lie(n) by the major-index rule with residue 1 (memoized).
const LieClass& lie_module(int n);

/// Counts standard tableaux with maj == residue (mod n). The result is
/// independent of the residue whenever gcd(residue, n) = 1.
LieClass lie_module_with_residue(int n, int residue);

/// Lie(n) from (1/n) sum_{d | n} mobius(d) p_d^{n/d}.
LieClass lie_module_oracle(int n);

int mobius(int n);

LieClass dagger(const LieClass& c);

}  // namespace hhgr
