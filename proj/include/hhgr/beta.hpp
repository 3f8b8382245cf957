#pragma once

#include <cstdint>
#include <vector>

#include "hhgr/grothendieck.hpp"
#include "hhgr/partition.hpp"
#include "hhgr/symfunc.hpp"

namespace hhgr {

inline constexpr unsigned kDefaultDegreeBound = 10;

struct ComputeOptions {
  unsigned degree_bound = kDefaultDegreeBound;
  /// Worker cap for fan-out over weight sequences; results never depend on it.
  unsigned threads = 1;
};

/// a = (a_1, a_2, ...) with sum n a_n = weight; counts[n-1] holds a_n.
struct WeightSequence {
  std::vector<int> counts;

  int a(int n) const {
    return n >= 1 && n <= static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(n - 1)] : 0;
  }
  int weight() const;

  /// The partition of the weight with a_n parts equal to n.
  Partition as_partition() const;

  friend bool operator==(const WeightSequence&, const WeightSequence&) = default;
};

/// All weight sequences of weight d, ordered by their partition of d.
std::vector<WeightSequence> weight_sequences(int d);

/// s_lambda o Lie(n) in the Schur basis, memoized on (lambda, n).
const SchurVector& lie_plethysm(const Partition& lambda, int n);

/// Contribution of one weight sequence to the bigraded class: the sum over
/// partition tuples lambda(n) |- a_n of (prod s_lambda(n)) (x) (prod s_lambda(n) o Lie(n)).
BigradedClass weight_sequence_contribution(const WeightSequence& a);

/// Composition factors of the arity-d part of the bifunctor Psi P_coalg:
/// multiplicities of alpha S_rho (x) S_nu. Memoized per d.
/// Throws BoundExceeded when d > options.degree_bound.
const BigradedClass& psi_pcoalg_class(int d, const ComputeOptions& options = {});

/// [beta_d S_nu], the nu-isotypical row of psi_pcoalg_class(|nu|).
GrothendieckClass beta_class(const Partition& nu, const ComputeOptions& options = {});

/// sum m_rho dim S_rho(k^r).
std::int64_t eval_dimension(const GrothendieckClass& c, std::uint64_t r);

/// sum m_{rho,nu} dim S_rho(k^r) dim S_nu.
std::int64_t eval_dimension(const BigradedClass& c, std::uint64_t r);

}  // namespace hhgr
