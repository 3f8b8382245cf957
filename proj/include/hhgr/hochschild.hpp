#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hhgr/beta.hpp"
#include "hhgr/grothendieck.hpp"
#include "hhgr/partition.hpp"

namespace hhgr {

enum class CoefficientKind { InjGamma, InjFin, DualNumbers };

/// Which coefficient system a table was computed for.
struct Coefficient {
  CoefficientKind kind = CoefficientKind::InjGamma;
  int degree = 0;    // InjGamma: arity d; DualNumbers: top degree reported
  Partition lambda;  // InjFin only
};

struct HHRow {
  std::int64_t dimension = 0;
  std::optional<GrothendieckClass> factors;
};

/**
 * Higher Hochschild homology of wedges of r circles, graded by absolute
 * homological degree. When the composition factors are not determined
 * (`unsupported`), rows stay empty and `euler` carries beta - target.
 */
struct HHTable {
  Coefficient coefficient;
  std::uint64_t rank = 0;
  std::map<int, HHRow> rows;
  bool unsupported = false;
  std::optional<GrothendieckClass> euler;

  std::int64_t dimension(int degree) const {
    auto it = rows.find(degree);
    return it == rows.end() ? 0 : it->second.dimension;
  }
};

/// Coefficients Inj^Gamma(d, -): pure, concentrated in degree d.
HHTable hh_inj_gamma(int d, std::uint64_t r, const ComputeOptions& options = {});

/// Coefficients theta^* Inj^Fin_lambda. The representation index is the
/// conjugate nu = lambda^dagger: degree |lambda| carries omega beta S_nu and
/// degree |lambda| - 1 carries the cokernel of the adjoint coaction.
HHTable hh_inj_fin(const Partition& lambda, std::uint64_t r, const ComputeOptions& options = {});

/// Loday construction of the dual numbers, degrees 0..dmax.
HHTable hh_dual_numbers(std::uint64_t r, int dmax, const ComputeOptions& options = {});

struct TorDimension {
  int degree = 0;
  std::int64_t dimension = 0;
};

/// Tor^Gamma(D Inj^Gamma(m,-), Inj^Gamma(n,-)): concentrated in degree n - m,
/// of dimension dim hom(beta(-,n), beta(-,m)). Zero when n < m.
TorDimension tor_gamma_dim(int m, int n, const ComputeOptions& options = {});

}  // namespace hhgr
