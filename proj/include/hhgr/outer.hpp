#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hhgr/beta.hpp"
#include "hhgr/grothendieck.hpp"
#include "hhgr/partition.hpp"

namespace hhgr {

/// How omega/coker were determined.
enum class OuterMethod {
  TrivialRow,  ///< nu = (n)
  SignColumn,  ///< nu = (1^n), n >= 2
  Hook,        ///< nu = (m,1), m >= 2
  EulerOnly,   ///< no closed form; only the Euler difference is known
};

std::string_view to_string(OuterMethod m);

/**
 * Grothendieck-level data of the four-term sequence
 *   0 -> omega beta_n S_nu -> beta_n S_nu -> (+)_pi beta_{n-1} S_pi -> Coker -> 0
 * where pi runs over the partitions obtained from nu by removing one box.
 */
struct OuterReport {
  Partition nu;
  GrothendieckClass beta;
  GrothendieckClass target;
  GrothendieckClass euler_difference;  // beta - target
  std::optional<GrothendieckClass> omega;
  std::optional<GrothendieckClass> coker;
  OuterMethod method = OuterMethod::EulerOnly;

  bool resolved() const noexcept { return omega.has_value(); }
};

/// Fills beta, target and euler_difference; omega/coker stay empty.
OuterReport adbar_euler(const Partition& nu, const ComputeOptions& options = {});

/// adbar_euler plus omega/coker for the families with a closed form.
OuterReport omega_beta(const Partition& nu, const ComputeOptions& options = {});

/// [omega beta_n S_(1^n)] = sum over a + 2b = n + 1, b > 0 of [alpha S_(b,1^a)].
/// Zero for n = 0: the constant functor is not part of the reduced theory.
GrothendieckClass sign_family_omega(int n);

/// True iff beta_{|nu|} S_nu is an outer functor, i.e. nu is a single row.
bool is_outer_beta(const Partition& nu);

/// dim Ext^1(alpha S_rho, alpha S_nu) among all functors on free groups.
std::int64_t ext1_dim(const Partition& rho, const Partition& nu);

/// dim Ext^1(alpha S_rho, alpha S_nu) among outer functors.
std::int64_t ext1_out_dim(const Partition& rho, const Partition& nu);

}  // namespace hhgr
