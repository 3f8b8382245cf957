#include "hhgr/outer.hpp"

#include <stdexcept>

namespace hhgr {

std::string_view to_string(OuterMethod m) {
  switch (m) {
    case OuterMethod::TrivialRow: return "TrivialRow";
    case OuterMethod::SignColumn: return "SignColumn";
    case OuterMethod::Hook: return "Hook";
    case OuterMethod::EulerOnly: return "EulerOnly";
  }
  return "EulerOnly";
}

OuterReport adbar_euler(const Partition& nu, const ComputeOptions& options) {
  if (nu.empty()) throw std::invalid_argument("adbar_euler: nu must be non-empty");
  OuterReport report;
  report.nu = nu;
  report.beta = beta_class(nu, options);
  // beta_0 of the empty partition is the constant functor, which lies
  // outside the reduced theory; it never enters the target.
  for (const Partition& pi : pieri_remove_box(nu))
    if (!pi.empty()) report.target += beta_class(pi, options);
  report.euler_difference = report.beta - report.target;
  return report;
}

GrothendieckClass sign_family_omega(int n) {
  GrothendieckClass out;
  for (int b = 1; 2 * b <= n + 1; ++b) {
    const int a = n + 1 - 2 * b;
    std::vector<int> parts{b};
    parts.insert(parts.end(), static_cast<std::size_t>(a), 1);
    out.add(Partition(std::move(parts)), 1);
  }
  return out;
}

OuterReport omega_beta(const Partition& nu, const ComputeOptions& options) {
  OuterReport report = adbar_euler(nu, options);
  const int n = nu.size();
  if (nu.is_row()) {
    report.method = OuterMethod::TrivialRow;
    report.omega = GrothendieckClass{{nu, 1}};
    report.coker = n >= 2 ? GrothendieckClass{{Partition::row(n - 1), 1}} : GrothendieckClass{};
  } else if (nu.is_column()) {
    report.method = OuterMethod::SignColumn;
    report.omega = sign_family_omega(n);
    report.coker = sign_family_omega(n - 2);
  } else if (nu.is_hook_m1()) {
    report.method = OuterMethod::Hook;
    report.omega = GrothendieckClass{{nu, 1}};
    report.coker = GrothendieckClass{};
  }
  return report;
}

bool is_outer_beta(const Partition& nu) { return nu.is_row(); }

std::int64_t ext1_dim(const Partition& rho, const Partition& nu) {
  if (nu.size() < 2 || rho.size() != nu.size() - 1) return 0;
  const Partition one{1};
  const Partition one_one{1, 1};
  std::int64_t total = 0;
  for (const Partition& lambda : partitions_of(nu.size() - 2)) {
    const std::int64_t a = lr_coefficient(lambda, one, rho);
    if (a == 0) continue;
    total += a * lr_coefficient(lambda, one_one, nu);
  }
  return total;
}

std::int64_t ext1_out_dim(const Partition& rho, const Partition& nu) {
  const int n = nu.size();
  if (rho.size() != n - 1) return 0;
  if (nu.is_row() || nu.is_hook_m1()) return 0;
  const std::int64_t dim = ext1_dim(rho, nu);
  return nu.contains(rho) ? dim - 1 : dim;
}

}  // namespace hhgr
