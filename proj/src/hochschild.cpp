#include "hhgr/hochschild.hpp"

#include <stdexcept>

#include "hhgr/errors.hpp"
#include "hhgr/outer.hpp"

namespace hhgr {

namespace {

HHRow make_row(const GrothendieckClass& c, std::uint64_t r) { return HHRow{eval_dimension(c, r), c}; }

void accumulate(HHRow& into, const HHRow& from) {
  into.dimension += from.dimension;
  if (from.factors) {
    if (!into.factors) into.factors = GrothendieckClass{};
    *into.factors += *from.factors;
  }
}

}  // namespace

HHTable hh_inj_gamma(int d, std::uint64_t r, const ComputeOptions& options) {
  if (d < 0) throw std::invalid_argument("hh_inj_gamma: negative degree");
  const BigradedClass& psi = psi_pcoalg_class(d, options);
  // Twisting by the sign conjugates the S_d-index only, so forgetting the
  // S_d-action leaves sum_nu dim(S_nu) [beta_d S_nu] unchanged.
  GrothendieckClass aggregate;
  for (const auto& [nu, row] : psi.rows()) aggregate += row * static_cast<std::int64_t>(dim_irrep(nu));

  HHTable table;
  table.coefficient = Coefficient{CoefficientKind::InjGamma, d, {}};
  table.rank = r;
  table.rows.emplace(d, make_row(aggregate, r));
  return table;
}

HHTable hh_inj_fin(const Partition& lambda, std::uint64_t r, const ComputeOptions& options) {
  HHTable table;
  table.coefficient = Coefficient{CoefficientKind::InjFin, lambda.size(), lambda};
  table.rank = r;
  if (lambda.empty()) {
    table.rows.emplace(0, make_row(GrothendieckClass{{Partition{}, 1}}, r));
    return table;
  }
  const int n = lambda.size();
  const OuterReport report = omega_beta(lambda.conjugate(), options);
  if (!report.resolved()) {
    table.unsupported = true;
    table.euler = report.euler_difference;
    return table;
  }
  table.rows.emplace(n, make_row(*report.omega, r));
  table.rows.emplace(n - 1, make_row(*report.coker, r));
  return table;
}

HHTable hh_dual_numbers(std::uint64_t r, int dmax, const ComputeOptions& options) {
  if (dmax < 0) throw std::invalid_argument("hh_dual_numbers: negative degree");
  if (static_cast<unsigned>(dmax) + 1 > options.degree_bound)
    throw BoundExceeded("hh_dual_numbers", static_cast<unsigned>(dmax) + 1, options.degree_bound);
  HHTable table;
  table.coefficient = Coefficient{CoefficientKind::DualNumbers, dmax, {}};
  table.rank = r;
  for (int d = 0; d <= dmax; ++d) table.rows[d] = HHRow{0, GrothendieckClass{}};
  // Only the trivial isotypical pieces lambda = (n) survive on a rank-one V.
  for (int n = 0; n <= dmax + 1; ++n) {
    const HHTable piece = hh_inj_fin(Partition::row(n), r, options);
    for (const auto& [degree, row] : piece.rows)
      if (degree <= dmax) accumulate(table.rows[degree], row);
  }
  return table;
}

TorDimension tor_gamma_dim(int m, int n, const ComputeOptions& options) {
  if (m < 1 || n < 1) throw std::invalid_argument("tor_gamma_dim: m and n must be positive");
  if (static_cast<unsigned>(n) > options.degree_bound)
    throw BoundExceeded("tor_gamma_dim", static_cast<unsigned>(n), options.degree_bound);
  if (n < m) return TorDimension{0, 0};
  const BigradedClass& psi = psi_pcoalg_class(n, options);
  std::int64_t total = 0;
  for (const auto& [nu, row] : psi.rows()) {
    std::int64_t hom = 0;
    const GrothendieckClass layer = row.degree_component(m);
    for (const auto& [rho, mult] : layer.terms())
      hom += mult * static_cast<std::int64_t>(dim_irrep(rho));
    total += hom * static_cast<std::int64_t>(dim_irrep(nu));
  }
  return TorDimension{n - m, total};
}

}  // namespace hhgr
