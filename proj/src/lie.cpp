#include "hhgr/lie.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "hhgr/grothendieck.hpp"

namespace hhgr {

std::uint64_t LieClass::total_dimension() const {
  std::uint64_t total = 0;
  for (const auto& [lambda, m] : mult) total += static_cast<std::uint64_t>(m) * dim_irrep(lambda);
  return total;
}

SchurVector LieClass::to_schur() const { return SchurVector::from_integers(mult); }

int mobius(int n) {
  if (n < 1) throw std::invalid_argument("mobius: argument must be positive");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

LieClass lie_module_with_residue(int n, int residue) {
  if (n < 1) throw std::invalid_argument("lie_module: n must be positive");
  LieClass out;
  out.n = n;
  const int target = ((residue % n) + n) % n;
  for (const Partition& lambda : partitions_of(n)) {
    std::int64_t count = 0;
    for (const StandardTableau& t : standard_tableaux(lambda))
      if (major_index(t) % n == target) ++count;
    if (count != 0) out.mult.emplace(lambda, count);
  }
  return out;
}

namespace {
std::shared_mutex g_lie_mutex;
std::map<int, std::unique_ptr<LieClass>> g_lie_cache;
}  // namespace

const LieClass& lie_module(int n) {
  {
    std::shared_lock lock(g_lie_mutex);
    auto it = g_lie_cache.find(n);
    if (it != g_lie_cache.end()) return *it->second;
  }
  auto computed = std::make_unique<LieClass>(lie_module_with_residue(n, 1));
  std::unique_lock lock(g_lie_mutex);
  return *g_lie_cache.try_emplace(n, std::move(computed)).first->second;
}

LieClass lie_module_oracle(int n) {
  if (n < 1) throw std::invalid_argument("lie_module_oracle: n must be positive");
  PowerVector ch;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    Rational c{mpz_class(mu), mpz_class(n)};
    c.canonicalize();
    ch.add(Partition(std::vector<int>(static_cast<std::size_t>(n / d), d)), c);
  }
  LieClass out;
  out.n = n;
  const SchurVector schur = power_to_schur(ch);
  for (const auto& [lambda, c] : schur.terms()) out.mult.emplace(lambda, require_integer(c));
  return out;
}

LieClass dagger(const LieClass& c) {
  LieClass out;
  out.n = c.n;
  for (const auto& [lambda, m] : c.mult) out.mult.emplace(lambda.conjugate(), m);
  return out;
}

GrothendieckClass dagger(const GrothendieckClass& c) {
  GrothendieckClass out;
  for (const auto& [rho, m] : c.terms()) out.add(rho.conjugate(), m);
  return out;
}

}  // namespace hhgr
