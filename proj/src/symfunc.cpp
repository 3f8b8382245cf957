#include "hhgr/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

#include "hhgr/errors.hpp"

namespace hhgr {

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

Partition scale_parts(const Partition& a, int k) {
  std::vector<int> parts(a.parts());
  for (int& p : parts) p *= k;
  return Partition(std::move(parts));
}

// Backtracking over LR fillings of nu/lambda in reading order (rows top to
// bottom, each row right to left), pruning on column strictness, content
// and the lattice-word condition as each entry is placed.
class LrCounter {
 public:
  LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu), counts_(static_cast<std::size_t>(mu.length()) + 1, 0) {
    grid_.resize(static_cast<std::size_t>(nu.length()));
    for (int r = 0; r < nu.length(); ++r) {
      grid_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu[r]), 0);
      for (int c = nu[r] - 1; c >= lambda[r]; --c) cells_.emplace_back(r, c);
    }
  }

  std::int64_t count() { return place(0); }

 private:
  std::int64_t place(std::size_t index) {
    if (index == cells_.size()) return 1;
    const auto [r, c] = cells_[index];
    int hi = std::min(mu_.length(), r + 1);
    if (c + 1 < nu_[r]) hi = std::min(hi, at(r, c + 1));
    int lo = 1;
    if (r > 0 && c >= lambda_[r - 1]) lo = at(r - 1, c) + 1;
    std::int64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      auto& cv = counts_[static_cast<std::size_t>(v)];
      if (cv >= mu_[v - 1]) continue;
      if (v > 1 && cv + 1 > counts_[static_cast<std::size_t>(v - 1)]) continue;
      ++cv;
      at(r, c) = v;
      total += place(index + 1);
      at(r, c) = 0;
      --cv;
    }
    return total;
  }

  int& at(int r, int c) { return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> counts_;
};

using LrKey = std::pair<Partition, Partition>;
std::shared_mutex g_lr_mutex;
std::map<LrKey, std::vector<std::pair<Partition, std::int64_t>>> g_lr_cache;

}  // namespace

PowerVector operator*(const PowerVector& a, const PowerVector& b) {
  PowerVector out;
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) out.add(merge_parts(pa, pb), ca * cb);
  return out;
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  return LrCounter(lambda, mu, nu).count();
}

const std::vector<std::pair<Partition, std::int64_t>>& lr_expansion(const Partition& lambda,
                                                                    const Partition& mu) {
  LrKey key = lambda < mu ? LrKey{lambda, mu} : LrKey{mu, lambda};
  {
    std::shared_lock lock(g_lr_mutex);
    auto it = g_lr_cache.find(key);
    if (it != g_lr_cache.end()) return it->second;
  }
  std::vector<std::pair<Partition, std::int64_t>> terms;
  for (const Partition& nu : partitions_of(lambda.size() + mu.size())) {
    std::int64_t c = lr_coefficient(key.first, key.second, nu);
    if (c != 0) terms.emplace_back(nu, c);
  }
  std::unique_lock lock(g_lr_mutex);
  auto [it, inserted] = g_lr_cache.try_emplace(std::move(key), std::move(terms));
  return it->second;
}

SchurVector schur_product(const SchurVector& f, const SchurVector& g) {
  SchurVector out;
  for (const auto& [lambda, a] : f.terms()) {
    for (const auto& [mu, b] : g.terms()) {
      const Rational ab = a * b;
      for (const auto& [nu, c] : lr_expansion(lambda, mu)) out.add(nu, ab * static_cast<long>(c));
    }
  }
  return out;
}

SchurVector schur_product_via_characters(const SchurVector& f, const SchurVector& g) {
  return power_to_schur(schur_to_power(f) * schur_to_power(g));
}

PowerVector schur_to_power(const SchurVector& f) {
  PowerVector out;
  for (const auto& [lambda, c] : f.terms()) {
    const CharacterTable& table = character_table(lambda.size());
    const auto& row = table.values[table.index.at(lambda)];
    for (std::size_t k = 0; k < table.partitions.size(); ++k) {
      if (row[k] == 0) continue;
      const Partition& mu = table.partitions[k];
      Rational coeff = c * static_cast<long>(row[k]);
      coeff /= Rational(static_cast<unsigned long>(centralizer_order(mu)));
      out.add(mu, coeff);
    }
  }
  return out;
}

SchurVector power_to_schur(const PowerVector& g) {
  SchurVector out;
  for (const auto& [mu, d] : g.terms()) {
    const CharacterTable& table = character_table(mu.size());
    const std::size_t col = table.index.at(mu);
    for (std::size_t k = 0; k < table.partitions.size(); ++k) {
      const std::int64_t chi = table.values[k][col];
      if (chi != 0) out.add(table.partitions[k], d * static_cast<long>(chi));
    }
  }
  return out;
}

PowerVector plethysm(const PowerVector& f, const PowerVector& g) {
  if (!g.is_homogeneous()) throw InhomogeneousArgument("plethysm: inner argument mixes degrees");
  std::map<int, PowerVector> substituted;  // k -> p_k o g
  auto power_of_g = [&](int k) -> const PowerVector& {
    auto it = substituted.find(k);
    if (it != substituted.end()) return it->second;
    PowerVector gk;
    for (const auto& [mu, c] : g.terms()) gk.add(scale_parts(mu, k), c);
    return substituted.emplace(k, std::move(gk)).first->second;
  };

  PowerVector out;
  for (const auto& [alpha, a] : f.terms()) {
    PowerVector term(Partition{}, a);
    for (int k : alpha.parts()) {
      term = term * power_of_g(k);
      if (term.empty()) break;
    }
    out += term;
  }
  return out;
}

SchurVector plethysm(const SchurVector& f, const SchurVector& g) {
  if (!g.is_homogeneous()) throw InhomogeneousArgument("plethysm: inner argument mixes degrees");
  return power_to_schur(plethysm(schur_to_power(f), schur_to_power(g)));
}

}  // namespace hhgr
