#include "hhgr/beta.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <thread>

#include "hhgr/errors.hpp"
#include "hhgr/lie.hpp"

namespace hhgr {

int WeightSequence::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) w += static_cast<int>(i + 1) * counts[i];
  return w;
}

Partition WeightSequence::as_partition() const {
  std::vector<int> parts;
  for (int n = static_cast<int>(counts.size()); n >= 1; --n)
    parts.insert(parts.end(), static_cast<std::size_t>(a(n)), n);
  return Partition(std::move(parts));
}

std::vector<WeightSequence> weight_sequences(int d) {
  std::vector<WeightSequence> out;
  for (const Partition& p : partitions_of(d)) {
    WeightSequence a;
    a.counts.assign(static_cast<std::size_t>(p.empty() ? 0 : p[0]), 0);
    for (int part : p.parts()) ++a.counts[static_cast<std::size_t>(part - 1)];
    out.push_back(std::move(a));
  }
  return out;
}

namespace {

std::shared_mutex g_pleth_mutex;
std::map<std::pair<Partition, int>, std::unique_ptr<SchurVector>> g_pleth_cache;

std::shared_mutex g_psi_mutex;
std::map<int, std::unique_ptr<BigradedClass>> g_psi_cache;

}  // namespace

const SchurVector& lie_plethysm(const Partition& lambda, int n) {
  const std::pair<Partition, int> key{lambda, n};
  {
    std::shared_lock lock(g_pleth_mutex);
    auto it = g_pleth_cache.find(key);
    if (it != g_pleth_cache.end()) return *it->second;
  }
  auto value = std::make_unique<SchurVector>(plethysm(SchurVector(lambda), lie_module(n).to_schur()));
  std::unique_lock lock(g_pleth_mutex);
  return *g_pleth_cache.try_emplace(key, std::move(value)).first->second;
}

BigradedClass weight_sequence_contribution(const WeightSequence& a) {
  std::vector<int> arities;
  std::vector<std::vector<Partition>> choices;
  for (int n = 1; n <= static_cast<int>(a.counts.size()); ++n) {
    if (a.a(n) == 0) continue;
    arities.push_back(n);
    choices.push_back(partitions_of(a.a(n)));
  }

  BigradedClass out;
  std::vector<std::size_t> pick(arities.size(), 0);
  while (true) {
    SchurVector rho(Partition{});
    SchurVector nu(Partition{});
    for (std::size_t i = 0; i < arities.size(); ++i) {
      const Partition& lambda = choices[i][pick[i]];
      rho = schur_product(rho, SchurVector(lambda));
      nu = schur_product(nu, lie_plethysm(lambda, arities[i]));
    }
    for (const auto& [r, x] : rho.terms())
      for (const auto& [v, y] : nu.terms()) out.add(r, v, require_integer(x * y));

    // Odometer over the product, last arity fastest.
    std::size_t i = pick.size();
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (pick.empty()) return out;
  }
}

const BigradedClass& psi_pcoalg_class(int d, const ComputeOptions& options) {
  if (d < 0) throw std::invalid_argument("psi_pcoalg_class: negative degree");
  if (static_cast<unsigned>(d) > options.degree_bound)
    throw BoundExceeded("psi_pcoalg_class", static_cast<unsigned>(d), options.degree_bound);
  {
    std::shared_lock lock(g_psi_mutex);
    auto it = g_psi_cache.find(d);
    if (it != g_psi_cache.end()) return *it->second;
  }

  const std::vector<WeightSequence> sequences = weight_sequences(d);
  std::vector<BigradedClass> parts(sequences.size());
  const unsigned workers =
      std::max(1u, std::min(options.threads, static_cast<unsigned>(sequences.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < sequences.size(); ++i) parts[i] = weight_sequence_contribution(sequences[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < sequences.size(); i = next++)
            parts[i] = weight_sequence_contribution(sequences[i]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  auto total = std::make_unique<BigradedClass>();
  for (const auto& part : parts) *total += part;
  std::unique_lock lock(g_psi_mutex);
  return *g_psi_cache.try_emplace(d, std::move(total)).first->second;
}

GrothendieckClass beta_class(const Partition& nu, const ComputeOptions& options) {
  return psi_pcoalg_class(nu.size(), options).row(nu);
}

std::int64_t eval_dimension(const GrothendieckClass& c, std::uint64_t r) {
  std::int64_t total = 0;
  for (const auto& [rho, m] : c.terms()) total += m * static_cast<std::int64_t>(dim_schur_eval(rho, r));
  return total;
}

std::int64_t eval_dimension(const BigradedClass& c, std::uint64_t r) {
  std::int64_t total = 0;
  for (const auto& [nu, row] : c.rows())
    total += eval_dimension(row, r) * static_cast<std::int64_t>(dim_irrep(nu));
  return total;
}

}  // namespace hhgr
