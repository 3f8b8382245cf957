#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "hhgr/errors.hpp"
#include "hhgr/symfunc.hpp"

namespace hhgr {

std::int64_t require_integer(const Rational& q) {
  if (q.get_den() != 1) throw std::logic_error("expected an integer, got " + q.get_str());
  const mpz_class& z = q.get_num();
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return z.get_si();
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

struct RimHook {
  Partition remainder;
  int sign;
};

// All rim hooks of length k, found on the beta-set (first-column hook lengths).
std::vector<RimHook> remove_rim_hooks(const Partition& lambda, int k) {
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + (len - 1 - i);

  std::vector<RimHook> out;
  for (int i = 0; i < len; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - k;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > to && b < from) ++between;
    std::vector<int> moved(beta);
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int j = 0; j < len; ++j) parts[static_cast<std::size_t>(j)] = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
    out.push_back(RimHook{Partition::from_padded(parts), between % 2 == 0 ? 1 : -1});
  }
  return out;
}

std::unique_ptr<CharacterTable> build_table(int n) {
  auto table = std::make_unique<CharacterTable>();
  table->n = n;
  table->partitions = partitions_of(n);
  for (std::size_t i = 0; i < table->partitions.size(); ++i) table->index.emplace(table->partitions[i], i);
  const std::size_t count = table->partitions.size();
  table->values.assign(count, std::vector<std::int64_t>(count, 0));
  if (n == 0) {
    table->values[0][0] = 1;
    return table;
  }
  for (std::size_t c = 0; c < count; ++c) {
    const Partition& mu = table->partitions[c];
    const int k = mu[0];
    const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
    const CharacterTable& smaller = character_table(n - k);
    for (std::size_t r = 0; r < count; ++r) {
      std::int64_t value = 0;
      for (const RimHook& hook : remove_rim_hooks(table->partitions[r], k))
        value += hook.sign * smaller.at(hook.remainder, rest);
      table->values[r][c] = value;
    }
  }
  return table;
}

std::shared_mutex g_table_mutex;
std::map<int, std::unique_ptr<CharacterTable>> g_tables;

}  // namespace

const CharacterTable& character_table(int n) {
  if (n < 0) throw std::invalid_argument("character_table: negative degree");
  {
    std::shared_lock lock(g_table_mutex);
    auto it = g_tables.find(n);
    if (it != g_tables.end()) return *it->second;
  }
  // Built without the lock held: the recursion needs smaller tables.
  auto built = build_table(n);
  std::unique_lock lock(g_table_mutex);
  auto [it, inserted] = g_tables.try_emplace(n, std::move(built));
  return *it->second;
}

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw SizeMismatch("mn_character: |" + to_string(lambda) + "| != |" + to_string(mu) + "|");
  return character_table(lambda.size()).at(lambda, mu);
}

ClassFunction irreducible_character(const Partition& lambda) {
  const CharacterTable& table = character_table(lambda.size());
  ClassFunction f;
  f.degree = lambda.size();
  const auto& row = table.values[table.index.at(lambda)];
  for (std::size_t c = 0; c < table.partitions.size(); ++c)
    f.values.emplace(table.partitions[c], Rational(static_cast<long>(row[c])));
  return f;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.degree != g.degree) throw SizeMismatch("inner_product: class functions of different degree");
  Rational total = 0;
  for (const auto& [mu, value] : f.values) {
    auto it = g.values.find(mu);
    if (it == g.values.end()) continue;
    Rational term = value * it->second;
    term /= Rational(static_cast<unsigned long>(centralizer_order(mu)));
    total += term;
  }
  return total;
}

}  // namespace hhgr
