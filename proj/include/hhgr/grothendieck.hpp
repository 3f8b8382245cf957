#pragma once

#include <cstdint>
#include <map>

#include "hhgr/partition.hpp"

namespace hhgr {

/**
 * An integer combination sum m_rho [alpha S_rho] of simple polynomial
 * functors on free groups. Zero multiplicities are never stored; negative
 * ones are allowed (virtual classes from Euler characteristics).
 */
class GrothendieckClass {
 public:
  using Map = std::map<Partition, std::int64_t>;

  GrothendieckClass() = default;
  GrothendieckClass(std::initializer_list<std::pair<const Partition, std::int64_t>> init) {
    for (const auto& [p, m] : init) add(p, m);
  }

  const Map& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  std::int64_t multiplicity(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Partition& p, std::int64_t m) {
    if (m == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GrothendieckClass& operator+=(const GrothendieckClass& o) {
    for (const auto& [p, m] : o.terms_) add(p, m);
    return *this;
  }
  GrothendieckClass& operator-=(const GrothendieckClass& o) {
    for (const auto& [p, m] : o.terms_) add(p, -m);
    return *this;
  }
  GrothendieckClass& operator*=(std::int64_t s) {
    if (s == 0) terms_.clear();
    for (auto& [p, m] : terms_) m *= s;
    return *this;
  }
  friend GrothendieckClass operator+(GrothendieckClass a, const GrothendieckClass& b) { return a += b; }
  friend GrothendieckClass operator-(GrothendieckClass a, const GrothendieckClass& b) { return a -= b; }
  friend GrothendieckClass operator*(GrothendieckClass a, std::int64_t s) { return a *= s; }
  friend bool operator==(const GrothendieckClass&, const GrothendieckClass&) = default;

  bool is_nonnegative() const {
    for (const auto& [p, m] : terms_)
      if (m < 0) return false;
    return true;
  }

  /// Componentwise <=.
  bool is_subclass_of(const GrothendieckClass& other) const {
    for (const auto& [p, m] : terms_)
      if (m > other.multiplicity(p)) return false;
    return true;
  }

  /// Terms of polynomial degree d.
  GrothendieckClass degree_component(int d) const {
    GrothendieckClass out;
    for (const auto& [p, m] : terms_)
      if (p.size() == d) out.terms_.emplace(p, m);
    return out;
  }

  std::int64_t total_multiplicity() const {
    std::int64_t total = 0;
    for (const auto& [p, m] : terms_) total += m;
    return total;
  }

 private:
  Map terms_;
};

/**
 * A class in the Grothendieck group of bifunctors: multiplicities of
 * alpha S_rho (x) S_nu, stored as one GrothendieckClass row per nu.
 */
class BigradedClass {
 public:
  using Rows = std::map<Partition, GrothendieckClass>;

  const Rows& rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }

  void add(const Partition& rho, const Partition& nu, std::int64_t m) {
    if (m == 0) return;
    GrothendieckClass& row = rows_[nu];
    row.add(rho, m);
    if (row.empty()) rows_.erase(nu);
  }

  BigradedClass& operator+=(const BigradedClass& o) {
    for (const auto& [nu, row] : o.rows_)
      for (const auto& [rho, m] : row.terms()) add(rho, nu, m);
    return *this;
  }

  std::int64_t multiplicity(const Partition& rho, const Partition& nu) const {
    auto it = rows_.find(nu);
    return it == rows_.end() ? 0 : it->second.multiplicity(rho);
  }

  /// The nu-isotypical row (empty class when absent).
  GrothendieckClass row(const Partition& nu) const {
    auto it = rows_.find(nu);
    return it == rows_.end() ? GrothendieckClass{} : it->second;
  }

  friend bool operator==(const BigradedClass&, const BigradedClass&) = default;

 private:
  Rows rows_;
};

/// Replaces every index partition by its conjugate.
GrothendieckClass dagger(const GrothendieckClass& c);

}  // namespace hhgr
