#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hhgr/partition.hpp"
#include "hhgr/rational.hpp"

namespace hhgr {

struct SchurBasis {};
struct PowerBasis {};

/**
 * A symmetric function as a finitely supported map from partitions to
 * rationals, in the basis named by the tag. No stored coefficient is zero.
 */
template <class Basis>
class SymVector {
 public:
  using Map = std::map<Partition, Rational>;

  SymVector() = default;
  explicit SymVector(const Partition& basis_element, Rational coeff = 1) { add(basis_element, coeff); }

  static SymVector from_integers(const std::map<Partition, std::int64_t>& terms) {
    SymVector v;
    for (const auto& [p, c] : terms) v.add(p, Rational(static_cast<long>(c)));
    return v;
  }

  const Map& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Partition& p, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  SymVector& operator+=(const SymVector& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
  }
  SymVector& operator-=(const SymVector& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
  }
  SymVector& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, c] : terms_) c *= s;
    return *this;
  }
  friend SymVector operator+(SymVector a, const SymVector& b) { return a += b; }
  friend SymVector operator-(SymVector a, const SymVector& b) { return a -= b; }
  friend SymVector operator*(SymVector a, const Rational& s) { return a *= s; }
  friend bool operator==(const SymVector& a, const SymVector& b) { return a.terms_ == b.terms_; }

  /// Restriction to partitions of size n.
  SymVector homogeneous_component(int n) const {
    SymVector out;
    for (const auto& [p, c] : terms_)
      if (p.size() == n) out.terms_.emplace(p, c);
    return out;
  }

  /// Sizes carrying a nonzero coefficient, ascending.
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      if (out.empty() || out.back() != it->first.size()) out.push_back(it->first.size());
    return out;
  }

  bool is_homogeneous() const { return degrees().size() <= 1; }

  /// True when every coefficient is a non-negative integer.
  bool is_nonnegative_integral() const {
    for (const auto& [p, c] : terms_)
      if (c.get_den() != 1 || sgn(c) < 0) return false;
    return true;
  }

 private:
  Map terms_;
};

using SchurVector = SymVector<SchurBasis>;
using PowerVector = SymVector<PowerBasis>;

/// Product in the power-sum basis: p_a p_b = p_{a u b}.
PowerVector operator*(const PowerVector& a, const PowerVector& b);

// ---------------------------------------------------------------------------
// Characters

/// Character table of S_n: rows indexed by irreducibles, columns by cycle
/// types, both in partitions_of(n) order.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> partitions;
  std::map<Partition, std::size_t> index;
  std::vector<std::vector<std::int64_t>> values;  // values[irrep][class]

  std::int64_t at(const Partition& irrep, const Partition& cycle_type) const {
    return values[index.at(irrep)][index.at(cycle_type)];
  }
};

/// Memoized Murnaghan-Nakayama table. Safe for concurrent callers; the
/// reference stays valid for the life of the process.
const CharacterTable& character_table(int n);

/// chi^lambda(mu). Throws SizeMismatch when |lambda| != |mu|.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

/// A class function on S_n, valued in the rationals.
struct ClassFunction {
  int degree = 0;
  std::map<Partition, Rational> values;
};

ClassFunction irreducible_character(const Partition& lambda);

/// <f, g> = sum_mu f(mu) g(mu) / z_mu.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

// ---------------------------------------------------------------------------
// Products and basis changes

/// Littlewood-Richardson coefficient c^nu_{lambda,mu} from the LR rule.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// s_lambda * s_mu = sum_nu c^nu_{lambda,mu} s_nu, memoized.
const std::vector<std::pair<Partition, std::int64_t>>& lr_expansion(const Partition& lambda,
                                                                    const Partition& mu);

/// Bilinear product of Schur-basis vectors (induction product).
SchurVector schur_product(const SchurVector& f, const SchurVector& g);

/// The same product computed in the power-sum basis.
SchurVector schur_product_via_characters(const SchurVector& f, const SchurVector& g);

PowerVector schur_to_power(const SchurVector& f);
SchurVector power_to_schur(const PowerVector& g);

/// f o g by power-sum substitution. g must be homogeneous; throws
/// InhomogeneousArgument otherwise.
SchurVector plethysm(const SchurVector& f, const SchurVector& g);
PowerVector plethysm(const PowerVector& f, const PowerVector& g);

}  // namespace hhgr
