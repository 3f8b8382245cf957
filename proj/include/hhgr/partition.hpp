#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hhgr {

/// Default bound on |shape| for standard tableau enumeration.
inline constexpr unsigned kDefaultTableauBound = 12;

/**
 * An integer partition: a weakly decreasing sequence of positive parts.
 *
 * The comparison operators implement the canonical listing order used for
 * every sorted output in the library: larger size first, and within one
 * size reverse-lexicographic order, so partitions_of(3) lists
 * (3), (2,1), (1,1,1). `a < b` therefore reads "a is listed before b".
 */
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Builds a partition from a sequence that may contain trailing zeros;
  /// throws std::invalid_argument on negative or increasing entries.
  static Partition from_padded(const std::vector<int>& parts);

  static Partition row(int n);
  static Partition column(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// i-th part (0-based); zero past the length.
  int operator[](int i) const noexcept {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  Partition conjugate() const;

  /// True iff this diagram contains `other` (part-wise >=).
  bool contains(const Partition& other) const noexcept;

  bool is_row() const noexcept { return parts_.size() <= 1; }
  bool is_column() const noexcept;
  /// True for (m,1) with m >= 1.
  bool is_hook_m1() const noexcept;

  /// Multiplicity of part value k.
  int multiplicity(int k) const noexcept;

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Formats as "3,1,1"; the empty partition is "0".
std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Parses "3,1,1" or "0". Throws ParseError on malformed input.
Partition parse_partition(std::string_view text);

/// All partitions of n in canonical (reverse-lexicographic) order.
std::vector<Partition> partitions_of(int n);

/// Free-function forms of the member queries.
inline Partition conjugate(const Partition& p) { return p.conjugate(); }
inline bool contains(const Partition& mu, const Partition& lambda) { return mu.contains(lambda); }

/// Partitions obtained by adding one box, in canonical order.
std::vector<Partition> pieri_add_box(const Partition& lambda);

/// Partitions obtained by removing one box, in canonical order.
std::vector<Partition> pieri_remove_box(const Partition& lambda);

/// A standard Young tableau, stored row by row.
struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

/// All standard tableaux of the given shape (deterministic order).
/// Throws BoundExceeded when |shape| > bound.
std::vector<StandardTableau> standard_tableaux(const Partition& shape,
                                               unsigned bound = kDefaultTableauBound);

/// Sum of descents i, where i+1 sits in a strictly lower row than i.
int major_index(const StandardTableau& t);

/// Number of standard tableaux, by the hook-length formula.
std::uint64_t dim_irrep(const Partition& lambda);

/// Dimension of the Schur functor S_lambda on a rank-r module
/// (hook-content formula). Throws std::overflow_error if it does not fit.
std::uint64_t dim_schur_eval(const Partition& lambda, std::uint64_t r);

std::uint64_t factorial(unsigned n);
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// z_mu = prod_i i^{m_i} m_i!, the centralizer order of cycle type mu.
std::uint64_t centralizer_order(const Partition& mu);

}  // namespace hhgr
