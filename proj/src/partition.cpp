#include "hhgr/partition.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include "hhgr/errors.hpp"

namespace hhgr {

namespace {

void validate(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

std::uint64_t to_u64(const mpz_class& z) {
  if (sgn(z) < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64)
    throw std::overflow_error("value does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
  return out;
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  validate(parts_);
  for (int p : parts_) size_ += p;
}

Partition Partition::from_padded(const std::vector<int>& parts) {
  std::vector<int> trimmed(parts);
  while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
  return Partition(std::move(trimmed));
}

Partition Partition::row(int n) { return n == 0 ? Partition{} : Partition{n}; }

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition{};
  out.reserve(static_cast<std::size_t>(parts_.front()));
  for (int i = 1; i <= parts_.front(); ++i) {
    int count = 0;
    for (int p : parts_) {
      if (p >= i) ++count;
      else break;
    }
    out.push_back(count);
  }
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if ((*this)[i] < other[i]) return false;
  return true;
}

bool Partition::is_column() const noexcept {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

bool Partition::is_hook_m1() const noexcept { return parts_.size() == 2 && parts_[1] == 1; }

int Partition::multiplicity(int k) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
  if (a.size_ != b.size_) return b.size_ <=> a.size_;
  // Reverse-lexicographic within a size: lexicographically larger first.
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                a.parts_.begin(), a.parts_.end());
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << to_string(p) << ')'; }

Partition parse_partition(std::string_view text) {
  if (text == "0") return Partition{};
  if (text.empty()) throw ParseError("empty partition string");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw ParseError("malformed partition '" + std::string(text) + "'");
    if (value <= 0) throw ParseError("partition '" + std::string(text) + "' has a non-positive part");
    if (!parts.empty() && value > parts.back())
      throw ParseError("partition '" + std::string(text) + "' is not weakly decreasing");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Partition> pieri_add_box(const Partition& lambda) {
  std::vector<Partition> out;
  const int len = lambda.length();
  for (int i = 0; i <= len; ++i) {
    if (i == 0 || lambda[i - 1] > lambda[i]) {
      std::vector<int> parts = lambda.parts();
      if (i == len) parts.push_back(1);
      else ++parts[static_cast<std::size_t>(i)];
      out.emplace_back(std::move(parts));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> pieri_remove_box(const Partition& lambda) {
  std::vector<Partition> out;
  const int len = lambda.length();
  for (int i = 0; i < len; ++i) {
    if (lambda[i] > lambda[i + 1]) {
      std::vector<int> parts = lambda.parts();
      --parts[static_cast<std::size_t>(i)];
      out.push_back(Partition::from_padded(parts));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Places 1..n one at a time; value v goes at the end of any row whose
// length is below the row above it.
void tableaux_rec(const Partition& shape, int next, std::vector<std::vector<int>>& rows,
                  std::vector<StandardTableau>& out) {
  if (next > shape.size()) {
    out.push_back(StandardTableau{shape, rows});
    return;
  }
  for (int r = 0; r < shape.length(); ++r) {
    const auto filled = static_cast<int>(rows[static_cast<std::size_t>(r)].size());
    if (filled >= shape[r]) continue;
    if (r > 0 && static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()) <= filled) continue;
    rows[static_cast<std::size_t>(r)].push_back(next);
    tableaux_rec(shape, next + 1, rows, out);
    rows[static_cast<std::size_t>(r)].pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape, unsigned bound) {
  if (static_cast<unsigned>(shape.size()) > bound)
    throw BoundExceeded("standard_tableaux", static_cast<unsigned>(shape.size()), bound);
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
  tableaux_rec(shape, 1, rows, out);
  return out;
}

int major_index(const StandardTableau& t) {
  const int n = t.shape.size();
  std::vector<int> row_of(static_cast<std::size_t>(n + 1), 0);
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (int v : t.rows[r]) row_of[static_cast<std::size_t>(v)] = static_cast<int>(r);
  int maj = 0;
  for (int i = 1; i < n; ++i)
    if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) maj += i;
  return maj;
}

std::uint64_t dim_irrep(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
  mpz_class hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return to_u64(num / hooks);
}

std::uint64_t dim_schur_eval(const Partition& lambda, std::uint64_t r) {
  if (static_cast<std::uint64_t>(lambda.length()) > r) return 0;
  const Partition conj = lambda.conjugate();
  mpz_class num = 1;
  mpz_class den = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      mpz_class factor(static_cast<unsigned long>(r));
      factor += j - i;
      num *= factor;
      den *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    }
  }
  return to_u64(num / den);
}

std::uint64_t factorial(unsigned n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return to_u64(z);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return to_u64(z);
}

std::uint64_t centralizer_order(const Partition& mu) {
  mpz_class z = 1;
  const auto& parts = mu.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto m = static_cast<unsigned long>(j - i);
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
    z *= f * pw;
    i = j;
  }
  return to_u64(z);
}

}  // namespace hhgr
