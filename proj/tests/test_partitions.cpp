#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hhgr/errors.hpp"
#include "hhgr/partition.hpp"
#include "support/generators.hpp"

using hhgr::Partition;

namespace {

// Independent enumeration: all nonincreasing sequences by odometer over
// {0..n}^n, filtered.
std::set<std::vector<int>> brute_partitions(int n) {
  std::set<std::vector<int>> out;
  if (n == 0) {
    out.insert(std::vector<int>{});
    return out;
  }
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  while (true) {
    if (std::accumulate(v.begin(), v.end(), 0) == n && std::is_sorted(v.rbegin(), v.rend())) {
      std::vector<int> p;
      for (int x : v)
        if (x > 0) p.push_back(x);
      out.insert(p);
    }
    std::size_t i = 0;
    while (i < v.size() && ++v[i] > n) v[i++] = 0;
    if (i == v.size()) break;
  }
  return out;
}

Partition column_count_conjugate(const Partition& p) {
  std::vector<int> out;
  for (int i = 1; i <= p[0]; ++i) {
    int c = 0;
    for (int part : p.parts()) c += part >= i;
    out.push_back(c);
  }
  return Partition(out);
}

std::vector<Partition> brute_add_box(const Partition& p) {
  std::vector<Partition> out;
  for (int i = 0; i <= p.length(); ++i) {
    std::vector<int> v = p.parts();
    if (i == p.length()) v.push_back(0);
    ++v[static_cast<std::size_t>(i)];
    if (std::is_sorted(v.rbegin(), v.rend())) out.push_back(Partition(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t exhaustive_standard_count(const Partition& shape) {
  std::vector<int> perm(static_cast<std::size_t>(shape.size()));
  std::iota(perm.begin(), perm.end(), 1);
  std::int64_t count = 0;
  do {
    std::vector<std::vector<int>> rows;
    std::size_t k = 0;
    for (int part : shape.parts()) {
      rows.emplace_back(perm.begin() + static_cast<long>(k), perm.begin() + static_cast<long>(k + part));
      k += static_cast<std::size_t>(part);
    }
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r)
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c > 0 && rows[r][c - 1] > rows[r][c]) ok = false;
        if (r > 0 && rows[r - 1][c] > rows[r][c]) ok = false;
      }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::int64_t exhaustive_ssyt_count(const Partition& shape, int r) {
  std::vector<int> cells(static_cast<std::size_t>(shape.size()), 1);
  std::int64_t count = 0;
  while (true) {
    bool ok = true;
    std::size_t k = 0;
    std::vector<std::vector<int>> rows;
    for (int part : shape.parts()) {
      rows.emplace_back(cells.begin() + static_cast<long>(k), cells.begin() + static_cast<long>(k + part));
      k += static_cast<std::size_t>(part);
    }
    for (std::size_t i = 0; i < rows.size() && ok; ++i)
      for (std::size_t c = 0; c < rows[i].size() && ok; ++c) {
        if (c > 0 && rows[i][c - 1] > rows[i][c]) ok = false;
        if (i > 0 && rows[i - 1][c] >= rows[i][c]) ok = false;
      }
    count += ok;
    std::size_t i = 0;
    while (i < cells.size() && ++cells[i] > r) cells[i++] = 1;
    if (i == cells.size()) break;
  }
  return count;
}

Partition ones(int n) { return Partition::column(n); }

Partition hook(int first, int ones_after) {
  std::vector<int> v{first};
  v.insert(v.end(), static_cast<std::size_t>(ones_after), 1);
  return Partition(v);
}

}  // namespace

TEST_CASE("partitions_of") {
  CHECK(hhgr::partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(hhgr::partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(hhgr::partitions_of(6).size() == 11);
  for (int n = 0; n <= 7; ++n) {
    std::set<std::vector<int>> got;
    for (const auto& p : hhgr::partitions_of(n)) got.insert(p.parts());
    CHECK(got == brute_partitions(n));
    const auto list = hhgr::partitions_of(n);
    CHECK(std::is_sorted(list.begin(), list.end()));
  }
}

TEST_CASE("canonical order is reverse lexicographic") {
  const auto five = hhgr::partitions_of(5);
  for (std::size_t i = 0; i + 1 < five.size(); ++i)
    CHECK(std::lexicographical_compare(five[i + 1].parts().begin(), five[i + 1].parts().end(),
                                       five[i].parts().begin(), five[i].parts().end()));
  CHECK(Partition{3} < Partition{2, 1});
  CHECK(Partition{3} < Partition{1, 1});
}

TEST_CASE("conjugate") {
  for (int n = 2; n <= 7; ++n) CHECK(hook(2, n - 1).conjugate() == Partition{n, 1});
  for (int n = 1; n <= 6; ++n) CHECK(Partition::row(n).conjugate() == ones(n));
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  for (const auto& p : testgen::partitions_up_to(1, 8)) {
    CHECK(p.conjugate() == column_count_conjugate(p));
    CHECK(p.conjugate().conjugate() == p);
  }
  CHECK(Partition{}.conjugate() == Partition{});
}

TEST_CASE("contains") {
  CHECK(hhgr::contains(Partition{2, 1}, Partition{1, 1}));
  CHECK_FALSE(hhgr::contains(Partition{1, 1, 1}, Partition{2}));
  for (int n = 1; n <= 6; ++n) CHECK(hhgr::contains(Partition{n, 1}, Partition::row(n)));
}

TEST_CASE("pieri_add_box") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(hhgr::pieri_add_box(ones(n)) == std::vector<Partition>{hook(2, n - 1), ones(n + 1)});
    CHECK(hhgr::pieri_add_box(Partition::row(n)) == std::vector<Partition>{Partition::row(n + 1), Partition{n, 1}});
  }
  CHECK(hhgr::pieri_add_box(Partition{2, 1}) == std::vector<Partition>{{3, 1}, {2, 2}, {2, 1, 1}});
  for (const auto& p : testgen::partitions_up_to(0, 7)) {
    CHECK(hhgr::pieri_add_box(p) == brute_add_box(p));
    std::vector<Partition> expected;
    for (const auto& mu : hhgr::partitions_of(p.size() + 1))
      if (hhgr::contains(mu, p)) expected.push_back(mu);
    CHECK(hhgr::pieri_add_box(p) == expected);
  }
}

TEST_CASE("pieri_remove_box inverts pieri_add_box") {
  for (const auto& p : testgen::partitions_up_to(1, 7))
    for (const auto& q : hhgr::pieri_remove_box(p)) {
      const auto up = hhgr::pieri_add_box(q);
      CHECK(std::find(up.begin(), up.end(), p) != up.end());
    }
}

TEST_CASE("standard_tableaux") {
  CHECK(hhgr::standard_tableaux(Partition{2, 1}).size() == 2);
  for (int n = 1; n <= 6; ++n) CHECK(hhgr::standard_tableaux(Partition::row(n)).size() == 1);
  CHECK(hhgr::standard_tableaux(Partition{2, 2}).size() == static_cast<std::size_t>(exhaustive_standard_count({2, 2})));
  CHECK_THROWS_AS(hhgr::standard_tableaux(Partition::row(13)), hhgr::BoundExceeded);
  CHECK(hhgr::standard_tableaux(Partition::row(13), 13).size() == 1);

  for (const auto& p : testgen::partitions_up_to(1, 10)) {
    const auto ts = hhgr::standard_tableaux(p);
    CHECK(ts.size() == hhgr::dim_irrep(p));
    if (p.size() <= 6) CHECK(static_cast<std::int64_t>(ts.size()) == exhaustive_standard_count(p));
  }
  for (const auto& p : testgen::partitions_up_to(1, 6))
    for (const auto& t : hhgr::standard_tableaux(p)) {
      std::vector<int> seen;
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        REQUIRE(static_cast<int>(t.rows[r].size()) == p[static_cast<int>(r)]);
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
          seen.push_back(t.rows[r][c]);
          if (c > 0) CHECK(t.rows[r][c - 1] < t.rows[r][c]);
          if (r > 0) CHECK(t.rows[r - 1][c] < t.rows[r][c]);
        }
      }
      std::sort(seen.begin(), seen.end());
      std::vector<int> expect(static_cast<std::size_t>(p.size()));
      std::iota(expect.begin(), expect.end(), 1);
      CHECK(seen == expect);
    }
}

TEST_CASE("major_index") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(hhgr::major_index(hhgr::standard_tableaux(Partition::row(n)).front()) == 0);
    CHECK(hhgr::major_index(hhgr::standard_tableaux(ones(n)).front()) == n * (n - 1) / 2);
  }
  CHECK(hhgr::major_index(hhgr::StandardTableau{Partition{2, 1}, {{1, 3}, {2}}}) == 1);
  CHECK(hhgr::major_index(hhgr::StandardTableau{Partition{2, 1}, {{1, 2}, {3}}}) == 2);
}

TEST_CASE("dim_irrep") {
  for (int n = 2; n <= 8; ++n) CHECK(hhgr::dim_irrep(Partition{n - 1, 1}) == static_cast<std::uint64_t>(n - 1));
  for (int n = 1; n <= 8; ++n) CHECK(hhgr::dim_irrep(ones(n)) == 1);
  CHECK(hhgr::dim_irrep(Partition{2, 2}) == static_cast<std::uint64_t>(exhaustive_standard_count({2, 2})));
  for (int n = 0; n <= 10; ++n) {
    std::uint64_t sum = 0;
    for (const auto& p : hhgr::partitions_of(n)) sum += hhgr::dim_irrep(p) * hhgr::dim_irrep(p);
    CHECK(sum == hhgr::factorial(static_cast<unsigned>(n)));
  }
}

TEST_CASE("dim_schur_eval") {
  CHECK(hhgr::dim_schur_eval(Partition{2, 1}, 2) == static_cast<std::uint64_t>(exhaustive_ssyt_count({2, 1}, 2)));
  CHECK(hhgr::dim_schur_eval(Partition{2, 1}, 2) == 2);
  CHECK(hhgr::dim_schur_eval(Partition{1, 1, 1}, 2) == 0);
  CHECK(hhgr::dim_schur_eval(Partition{2, 2, 1}, 1) == 0);
  for (int n = 0; n <= 6; ++n)
    for (std::uint64_t r = 0; r <= 4; ++r)
      CHECK(hhgr::dim_schur_eval(Partition::row(n), r) == (r == 0 ? (n == 0 ? 1u : 0u) : hhgr::binomial(n + r - 1, n)));
  for (const auto& p : testgen::partitions_up_to(1, 5))
    for (int r = 1; r <= 3; ++r)
      CHECK(hhgr::dim_schur_eval(p, static_cast<std::uint64_t>(r)) ==
            static_cast<std::uint64_t>(exhaustive_ssyt_count(p, r)));
}

TEST_CASE("Cauchy identities") {
  for (std::uint64_t a = 1; a <= 4; ++a)
    for (std::uint64_t b = 1; b <= 4; ++b)
      for (int n = 0; n <= 6; ++n) {
        std::uint64_t sym = 0;
        std::uint64_t ext = 0;
        for (const auto& p : hhgr::partitions_of(n)) {
          sym += hhgr::dim_schur_eval(p, a) * hhgr::dim_schur_eval(p, b);
          ext += hhgr::dim_schur_eval(p, a) * hhgr::dim_schur_eval(p.conjugate(), b);
        }
        CHECK(sym == hhgr::binomial(a * b + static_cast<std::uint64_t>(n) - 1, static_cast<std::uint64_t>(n)));
        CHECK(ext == hhgr::binomial(a * b, static_cast<std::uint64_t>(n)));
      }
}

TEST_CASE("parse_partition and formatting") {
  CHECK(hhgr::parse_partition("3,1,1") == Partition{3, 1, 1});
  CHECK(hhgr::parse_partition("0") == Partition{});
  CHECK(hhgr::to_string(Partition{3, 1, 1}) == "3,1,1");
  CHECK(hhgr::to_string(Partition{}) == "0");
  for (const char* bad : {"", "1,2", "3,0", "a", "3,,1", "-1", "3,1,"})
    CHECK_THROWS_AS(hhgr::parse_partition(bad), hhgr::ParseError);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("random partitions round-trip through text") {
  std::mt19937 rng(testgen::kSeed);
  for (int i = 0; i < 200; ++i) {
    const Partition p = testgen::random_partition(rng, 0, 12);
    CHECK(hhgr::parse_partition(hhgr::to_string(p)) == p);
  }
}
