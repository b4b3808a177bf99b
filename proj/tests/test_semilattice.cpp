#include <doctest.h>

#include <numeric>
#include <random>

#include "plonka/semilattice.hpp"

using namespace plonka;

namespace {

std::vector<int> chain_table(int n) {
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(j)] = std::max(i, j);
  return table;
}

const std::vector<int> kDiamond = {0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3};

/// M3: bottom 0, three incomparable middles, top 4.
std::vector<int> m3_table() {
  std::vector<int> table(25);
  auto at = [&table](int i, int j) -> int& { return table[static_cast<std::size_t>(i) * 5 +
                                                          static_cast<std::size_t>(j)]; };
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) at(i, j) = i == j ? i : (i == 0 ? j : (j == 0 ? i : 4));
  return table;
}

/// Ordinal sum: everything in the first summand below everything in the second.
std::vector<int> stack(const std::vector<int>& a, int na, const std::vector<int>& b, int nb) {
  const int n = na + nb;
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  auto at = [&table, n](int i, int j) -> int& {
    return table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < na && j < na)
        at(i, j) = a[static_cast<std::size_t>(i) * static_cast<std::size_t>(na) +
                     static_cast<std::size_t>(j)];
      else if (i >= na && j >= na)
        at(i, j) = na + b[static_cast<std::size_t>(i - na) * static_cast<std::size_t>(nb) +
                          static_cast<std::size_t>(j - na)];
      else
        at(i, j) = std::max(i, j) >= na ? std::max(i, j) : na;
    }
  return table;
}

}  // namespace

TEST_CASE("the diamond validates with the right least and top") {
  SemilatticeCheck check = validate_semilattice(4, kDiamond);
  REQUIRE(check.ok());
  CHECK(check.lattice->least() == 0);
  CHECK(check.lattice->top() == 3);
  CHECK(check.lattice->join(1, 2) == 3);
  CHECK(check.lattice->leq(0, 1));
  CHECK(!check.lattice->leq(1, 2));
}

TEST_CASE("a singleton is its own least and top") {
  SemilatticeCheck check = validate_semilattice(1, std::vector<int>{0});
  REQUIRE(check.ok());
  CHECK(check.lattice->least() == check.lattice->top());
}

TEST_CASE("planted violations carry witnesses") {
  std::vector<int> table = kDiamond;
  table[1 * 4 + 2] = 1;  // 1∨2 = 1 while 2∨1 = 3
  SemilatticeCheck commutativity = validate_semilattice(4, table);
  CHECK(commutativity.fault == SemilatticeFault::NotCommutative);
  CHECK(commutativity.i == 1);
  CHECK(commutativity.j == 2);

  table = kDiamond;
  table[0] = 1;  // 0∨0 = 1
  CHECK(validate_semilattice(4, table).fault == SemilatticeFault::NotIdempotent);

  // two incomparable minimal points under a common top: no least element
  const std::vector<int> no_least = {0, 2, 2, 2, 1, 2, 2, 2, 2};
  CHECK(validate_semilattice(3, no_least).fault == SemilatticeFault::NoLeastElement);

  const std::vector<int> out_of_range = {0, 7, 7, 1};
  CHECK(validate_semilattice(2, out_of_range).fault == SemilatticeFault::EntryOutOfRange);

  // idempotent and commutative but not associative
  const std::vector<int> not_assoc = {0, 1, 2, 1, 1, 0, 2, 0, 2};
  SemilatticeCheck assoc = validate_semilattice(3, not_assoc);
  CHECK(assoc.fault == SemilatticeFault::NotAssociative);
}

TEST_CASE("join table size must match") {
  CHECK(validate_semilattice(2, std::vector<int>{0, 1, 1}).fault ==
        SemilatticeFault::EntryOutOfRange);
}

TEST_CASE("order properties on a family of lattices up to size 6") {
  std::vector<std::pair<int, std::vector<int>>> family;
  for (int n = 1; n <= 4; ++n) family.emplace_back(n, chain_table(n));
  family.emplace_back(4, kDiamond);
  family.emplace_back(5, m3_table());
  family.emplace_back(6, stack(kDiamond, 4, chain_table(2), 2));
  family.emplace_back(6, stack(chain_table(2), 2, kDiamond, 4));

  std::mt19937_64 rng(5);
  for (auto& [n, base] : family) {
    // random relabelling, so validation has to discover the least element
    std::vector<int> relabel(static_cast<std::size_t>(n));
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<int> table(base.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        table[static_cast<std::size_t>(relabel[static_cast<std::size_t>(i)]) *
                  static_cast<std::size_t>(n) +
              static_cast<std::size_t>(relabel[static_cast<std::size_t>(j)])] =
            relabel[static_cast<std::size_t>(base[static_cast<std::size_t>(i) *
                                                      static_cast<std::size_t>(n) +
                                                  static_cast<std::size_t>(j)])];
    SemilatticeCheck check = validate_semilattice(n, table);
    REQUIRE(check.ok());
    const JoinSemilattice& lattice = *check.lattice;

    for (int i = 0; i < n; ++i) {
      CHECK(lattice.leq(i, i));
      CHECK(lattice.leq(lattice.least(), i));
      CHECK(lattice.leq(i, lattice.top()));
      for (int j = 0; j < n; ++j) {
        if (lattice.leq(i, j) && lattice.leq(j, i)) CHECK(i == j);
        for (int k = 0; k < n; ++k)
          if (lattice.leq(i, j) && lattice.leq(j, k)) CHECK(lattice.leq(i, k));
        // join is the least upper bound
        const int join = lattice.join(i, j);
        CHECK(lattice.leq(i, join));
        CHECK(lattice.leq(j, join));
        for (int u = 0; u < n; ++u)
          if (lattice.leq(i, u) && lattice.leq(j, u)) CHECK(lattice.leq(join, u));
      }
    }
    // the top is the unique maximum
    for (int i = 0; i < n; ++i)
      if (lattice.leq(lattice.top(), i)) CHECK(i == lattice.top());
  }
}

TEST_CASE("index range errors") {
  SemilatticeCheck check = validate_semilattice(2, std::vector<int>{0, 1, 1, 1});
  REQUIRE(check.ok());
  CHECK_THROWS_AS(check.lattice->join(0, 5), IndexOutOfRange);
}
