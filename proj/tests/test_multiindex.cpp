#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "greynoise/multiindex.hpp"

using namespace greynoise;

namespace {

// brute-force Diophantine solver over a bounded box, for cross-checking
std::vector<PairAssignment> brute_force_solutions(const MultiIndex& gamma) {
  const int d = static_cast<int>(gamma.support_size());
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) cells.emplace_back(i, j);
  }
  const int bound = gamma.degree();
  std::vector<int> values(cells.size(), 0);
  std::vector<PairAssignment> out;
  for (;;) {
    // check
    std::vector<int> row(d, 0);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto [i, j] = cells[c];
      if (i == j) {
        row[i] += 2 * values[c];
      } else {
        row[i] += values[c];
        row[j] += values[c];
      }
    }
    bool match = true;
    for (int i = 0; i < d; ++i) {
      if (row[i] != gamma[i]) match = false;
    }
    if (match) {
      PairAssignment pa;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (values[c] > 0) pa.beta[cells[c]] = values[c];
      }
      out.push_back(std::move(pa));
    }
    // odometer
    std::size_t pos = 0;
    while (pos < values.size()) {
      if (++values[pos] <= bound) break;
      values[pos] = 0;
      ++pos;
    }
    if (pos == values.size()) break;
  }
  return out;
}

} // namespace

TEST_CASE("graded enumeration counts and order") {
  CHECK(enumerate_graded(2, 0).size() == 1);
  const auto e22 = enumerate_graded(2, 2);
  REQUIRE(e22.size() == 3);
  CHECK(e22[0] == MultiIndex({2, 0}));
  CHECK(e22[1] == MultiIndex({1, 1}));
  CHECK(e22[2] == MultiIndex({0, 2}));
  CHECK(enumerate_graded(3, 4).size() == 15);   // C(6, 2)
  // count formula on a sweep
  auto choose = [](int n, int k) {
    return static_cast<std::size_t>(binomial(n, k).convert_to<long>());
  };
  for (int d = 1; d <= 4; ++d) {
    for (int n = 0; n <= 6; ++n) {
      CHECK(enumerate_graded(d, n).size() == choose(n + d - 1, d - 1));
    }
  }
}

TEST_CASE("graded order is strict and total") {
  const auto all = enumerate_up_to(3, 4);
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    CHECK(all[i].graded_less(all[i + 1]));
    CHECK(!all[i + 1].graded_less(all[i]));
  }
}

TEST_CASE("diophantine worked example gamma = (2,2)") {
  const auto sols = solve_diophantine(MultiIndex({2, 2}));
  REQUIRE(sols.size() == 2);
  PairAssignment diag, off;
  diag.beta[{0, 0}] = 1;
  diag.beta[{1, 1}] = 1;
  off.beta[{0, 1}] = 2;
  CHECK((sols[0] == diag || sols[1] == diag));
  CHECK((sols[0] == off || sols[1] == off));
}

TEST_CASE("diophantine basic cases") {
  const auto s11 = solve_diophantine(MultiIndex({1, 1}));
  REQUIRE(s11.size() == 1);
  CHECK(s11[0].beta.at({0, 1}) == 1);
  CHECK(solve_diophantine(MultiIndex({3})).empty());
  CHECK(solve_diophantine(MultiIndex({1, 2})).empty());
  // empty index: one empty solution
  CHECK(solve_diophantine(MultiIndex()).size() == 1);
}

TEST_CASE("diophantine matches brute force for small gammas") {
  const std::vector<MultiIndex> cases = {
      MultiIndex({2}),       MultiIndex({4}),          MultiIndex({2, 2}),
      MultiIndex({2, 1, 1}), MultiIndex({1, 1, 1, 1}), MultiIndex({4, 2}),
      MultiIndex({3, 3}),    MultiIndex({2, 2, 2}),    MultiIndex({0, 2, 0, 2}),
      MultiIndex({3, 2, 3})};
  for (const MultiIndex& gamma : cases) {
    auto fast = solve_diophantine(gamma);
    auto slow = brute_force_solutions(gamma);
    REQUIRE(fast.size() == slow.size());
    // sets coincide and fast output is duplicate-free
    std::set<std::map<std::pair<int, int>, int>> fs, ss;
    for (auto& s : fast) fs.insert(s.beta);
    for (auto& s : slow) ss.insert(s.beta);
    CHECK(fs.size() == fast.size());
    CHECK(fs == ss);
  }
}

TEST_CASE("every solution halves the degree") {
  for (const MultiIndex& gamma :
       {MultiIndex({4, 2}), MultiIndex({2, 2, 2}), MultiIndex({6})}) {
    for (const auto& beta : solve_diophantine(gamma)) {
      CHECK(2 * beta.total() == gamma.degree());
    }
  }
}

TEST_CASE("multinomial exact values") {
  CHECK(multinomial(2, {1, 1}) == 2);
  CHECK(multinomial(5, {5}) == 1);
  CHECK(multinomial(6, {2, 2, 2}) == 90);
  CHECK(multinomial(0, {}) == 1);
  CHECK_THROWS_AS(multinomial(4, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(multinomial(2, {3, -1}), std::invalid_argument);
  // big-integer territory: 24! / (12! 12!)
  CHECK(multinomial(24, {12, 12}) == BigInt(2704156));
  CHECK(factorial(25) == BigInt("15511210043330985984000000"));
}

TEST_CASE("multiindex arithmetic") {
  const MultiIndex a({1, 2}), b({0, 1, 3});
  CHECK(a.plus(b) == MultiIndex({1, 3, 3}));
  CHECK(a.degree() == 3);
  MultiIndex diff;
  CHECK(a.plus(b).minus(b, diff));
  CHECK(diff == a);
  CHECK(!b.minus(a, diff));
  CHECK(MultiIndex({1, 0, 0}) == MultiIndex({1}));   // trailing zeros trimmed
  CHECK(MultiIndex::unit(2) == MultiIndex({0, 0, 1}));
  CHECK_THROWS_AS(MultiIndex({-1}), std::invalid_argument);
}
