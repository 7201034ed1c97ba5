#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mua/assignment.hpp"

using mua::Assignment;
using mua::CostMatrix;

namespace {

bool is_permutation_assignment(const Assignment& a, int m) {
  std::vector<char> used(m, 0);
  for (int c : a.row_to_col) {
    if (c < 0 || c >= m || used[c]) return false;
    used[c] = 1;
  }
  return static_cast<int>(a.row_to_col.size()) == m;
}

}  // namespace

TEST_SUITE_BEGIN("assignment");

TEST_CASE("known minima on small matrices") {
  CostMatrix c;
  c.cost = {{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
  c.real_rows = 3;
  auto a = mua::assignment_min(c);
  CHECK(a.value == 5);  // 1 + 2 + 2
  CHECK(is_permutation_assignment(a, 3));

  CostMatrix one;
  one.cost = {{7}};
  one.real_rows = 1;
  CHECK(mua::assignment_min(one).value == 7);
}

TEST_CASE("the worked 3x3 subtree matrix has minimum 4") {
  // pairwise distances of the two figure algebras' main subtrees; the
  // six permutation sums are 5,7,4,4,6,8
  CostMatrix c;
  c.cost = {{3, 2, 1}, {1, 1, 2}, {4, 2, 1}};
  c.real_rows = 3;
  CHECK(mua::assignment_min(c).value == 4);
  CHECK(mua::assignment_brute_force(c).value == 4);
}

TEST_CASE("invalid matrices are rejected") {
  CostMatrix bad;
  bad.cost = {{1, 2}, {3}};
  bad.real_rows = 2;
  CHECK_THROWS_AS(mua::assignment_min(bad), std::invalid_argument);
  bad.cost = {{1, -2}, {3, 4}};
  CHECK_THROWS_AS(mua::assignment_min(bad), std::invalid_argument);
  bad.cost = {{1, 2}, {3, 4}, {5, 6}};
  bad.real_rows = 3;
  CHECK_THROWS_AS(mua::assignment_min(bad), std::invalid_argument);
}

TEST_CASE("solver matches permutation enumeration on random matrices") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> cost(0, 30);
  for (int trial = 0; trial < 500; ++trial) {
    int m = 1 + trial % 8;
    CostMatrix c;
    c.cost.assign(m, std::vector<std::int64_t>(m));
    c.real_rows = m;
    for (auto& row : c.cost)
      for (auto& x : row) x = cost(rng);
    auto fast = mua::assignment_min(c);
    auto slow = mua::assignment_brute_force(c);
    CHECK(fast.value == slow.value);
    CHECK(is_permutation_assignment(fast, m));
    // the reported assignment must realize the reported value
    std::int64_t sum = 0;
    for (int r = 0; r < m; ++r) sum += c.cost[r][fast.row_to_col[r]];
    CHECK(sum == fast.value);
  }
}

TEST_CASE("brute force refuses oversized instances") {
  CostMatrix c;
  c.cost.assign(9, std::vector<std::int64_t>(9, 1));
  c.real_rows = 9;
  CHECK_THROWS_AS(mua::assignment_brute_force(c), std::invalid_argument);
}

TEST_SUITE_END();
