#include <stdexcept>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "ybset/op_table.hpp"
#include "ybset/solution.hpp"

using ybset::OperationTable;
using ybset::Permutation;
using ybset::ShelfSide;
using ybset::Solution;
using ybset::YbeMode;

namespace {

using Triple = std::tuple<int, int, int>;

Triple r12(const Solution& s, Triple t) {
  auto [x, y, z] = t;
  auto [a, b] = s.apply(x, y);
  return {a, b, z};
}

Triple r23(const Solution& s, Triple t) {
  auto [x, y, z] = t;
  auto [a, b] = s.apply(y, z);
  return {x, a, b};
}

bool braid_oracle(const Solution& s) {
  const int n = s.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Triple t{x, y, z};
        if (r12(s, r23(s, r12(s, t))) != r23(s, r12(s, r23(s, t)))) return false;
      }
  return true;
}

const std::vector<std::vector<int>> kIdRows{{0, 1}, {0, 1}};
const std::vector<std::vector<int>> kNegRows{{1, 0}, {1, 0}};

Solution twist() { return Solution::make(2, kNegRows, kIdRows); }

}  // namespace

TEST_CASE("solution construction validates ranges and the braid relation") {
  CHECK_NOTHROW(twist());
  CHECK_THROWS_AS(Solution::make(2, {{0, 2}, {0, 1}}, kIdRows), std::invalid_argument);
  CHECK_THROWS_AS(Solution::make(2, {{0, 1}}, kIdRows), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Solution::make(2, kIdRows, {{0, 1}, {1, 0}}),
                       "Solution: map does not satisfy the braid relation", std::domain_error);
  CHECK_NOTHROW(Solution::make_unchecked(2, kIdRows, {{0, 1}, {1, 0}}));
}

TEST_CASE("accessors use subscript-first storage") {
  const auto s = twist();
  CHECK(s.lambda(0, 1) == 0);
  CHECK(s.rho(0, 1) == 1);
  CHECK(s.apply(0, 1) == std::pair<int, int>{0, 0});
  CHECK(s.apply(1, 1) == std::pair<int, int>{0, 1});
  CHECK(s.lambda_entries() == std::vector<int>{1, 0, 1, 0});
  CHECK(s.rho_entries() == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("direct and componentwise checks agree with the triple-scan oracle on all size-2 maps") {
  int valid = 0;
  for (int code = 0; code < 256; ++code) {
    std::vector<int> lambda(4), rho(4);
    int c = code;
    for (int i = 0; i < 4; ++i, c /= 2) lambda[i] = c % 2;
    for (int i = 0; i < 4; ++i, c /= 2) rho[i] = c % 2;
    const auto s = Solution::make_unchecked(2, {{lambda[0], lambda[1]}, {lambda[2], lambda[3]}},
                                            {{rho[0], rho[1]}, {rho[2], rho[3]}});
    const bool expected = braid_oracle(s);
    CHECK(ybset::ybe_holds(s, YbeMode::Direct) == expected);
    CHECK(ybset::ybe_holds(s, YbeMode::Componentwise) == expected);
    valid += expected;
  }
  CHECK(valid == 43);
}

TEST_CASE("from_shelf layouts") {
  const OperationTable proj = OperationTable::from_rows({{0, 0}, {1, 1}});
  const auto left = ybset::from_shelf(proj, ShelfSide::Left);
  CHECK(left.lambda_entries() == std::vector<int>{0, 1, 0, 1});
  CHECK(left.rho_entries() == std::vector<int>{0, 0, 1, 1});
  CHECK(left.apply(0, 1) == std::pair<int, int>{1, 1});

  const OperationTable right_proj = OperationTable::from_rows({{0, 1}, {0, 1}});
  const auto right = ybset::from_shelf(right_proj, ShelfSide::Right);
  CHECK(right.lambda_entries() == std::vector<int>{0, 0, 1, 1});
  CHECK(right.rho_entries() == std::vector<int>{0, 1, 0, 1});
  CHECK(braid_oracle(right));

  const OperationTable bad = OperationTable::from_rows({{0, 1}, {1, 0}});
  CHECK_THROWS_AS(ybset::from_shelf(bad, ShelfSide::Left), ybset::not_self_distributive_error);
  try {
    ybset::from_shelf(bad, ShelfSide::Left);
  } catch (const ybset::not_self_distributive_error& e) {
    CHECK(e.side() == ShelfSide::Left);
    CHECK(e.witness() == std::array<int, 3>{1, 0, 0});
  }
}

TEST_CASE("left-shelf maps are left non-degenerate and rack-ness matches right non-degeneracy") {
  for (int code = 0; code < 16; ++code) {
    const OperationTable op(2, {code & 1, (code >> 1) & 1, (code >> 2) & 1, (code >> 3) & 1});
    if (!ybset::is_left_self_distributive(op)) continue;
    const auto s = ybset::from_shelf(op, ShelfSide::Left);
    const auto props = ybset::properties(s);
    CHECK(props.left_nondegenerate);
    CHECK(props.right_nondegenerate == ybset::is_rack(op, ShelfSide::Left));
  }
}

TEST_CASE("property flags on known solutions") {
  const auto t = ybset::properties(twist());
  CHECK(t.left_nondegenerate);
  CHECK(t.right_nondegenerate);
  CHECK(t.bijective);
  CHECK_FALSE(t.involutive);
  CHECK_FALSE(t.idempotent);

  const auto swap = ybset::properties(Solution::make(2, kIdRows, kIdRows));
  CHECK(swap.involutive);
  CHECK(swap.bijective);

  const auto proj = ybset::properties(
      ybset::from_shelf(OperationTable::from_rows({{0, 0}, {1, 1}}), ShelfSide::Left));
  CHECK(proj.idempotent);
  CHECK_FALSE(proj.bijective);
}

TEST_CASE("lambda_inverse") {
  const auto s = twist();
  CHECK(ybset::lambda_inverse(s, 0).images() == std::vector<int>{1, 0});
  CHECK_THROWS_AS(ybset::lambda_inverse(s, 2), std::invalid_argument);
  const auto degenerate = Solution::make_unchecked(2, {{0, 0}, {1, 1}}, kIdRows);
  CHECK_THROWS_AS(ybset::lambda_inverse(degenerate, 0), std::domain_error);
}

TEST_CASE("structure shelf and derived solution of the twist map") {
  const auto s = twist();
  CHECK(ybset::structure_shelf(s) == OperationTable::from_rows({{1, 0}, {1, 0}}));
  CHECK(ybset::derived_solution(s) == Solution::make(2, kIdRows, kNegRows));

  const OperationTable right_proj = OperationTable::from_rows({{0, 1}, {0, 1}});
  const auto degenerate = ybset::from_shelf(right_proj, ShelfSide::Right);
  CHECK_THROWS_AS(ybset::structure_shelf(degenerate), std::domain_error);
}

TEST_CASE("structure shelf recovers the left shelf behind its induced map at size 2") {
  for (int code = 0; code < 16; ++code) {
    const OperationTable op(2, {code & 1, (code >> 1) & 1, (code >> 2) & 1, (code >> 3) & 1});
    if (!ybset::is_left_self_distributive(op)) continue;
    CHECK(ybset::structure_shelf(ybset::from_shelf(op, ShelfSide::Left)) == op);
  }
}

TEST_CASE("derived solutions are left non-degenerate left-shelf maps") {
  const auto d = ybset::derived_solution(twist());
  CHECK(ybset::properties(d).left_nondegenerate);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(d.lambda(x, y) == y);
}
