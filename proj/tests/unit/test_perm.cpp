#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ybset/perm.hpp"

using ybset::Permutation;
using ybset::compose;

namespace {

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i;
  std::vector<Permutation> out;
  do {
    out.emplace_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace

TEST_CASE("permutation constructor validates bijections") {
  CHECK_NOTHROW(Permutation({2, 0, 1}));
  CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("identity permutation") {
  auto id = Permutation::identity(3);
  CHECK(id.is_identity());
  CHECK(id.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(id(i) == i);
  CHECK_THROWS_AS(Permutation::identity(0), std::invalid_argument);
}

TEST_CASE("application and images") {
  Permutation swap({1, 0});
  CHECK(swap(0) == 1);
  CHECK(swap(1) == 0);
  CHECK(swap.images() == std::vector<int>{1, 0});
  CHECK_FALSE(swap.is_identity());
}

TEST_CASE("inverse undoes the permutation") {
  Permutation cycle({1, 2, 0});
  CHECK(cycle.inverse().images() == std::vector<int>{2, 0, 1});
  for (const auto& p : symmetric_group(4)) {
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p.inverse(), p).is_identity());
  }
}

TEST_CASE("compose applies the right factor first") {
  for (const auto& p : symmetric_group(3))
    for (const auto& q : symmetric_group(3))
      for (int x = 0; x < 3; ++x) CHECK(compose(p, q)(x) == p(q(x)));
  CHECK_THROWS_AS(compose(Permutation({1, 0}), Permutation({0, 1, 2})), std::invalid_argument);
}

TEST_CASE("permutations order lexicographically by images") {
  CHECK(Permutation({0, 1, 2}) < Permutation({0, 2, 1}));
  CHECK(Permutation({1, 0}) == Permutation({1, 0}));
  auto sym = symmetric_group(3);
  CHECK(std::is_sorted(sym.begin(), sym.end()));
}
