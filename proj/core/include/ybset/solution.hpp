#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ybset/op_table.hpp"
#include "ybset/perm.hpp"

namespace ybset {

enum class YbeMode { Direct, Componentwise };

// Thrown by from_shelf when the table fails its side's identity.
class not_self_distributive_error : public std::domain_error {
 public:
  not_self_distributive_error(ShelfSide side, std::array<int, 3> witness);
  ShelfSide side() const { return side_; }
  const std::array<int, 3>& witness() const { return witness_; }

 private:
  ShelfSide side_;
  std::array<int, 3> witness_;
};

// Set-theoretical map r(x,y) = (lambda_x(y), rho_y(x)) on {0..n-1}^2.
// Storage is subscript-first for both components: lambda(x, y) = lambda_x(y)
// and rho(y, x) = rho_y(x).
class Solution {
 public:
  // Validates ranges and the braid relation.
  static Solution make(int size, std::vector<std::vector<int>> lambda,
                       std::vector<std::vector<int>> rho);
  // Validates ranges only; for search candidates.
  static Solution make_unchecked(int size, std::vector<std::vector<int>> lambda,
                                 std::vector<std::vector<int>> rho);

  int size() const { return size_; }
  int lambda(int x, int y) const { return lambda_[static_cast<size_t>(x) * size_ + y]; }
  int rho(int y, int x) const { return rho_[static_cast<size_t>(y) * size_ + x]; }
  std::pair<int, int> apply(int x, int y) const { return {lambda(x, y), rho(y, x)}; }

  const std::vector<int>& lambda_entries() const { return lambda_; }
  const std::vector<int>& rho_entries() const { return rho_; }

  friend bool operator==(const Solution&, const Solution&) = default;
  friend auto operator<=>(const Solution& a, const Solution& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    if (auto c = a.lambda_ <=> b.lambda_; c != 0) return c;
    return a.rho_ <=> b.rho_;
  }

 private:
  Solution(int size, std::vector<int> lambda, std::vector<int> rho)
      : size_(size), lambda_(std::move(lambda)), rho_(std::move(rho)) {}

  int size_;
  std::vector<int> lambda_, rho_;  // row-major, subscript-first
};

struct SolutionProps {
  bool left_nondegenerate = false;   // every lambda_x bijective
  bool right_nondegenerate = false;  // every rho_y bijective
  bool involutive = false;           // r∘r = id
  bool idempotent = false;           // r∘r = r
  bool bijective = false;            // r injective on pairs
};

// Braid relation (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r).
// Direct evaluates the two composites on every triple; Componentwise tests
// the three equivalent relations on the lambda/rho families. The modes agree
// on every (lambda, rho) grid; that agreement is itself a tested property.
bool ybe_holds(const Solution& sol, YbeMode mode);

// r(x,y) = (y, y▷x) for Left, (y◁x, x) for Right. Rejects non-shelves with
// the first violating triple.
Solution from_shelf(const OperationTable& op, ShelfSide side);

SolutionProps properties(const Solution& sol);

// Inverse of lambda_x. Throws std::domain_error naming x when lambda_x is
// not bijective.
Permutation lambda_inverse(const Solution& sol, int x);

// a ▷ b = lambda_a(rho_{lambda_b^{-1}(a)}(b)). Requires left non-degeneracy;
// throws std::domain_error naming the offending row otherwise.
OperationTable structure_shelf(const Solution& sol);

// r'(x,y) = (y, y ▷ x) for the structure shelf ▷ of sol.
Solution derived_solution(const Solution& sol);

}  // namespace ybset
