#include "ybset/solution.hpp"

#include <string>

namespace ybset {

namespace {

std::vector<int> flatten_grid(int size, const std::vector<std::vector<int>>& rows,
                              const char* what) {
  if (size <= 0) throw std::invalid_argument(std::string(what) + ": size must be positive");
  if (rows.size() != static_cast<size_t>(size))
    throw std::invalid_argument(std::string(what) + ": row count does not match size");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(size) * size);
  for (const auto& row : rows) {
    if (row.size() != static_cast<size_t>(size))
      throw std::invalid_argument(std::string(what) + ": grid is not square");
    for (int v : row) {
      if (v < 0 || v >= size)
        throw std::invalid_argument(std::string(what) + ": entry out of range");
      flat.push_back(v);
    }
  }
  return flat;
}

struct Triple {
  int x, y, z;
  bool operator==(const Triple&) const = default;
};

}  // namespace

not_self_distributive_error::not_self_distributive_error(ShelfSide side,
                                                         std::array<int, 3> witness)
    : std::domain_error(std::string("table is not ") +
                        (side == ShelfSide::Left ? "left" : "right") +
                        " self-distributive; witness (" + std::to_string(witness[0]) + "," +
                        std::to_string(witness[1]) + "," + std::to_string(witness[2]) + ")"),
      side_(side), witness_(witness) {}

Solution Solution::make_unchecked(int size, std::vector<std::vector<int>> lambda,
                                  std::vector<std::vector<int>> rho) {
  auto lam = flatten_grid(size, lambda, "Solution lambda");
  auto rh = flatten_grid(size, rho, "Solution rho");
  return Solution(size, std::move(lam), std::move(rh));
}

Solution Solution::make(int size, std::vector<std::vector<int>> lambda,
                        std::vector<std::vector<int>> rho) {
  Solution sol = make_unchecked(size, std::move(lambda), std::move(rho));
  if (!ybe_holds(sol, YbeMode::Direct))
    throw std::domain_error("Solution: map does not satisfy the braid relation");
  return sol;
}

bool ybe_holds(const Solution& sol, YbeMode mode) {
  const int n = sol.size();
  if (mode == YbeMode::Direct) {
    auto r12 = [&](Triple t) {
      auto [a, b] = sol.apply(t.x, t.y);
      return Triple{a, b, t.z};
    };
    auto r23 = [&](Triple t) {
      auto [a, b] = sol.apply(t.y, t.z);
      return Triple{t.x, a, b};
    };
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const Triple t{x, y, z};
          if (!(r12(r23(r12(t))) == r23(r12(r23(t))))) return false;
        }
    return true;
  }
  // Componentwise relations on the lambda/rho families.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // lambda_a lambda_b = lambda_{lambda_a(b)} lambda_{rho_b(a)}
        if (sol.lambda(a, sol.lambda(b, c)) !=
            sol.lambda(sol.lambda(a, b), sol.lambda(sol.rho(b, a), c)))
          return false;
        // rho_{lambda_{rho_b(a)}(c)}(lambda_a(b)) = lambda_{rho_{lambda_b(c)}(a)}(rho_c(b))
        if (sol.rho(sol.lambda(sol.rho(b, a), c), sol.lambda(a, b)) !=
            sol.lambda(sol.rho(sol.lambda(b, c), a), sol.rho(c, b)))
          return false;
        // rho_c rho_b = rho_{rho_c(b)} rho_{lambda_b(c)}
        if (sol.rho(c, sol.rho(b, a)) !=
            sol.rho(sol.rho(c, b), sol.rho(sol.lambda(b, c), a)))
          return false;
      }
  return true;
}

Solution from_shelf(const OperationTable& op, ShelfSide side) {
  if (auto w = self_distributivity_witness(op, side))
    throw not_self_distributive_error(side, *w);
  const int n = op.size();
  std::vector<std::vector<int>> lambda(n, std::vector<int>(n));
  std::vector<std::vector<int>> rho(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (side == ShelfSide::Left) {
        // r(x,y) = (y, y▷x)
        lambda[x][y] = y;
        rho[y][x] = op.at(y, x);
      } else {
        // r(x,y) = (y◁x, x)
        lambda[x][y] = op.at(y, x);
        rho[y][x] = x;
      }
    }
  // The correspondence with the side's self-distributivity makes the map a
  // solution; that equivalence is verified exhaustively elsewhere.
  return Solution::make_unchecked(n, std::move(lambda), std::move(rho));
}

namespace {

bool row_bijective(const std::vector<int>& flat, int n, int row) {
  std::vector<bool> seen(n, false);
  for (int y = 0; y < n; ++y) {
    const int v = flat[static_cast<size_t>(row) * n + y];
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

SolutionProps properties(const Solution& sol) {
  const int n = sol.size();
  SolutionProps props;
  props.left_nondegenerate = true;
  props.right_nondegenerate = true;
  for (int i = 0; i < n; ++i) {
    if (!row_bijective(sol.lambda_entries(), n, i)) props.left_nondegenerate = false;
    if (!row_bijective(sol.rho_entries(), n, i)) props.right_nondegenerate = false;
  }
  props.involutive = true;
  props.idempotent = true;
  props.bijective = true;
  std::vector<bool> hit(static_cast<size_t>(n) * n, false);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [p, q] = sol.apply(x, y);
      auto [p2, q2] = sol.apply(p, q);
      if (p2 != x || q2 != y) props.involutive = false;
      if (p2 != p || q2 != q) props.idempotent = false;
      const size_t slot = static_cast<size_t>(p) * n + q;
      if (hit[slot]) props.bijective = false;
      hit[slot] = true;
    }
  return props;
}

Permutation lambda_inverse(const Solution& sol, int x) {
  const int n = sol.size();
  if (x < 0 || x >= n) throw std::invalid_argument("lambda_inverse: index out of range");
  if (!row_bijective(sol.lambda_entries(), n, x))
    throw std::domain_error("lambda_inverse: lambda_" + std::to_string(x) +
                            " is not bijective (solution not left non-degenerate)");
  std::vector<int> inv(n);
  for (int y = 0; y < n; ++y) inv[sol.lambda(x, y)] = y;
  return Permutation(std::move(inv));
}

OperationTable structure_shelf(const Solution& sol) {
  const int n = sol.size();
  std::vector<Permutation> lam_inv;
  lam_inv.reserve(n);
  for (int x = 0; x < n; ++x) {
    if (!row_bijective(sol.lambda_entries(), n, x))
      throw std::domain_error("structure_shelf: not left non-degenerate at row " +
                              std::to_string(x));
    lam_inv.push_back(lambda_inverse(sol, x));
  }
  // a ▷ b = lambda_a( rho_{lambda_b^{-1}(a)}(b) )
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<size_t>(a) * n + b] = sol.lambda(a, sol.rho(lam_inv[b](a), b));
  return OperationTable(n, std::move(flat));
}

Solution derived_solution(const Solution& sol) {
  return from_shelf(structure_shelf(sol), ShelfSide::Left);
}

}  // namespace ybset
