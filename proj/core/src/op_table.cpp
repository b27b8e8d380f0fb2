#include "ybset/op_table.hpp"

#include <algorithm>
#include <numeric>

namespace ybset {

std::optional<std::array<int, 3>> self_distributivity_witness(const OperationTable& op,
                                                              ShelfSide side) {
  const int n = op.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        bool ok;
        if (side == ShelfSide::Left)
          // x▷(y▷z) = (x▷y)▷(x▷z)
          ok = op.at(x, op.at(y, z)) == op.at(op.at(x, y), op.at(x, z));
        else
          // (x◁y)◁z = (x◁z)◁(y◁z)
          ok = op.at(op.at(x, y), z) == op.at(op.at(x, z), op.at(y, z));
        if (!ok) return std::array<int, 3>{x, y, z};
      }
  return std::nullopt;
}

bool is_left_self_distributive(const OperationTable& op) {
  return !self_distributivity_witness(op, ShelfSide::Left).has_value();
}

bool is_right_self_distributive(const OperationTable& op) {
  return !self_distributivity_witness(op, ShelfSide::Right).has_value();
}

bool is_self_distributive(const OperationTable& op, ShelfSide side) {
  return !self_distributivity_witness(op, side).has_value();
}

namespace {

bool rows_bijective(const OperationTable& op) {
  const int n = op.size();
  std::vector<bool> seen(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), false);
    for (int y = 0; y < n; ++y) {
      if (seen[op.at(x, y)]) return false;
      seen[op.at(x, y)] = true;
    }
  }
  return true;
}

bool cols_bijective(const OperationTable& op) {
  const int n = op.size();
  std::vector<bool> seen(n);
  for (int y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), false);
    for (int x = 0; x < n; ++x) {
      if (seen[op.at(x, y)]) return false;
      seen[op.at(x, y)] = true;
    }
  }
  return true;
}

}  // namespace

bool is_rack(const OperationTable& op, ShelfSide side) {
  if (!is_self_distributive(op, side)) return false;
  return side == ShelfSide::Left ? rows_bijective(op) : cols_bijective(op);
}

bool is_shelf_homomorphism(const Permutation& f, const OperationTable& src,
                           const OperationTable& dst) {
  if (src.size() != dst.size() || f.size() != src.size())
    throw std::invalid_argument("is_shelf_homomorphism: incompatible carriers");
  const int n = src.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f(src.at(x, y)) != dst.at(f(x), f(y))) return false;
  return true;
}

OperationTable relabel(const OperationTable& op, const Permutation& sigma) {
  if (sigma.size() != op.size())
    throw std::invalid_argument("relabel: incompatible carriers");
  const int n = op.size();
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      flat[static_cast<size_t>(sigma(x)) * n + sigma(y)] = sigma(op.at(x, y));
  return OperationTable(n, std::move(flat));
}

std::optional<Permutation> shelf_isomorphic(const OperationTable& a, const OperationTable& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("shelf_isomorphic: incompatible carriers");
  if (a.size() > 6) throw std::invalid_argument("shelf_isomorphic: size unsupported");
  const int n = a.size();
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  // std::next_permutation walks image sequences in lexicographic order, so
  // the first hit is the least witness.
  do {
    Permutation sigma{images};
    if (relabel(a, sigma) == b) return sigma;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

}  // namespace ybset
