#pragma once

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ybset/perm.hpp"

namespace ybset {

enum class ShelfSide { Left, Right };

// Binary operation table on {0, ..., n-1}. table[x][y] is always x∘y:
// x▷y when used as a left shelf, x◁y when used as a right shelf. The left
// translation L_x is row x; the right translation R_y is column y.
class OperationTable {
 public:
  OperationTable(int size, std::vector<int> entries)
      : size_(size), entries_(std::move(entries)) {
    if (size_ <= 0) throw std::invalid_argument("OperationTable: size must be positive");
    if (entries_.size() != static_cast<size_t>(size_) * size_)
      throw std::invalid_argument("OperationTable: entry count does not match size");
    for (int v : entries_)
      if (v < 0 || v >= size_)
        throw std::invalid_argument("OperationTable: entry out of range");
  }

  static OperationTable from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n)
        throw std::invalid_argument("OperationTable: table is not square");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return OperationTable(n, std::move(flat));
  }

  int size() const { return size_; }
  int at(int x, int y) const { return entries_[static_cast<size_t>(x) * size_ + y]; }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const OperationTable&, const OperationTable&) = default;
  friend auto operator<=>(const OperationTable& a, const OperationTable& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  int size_;
  std::vector<int> entries_;  // row-major
};

// First triple (x,y,z), in lexicographic order, violating the side's
// self-distributivity identity; empty when the table is a shelf.
std::optional<std::array<int, 3>> self_distributivity_witness(const OperationTable& op,
                                                              ShelfSide side);

bool is_left_self_distributive(const OperationTable& op);
bool is_right_self_distributive(const OperationTable& op);
bool is_self_distributive(const OperationTable& op, ShelfSide side);

// Left rack: left shelf with bijective rows; right rack: right shelf with
// bijective columns.
bool is_rack(const OperationTable& op, ShelfSide side);

// f(x∘y) = f(x)∘f(y) with src on the left and dst on the right of the arrow.
bool is_shelf_homomorphism(const Permutation& f, const OperationTable& src,
                           const OperationTable& dst);

// Relabels op by sigma: result[sigma(x)][sigma(y)] = sigma(op[x][y]).
OperationTable relabel(const OperationTable& op, const Permutation& sigma);

// Exhaustive isomorphism search over Sym(n), n <= 6. Returns the witness with
// the lexicographically least image sequence, or nullopt if none exists.
std::optional<Permutation> shelf_isomorphic(const OperationTable& a, const OperationTable& b);

}  // namespace ybset
