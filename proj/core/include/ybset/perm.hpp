#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

namespace ybset {

// Permutation of {0, ..., n-1}, stored as its image sequence.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("Permutation: size must be positive");
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
        throw std::invalid_argument("Permutation: image sequence is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    if (n <= 0) throw std::invalid_argument("Permutation: size must be positive");
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i;
    return Permutation(std::move(im));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_.at(x); }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[images_[i]] = i;
    return Permutation(std::move(im));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

// compose(p, q)(x) = p(q(x)): q acts first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("compose: permutation sizes differ");
  std::vector<int> im(p.size());
  for (int x = 0; x < p.size(); ++x) im[x] = p(q(x));
  return Permutation(std::move(im));
}

}  // namespace ybset
