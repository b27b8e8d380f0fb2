#pragma once

#include <stdexcept>
#include <vector>

#include "ybset/perm.hpp"

namespace ybset {

// Indexed family of permutations: perms[u] = alpha_u in Sym({0..codomain_size-1}),
// u ranging over {0..domain_size-1}. Inverses are precomputed because the
// system conditions consume them inside exhaustive searches.
class ActionFamily {
 public:
  ActionFamily(int domain_size, int codomain_size, std::vector<Permutation> perms)
      : domain_size_(domain_size), codomain_size_(codomain_size), perms_(std::move(perms)) {
    if (domain_size_ <= 0 || codomain_size_ <= 0)
      throw std::invalid_argument("ActionFamily: sizes must be positive");
    if (perms_.size() != static_cast<size_t>(domain_size_))
      throw std::invalid_argument("ActionFamily: expected one permutation per domain element");
    inverses_.reserve(perms_.size());
    for (const auto& p : perms_) {
      if (p.size() != codomain_size_)
        throw std::invalid_argument("ActionFamily: permutation degree mismatch");
      inverses_.push_back(p.inverse());
    }
  }

  static ActionFamily identities(int domain_size, int codomain_size) {
    return ActionFamily(domain_size, codomain_size,
                        std::vector<Permutation>(domain_size, Permutation::identity(codomain_size)));
  }

  int domain_size() const { return domain_size_; }
  int codomain_size() const { return codomain_size_; }
  const Permutation& at(int u) const { return perms_.at(u); }
  const Permutation& inv(int u) const { return inverses_.at(u); }
  const std::vector<Permutation>& perms() const { return perms_; }

  bool all_identity() const {
    for (const auto& p : perms_)
      if (!p.is_identity()) return false;
    return true;
  }

  friend bool operator==(const ActionFamily& a, const ActionFamily& b) {
    return a.domain_size_ == b.domain_size_ && a.codomain_size_ == b.codomain_size_ &&
           a.perms_ == b.perms_;
  }

 private:
  int domain_size_, codomain_size_;
  std::vector<Permutation> perms_;
  std::vector<Permutation> inverses_;
};

}  // namespace ybset
