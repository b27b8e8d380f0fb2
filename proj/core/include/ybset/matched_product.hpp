#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ybset/action_family.hpp"
#include "ybset/op_table.hpp"
#include "ybset/solution.hpp"

namespace ybset {

enum class MpCase { LL, RR, LR, General };

std::string to_string(MpCase c);

// One violated condition with its witness tuple. The witness lists the
// quantified indices of the condition in the order they are stated:
//   s1 (u,v)   s2 (a,b)   s3 (a,b,u)   s4 (a,u,v)   s5 (a,b,u)   s6 (a,u,v)
//   l1/r1/lr1 (u,v)   l2/r2/lr2 (a,b)   l3/r3/lr3 (a,u)   l4/r4/lr4 (a,u)
//   hom-α (u,x,y)   hom-β (a,x,y)
struct Violation {
  std::string condition;
  std::vector<int> witness;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckReport {
  bool valid = true;
  std::vector<Violation> violations;  // valid ⟺ empty
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

class invalid_system_error : public std::domain_error {
 public:
  explicit invalid_system_error(CheckReport report)
      : std::domain_error("matched product system conditions violated"),
        report_(std::move(report)) {}
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

// Quadruple (r_S, r_T, alpha, beta) with alpha: T -> Sym(S), beta: S -> Sym(T).
class MatchedProductSystem {
 public:
  // Validates size consistency and the six system conditions; throws
  // invalid_system_error carrying the report when any condition fails.
  static MatchedProductSystem make(Solution r_s, Solution r_t, ActionFamily alpha,
                                   ActionFamily beta);
  // Validates size consistency only; for search candidates.
  static MatchedProductSystem make_unchecked(Solution r_s, Solution r_t, ActionFamily alpha,
                                             ActionFamily beta);

  const Solution& r_s() const { return r_s_; }
  const Solution& r_t() const { return r_t_; }
  const ActionFamily& alpha() const { return alpha_; }
  const ActionFamily& beta() const { return beta_; }
  int size_s() const { return r_s_.size(); }
  int size_t_() const { return r_t_.size(); }

  friend bool operator==(const MatchedProductSystem& a, const MatchedProductSystem& b) {
    return a.r_s_ == b.r_s_ && a.r_t_ == b.r_t_ && a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

 private:
  MatchedProductSystem(Solution r_s, Solution r_t, ActionFamily alpha, ActionFamily beta)
      : r_s_(std::move(r_s)), r_t_(std::move(r_t)), alpha_(std::move(alpha)),
        beta_(std::move(beta)) {}

  Solution r_s_, r_t_;
  ActionFamily alpha_, beta_;
};

// Pair encoding on S x T: (a, u) <-> a*|T| + u.
inline int pair_index(int a, int u, int t_size) { return a * t_size + u; }
inline std::pair<int, int> pair_of(int index, int t_size) {
  return {index / t_size, index % t_size};
}

// Six system conditions (s1)-(s6), each quantified as listed on Violation.
// Witnesses come out in lexicographic tuple order, first per condition by
// default, all of them when all_witnesses is set.
CheckReport check_system_general(const MatchedProductSystem& sys, bool all_witnesses = false);

// The product solution on S x T under the pair encoding. Rejects invalid
// systems with invalid_system_error.
Solution build_matched_product(const MatchedProductSystem& sys);

// Per-side recovered shelf tables of a shelf-type solution: Left present iff
// every lambda_x = id (table read from rho as y▷x), Right present iff every
// rho_y = id (table read from lambda as y◁x).
struct ShelfType {
  std::optional<OperationTable> left;
  std::optional<OperationTable> right;
  bool has(ShelfSide side) const {
    return side == ShelfSide::Left ? left.has_value() : right.has_value();
  }
};

ShelfType shelf_type_of(const Solution& sol);

// Simplified criteria for shelf-type factors. LL: alpha_u, beta_a left-shelf
// homomorphisms plus
//   (l1) alpha_{v▷u} = alpha_v^{-1} alpha_u alpha_v
//   (l2) beta_{b▷a}  = beta_b^{-1} beta_a beta_b
//   (l3) alpha_u = alpha_{beta_a^{-1}(u)}      (l4) beta_a = beta_{alpha_u^{-1}(a)}
// RR: right-shelf homomorphisms plus
//   (r1) alpha_{v◁u} = alpha_u alpha_v alpha_u^{-1}
//   (r2) beta_{b◁a}  = beta_a beta_b beta_a^{-1}
//   (r3), (r4) as l3/l4.
// LR: alpha left-shelf homs, beta right-shelf homs, (lr1) as r1, (lr2) as l2,
// (lr3), (lr4) as l3/l4.
// Throws std::invalid_argument("case mismatch...") when the factors are not
// of the declared shelf type, and rejects case General.
CheckReport check_simplified(const MatchedProductSystem& sys, MpCase mp_case,
                             bool all_witnesses = false);

// Closed-form product for a valid simplified system:
//   LL: ((alpha_u(b), beta_a(v)), (alpha_v^{-1}(alpha_u(b)▷a), beta_b^{-1}(beta_a(v)▷u)))
//   RR: ((alpha_u(b)◁a, beta_a(v)◁u), (alpha_{v◁u}^{-1}(a), beta_{b◁a}^{-1}(u)))
//   LR: ((alpha_u(b), beta_a(v)◁u), (alpha_{v◁u}^{-1}(alpha_u(b)▷a), beta_b^{-1}(u)))
// Equals build_matched_product(sys) entrywise.
Solution closed_form(const MatchedProductSystem& sys, MpCase mp_case);

// True iff every alpha_u and beta_a is the identity. Requires a valid
// simplified system of case LL or RR; LR has no such statement and is
// rejected as unsupported.
bool triviality_check(const MatchedProductSystem& sys, MpCase mp_case);

// Componentwise shelf on S x T under the pair encoding:
//   LL:      (a,u)∘(b,v) = (a∘b, u∘v)
//   RR:      (a,u)∘(b,v) = (b∘a, v∘u)
//   LR:      (a,u)∘(b,v) = (a∘b, v∘u)
//   General: (a,u)∘(b,v) = (a∘b, u∘v) with the inputs read as structure shelves
OperationTable direct_product_shelf(const OperationTable& op_s, const OperationTable& op_t,
                                    MpCase mp_case);

}  // namespace ybset
