#include "ybset/matched_product.hpp"

#include <climits>
#include <string>

namespace ybset {

std::string to_string(MpCase c) {
  switch (c) {
    case MpCase::LL: return "LL";
    case MpCase::RR: return "RR";
    case MpCase::LR: return "LR";
    case MpCase::General: return "General";
  }
  return "?";
}

namespace {

void require_consistent(const Solution& r_s, const Solution& r_t, const ActionFamily& alpha,
                        const ActionFamily& beta) {
  if (alpha.domain_size() != r_t.size() || alpha.codomain_size() != r_s.size())
    throw std::invalid_argument("MatchedProductSystem: alpha must map T into Sym(S)");
  if (beta.domain_size() != r_s.size() || beta.codomain_size() != r_t.size())
    throw std::invalid_argument("MatchedProductSystem: beta must map S into Sym(T)");
}

// Collects violations of one condition: lex-first witness by default, every
// witness when all_witnesses is set.
class Collector {
 public:
  Collector(CheckReport& report, bool all_witnesses)
      : report_(report), all_(all_witnesses) {}

  void fail(const char* condition, std::vector<int> witness) {
    if (!all_ && last_ == condition) return;
    last_ = condition;
    report_.valid = false;
    report_.violations.push_back({condition, std::move(witness)});
  }

 private:
  CheckReport& report_;
  bool all_;
  std::string last_;
};

}  // namespace

MatchedProductSystem MatchedProductSystem::make_unchecked(Solution r_s, Solution r_t,
                                                          ActionFamily alpha, ActionFamily beta) {
  require_consistent(r_s, r_t, alpha, beta);
  return MatchedProductSystem(std::move(r_s), std::move(r_t), std::move(alpha), std::move(beta));
}

MatchedProductSystem MatchedProductSystem::make(Solution r_s, Solution r_t, ActionFamily alpha,
                                                ActionFamily beta) {
  auto sys = make_unchecked(std::move(r_s), std::move(r_t), std::move(alpha), std::move(beta));
  if (auto report = check_system_general(sys); !report.valid)
    throw invalid_system_error(std::move(report));
  return sys;
}

CheckReport check_system_general(const MatchedProductSystem& sys, bool all_witnesses) {
  const Solution& rs = sys.r_s();
  const Solution& rt = sys.r_t();
  const ActionFamily& al = sys.alpha();
  const ActionFamily& be = sys.beta();
  const int ns = sys.size_s();
  const int nt = sys.size_t_();

  CheckReport report;
  Collector out(report, all_witnesses);

  // (s1) alpha_u alpha_v = alpha_{lambda_u(v)} alpha_{rho_v(u)}
  for (int u = 0; u < nt; ++u)
    for (int v = 0; v < nt; ++v) {
      const Permutation& lhs2 = al.at(v);
      const Permutation& rhs1 = al.at(rt.lambda(u, v));
      const Permutation& rhs2 = al.at(rt.rho(v, u));
      for (int x = 0; x < ns; ++x)
        if (al.at(u)(lhs2(x)) != rhs1(rhs2(x))) {
          out.fail("s1", {u, v});
          break;
        }
    }
  // (s2) beta_a beta_b = beta_{lambda_a(b)} beta_{rho_b(a)}
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b) {
      const Permutation& rhs1 = be.at(rs.lambda(a, b));
      const Permutation& rhs2 = be.at(rs.rho(b, a));
      for (int x = 0; x < nt; ++x)
        if (be.at(a)(be.at(b)(x)) != rhs1(rhs2(x))) {
          out.fail("s2", {a, b});
          break;
        }
    }
  // (s3) rho_{alpha_u^{-1}(b)} alpha_{beta_a(u)}^{-1}(a)
  //        = alpha_{beta_{rho_b(a)} beta_b^{-1}(u)}^{-1} rho_b(a)
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int u = 0; u < nt; ++u) {
        const int lhs = rs.rho(al.inv(u)(b), al.inv(be.at(a)(u))(a));
        const int rba = rs.rho(b, a);
        const int rhs = al.inv(be.at(rba)(be.inv(b)(u)))(rba);
        if (lhs != rhs) out.fail("s3", {a, b, u});
      }
  // (s4) rho_{beta_a^{-1}(v)} beta_{alpha_u(a)}^{-1}(u)
  //        = beta_{alpha_{rho_v(u)} alpha_v^{-1}(a)}^{-1} rho_v(u)
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int v = 0; v < nt; ++v) {
        const int lhs = rt.rho(be.inv(a)(v), be.inv(al.at(u)(a))(u));
        const int rvu = rt.rho(v, u);
        const int rhs = be.inv(al.at(rvu)(al.inv(v)(a)))(rvu);
        if (lhs != rhs) out.fail("s4", {a, u, v});
      }
  // (s5) lambda_a alpha_{beta_a^{-1}(u)} = alpha_u lambda_{alpha_u^{-1}(a)}
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int u = 0; u < nt; ++u)
        if (rs.lambda(a, al.at(be.inv(a)(u))(b)) != al.at(u)(rs.lambda(al.inv(u)(a), b)))
          out.fail("s5", {a, b, u});
  // (s6) lambda_u beta_{alpha_u^{-1}(a)} = beta_a lambda_{beta_a^{-1}(u)}
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int v = 0; v < nt; ++v)
        if (rt.lambda(u, be.at(al.inv(u)(a))(v)) != be.at(a)(rt.lambda(be.inv(a)(u), v)))
          out.fail("s6", {a, u, v});

  return report;
}

namespace {

int checked_pair_count(int ns, int nt) {
  if (nt != 0 && ns > INT_MAX / nt) throw std::invalid_argument("pair carrier size overflow");
  return ns * nt;
}

}  // namespace

Solution build_matched_product(const MatchedProductSystem& sys) {
  if (auto report = check_system_general(sys); !report.valid)
    throw invalid_system_error(std::move(report));

  const Solution& rs = sys.r_s();
  const Solution& rt = sys.r_t();
  const ActionFamily& al = sys.alpha();
  const ActionFamily& be = sys.beta();
  const int ns = sys.size_s();
  const int nt = sys.size_t_();
  const int n = checked_pair_count(ns, nt);

  std::vector<std::vector<int>> lambda(n, std::vector<int>(n));
  std::vector<std::vector<int>> rho(n, std::vector<int>(n));
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int b = 0; b < ns; ++b)
        for (int v = 0; v < nt; ++v) {
          const int abar = al.inv(u)(a);
          const int ubar = be.inv(a)(u);
          const int A = al.at(u)(rs.lambda(abar, b));
          const int U = be.at(a)(rt.lambda(ubar, v));
          const int Abar = al.inv(U)(A);
          const int Ubar = be.inv(A)(U);
          const int p = al.inv(Ubar)(rs.rho(al.at(ubar)(b), a));
          const int q = be.inv(Abar)(rt.rho(be.at(abar)(v), u));
          lambda[pair_index(a, u, nt)][pair_index(b, v, nt)] = pair_index(A, U, nt);
          rho[pair_index(b, v, nt)][pair_index(a, u, nt)] = pair_index(p, q, nt);
        }
  // The product of a valid system is a solution; verified exhaustively in the
  // theorem suite, so the constructor need not recheck it.
  return Solution::make_unchecked(n, std::move(lambda), std::move(rho));
}

ShelfType shelf_type_of(const Solution& sol) {
  const int n = sol.size();
  ShelfType type;
  bool lambda_id = true, rho_id = true;
  for (int x = 0; x < n && (lambda_id || rho_id); ++x)
    for (int y = 0; y < n; ++y) {
      if (sol.lambda(x, y) != y) lambda_id = false;
      if (sol.rho(x, y) != y) rho_id = false;
    }
  if (lambda_id) {
    // r(x,y) = (y, y▷x): table[y][x] = rho_y(x)
    std::vector<int> flat(sol.rho_entries());
    type.left = OperationTable(n, std::move(flat));
  }
  if (rho_id) {
    // r(x,y) = (y◁x, x): table[y][x] = lambda_x(y)
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) flat[static_cast<size_t>(y) * n + x] = sol.lambda(x, y);
    type.right = OperationTable(n, std::move(flat));
  }
  return type;
}

namespace {

struct CaseTables {
  OperationTable op_s;
  OperationTable op_t;
};

CaseTables case_tables(const MatchedProductSystem& sys, MpCase mp_case) {
  const ShelfType ts = shelf_type_of(sys.r_s());
  const ShelfType tt = shelf_type_of(sys.r_t());
  switch (mp_case) {
    case MpCase::LL:
      if (!ts.left || !tt.left)
        throw std::invalid_argument("case mismatch: LL requires both factors left-shelf-type");
      return {*ts.left, *tt.left};
    case MpCase::RR:
      if (!ts.right || !tt.right)
        throw std::invalid_argument("case mismatch: RR requires both factors right-shelf-type");
      return {*ts.right, *tt.right};
    case MpCase::LR:
      if (!ts.left || !tt.right)
        throw std::invalid_argument(
            "case mismatch: LR requires a left-shelf-type S factor and a right-shelf-type T factor");
      return {*ts.left, *tt.right};
    case MpCase::General:
      break;
  }
  throw std::invalid_argument("case mismatch: expected LL, RR, or LR");
}

}  // namespace

CheckReport check_simplified(const MatchedProductSystem& sys, MpCase mp_case,
                             bool all_witnesses) {
  const auto [op_s, op_t] = case_tables(sys, mp_case);
  const ActionFamily& al = sys.alpha();
  const ActionFamily& be = sys.beta();
  const int ns = sys.size_s();
  const int nt = sys.size_t_();

  CheckReport report;
  Collector out(report, all_witnesses);

  for (int u = 0; u < nt; ++u)
    for (int x = 0; x < ns; ++x)
      for (int y = 0; y < ns; ++y)
        if (al.at(u)(op_s.at(x, y)) != op_s.at(al.at(u)(x), al.at(u)(y)))
          out.fail("hom-α", {u, x, y});
  for (int a = 0; a < ns; ++a)
    for (int x = 0; x < nt; ++x)
      for (int y = 0; y < nt; ++y)
        if (be.at(a)(op_t.at(x, y)) != op_t.at(be.at(a)(x), be.at(a)(y)))
          out.fail("hom-β", {a, x, y});

  const char* c1 = mp_case == MpCase::LL ? "l1" : mp_case == MpCase::RR ? "r1" : "lr1";
  const char* c2 = mp_case == MpCase::LL ? "l2" : mp_case == MpCase::RR ? "r2" : "lr2";
  const char* c3 = mp_case == MpCase::LL ? "l3" : mp_case == MpCase::RR ? "r3" : "lr3";
  const char* c4 = mp_case == MpCase::LL ? "l4" : mp_case == MpCase::RR ? "r4" : "lr4";

  // Conjugation shape of (s1): LL: alpha_{v▷u} = alpha_v^{-1} alpha_u alpha_v;
  // RR/LR: alpha_{v◁u} = alpha_u alpha_v alpha_u^{-1}.
  for (int u = 0; u < nt; ++u)
    for (int v = 0; v < nt; ++v) {
      const Permutation& sub = al.at(op_t.at(v, u));
      for (int x = 0; x < ns; ++x) {
        const bool ok = mp_case == MpCase::LL
                            ? sub(x) == al.inv(v)(al.at(u)(al.at(v)(x)))
                            : sub(x) == al.at(u)(al.at(v)(al.inv(u)(x)));
        if (!ok) {
          out.fail(c1, {u, v});
          break;
        }
      }
    }
  // Conjugation shape of (s2): LL/LR: beta_{b▷a} = beta_b^{-1} beta_a beta_b;
  // RR: beta_{b◁a} = beta_a beta_b beta_a^{-1}.
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b) {
      const Permutation& sub = be.at(op_s.at(b, a));
      for (int x = 0; x < nt; ++x) {
        const bool ok = mp_case == MpCase::RR
                            ? sub(x) == be.at(a)(be.at(b)(be.inv(a)(x)))
                            : sub(x) == be.inv(b)(be.at(a)(be.at(b)(x)));
        if (!ok) {
          out.fail(c2, {a, b});
          break;
        }
      }
    }
  // alpha_u = alpha_{beta_a^{-1}(u)}
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      if (al.at(u) != al.at(be.inv(a)(u))) out.fail(c3, {a, u});
  // beta_a = beta_{alpha_u^{-1}(a)}
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      if (be.at(a) != be.at(al.inv(u)(a))) out.fail(c4, {a, u});

  return report;
}

Solution closed_form(const MatchedProductSystem& sys, MpCase mp_case) {
  if (auto report = check_simplified(sys, mp_case); !report.valid)
    throw invalid_system_error(std::move(report));
  const auto [op_s, op_t] = case_tables(sys, mp_case);
  const ActionFamily& al = sys.alpha();
  const ActionFamily& be = sys.beta();
  const int ns = sys.size_s();
  const int nt = sys.size_t_();
  const int n = checked_pair_count(ns, nt);

  std::vector<std::vector<int>> lambda(n, std::vector<int>(n));
  std::vector<std::vector<int>> rho(n, std::vector<int>(n));
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int b = 0; b < ns; ++b)
        for (int v = 0; v < nt; ++v) {
          int A, U, p, q;
          switch (mp_case) {
            case MpCase::LL:
              A = al.at(u)(b);
              U = be.at(a)(v);
              p = al.inv(v)(op_s.at(A, a));
              q = be.inv(b)(op_t.at(U, u));
              break;
            case MpCase::RR:
              A = op_s.at(al.at(u)(b), a);
              U = op_t.at(be.at(a)(v), u);
              p = al.inv(op_t.at(v, u))(a);
              q = be.inv(op_s.at(b, a))(u);
              break;
            default:  // LR; General was rejected by case_tables
              A = al.at(u)(b);
              U = op_t.at(be.at(a)(v), u);
              p = al.inv(op_t.at(v, u))(op_s.at(al.at(u)(b), a));
              q = be.inv(b)(u);
              break;
          }
          lambda[pair_index(a, u, nt)][pair_index(b, v, nt)] = pair_index(A, U, nt);
          rho[pair_index(b, v, nt)][pair_index(a, u, nt)] = pair_index(p, q, nt);
        }
  return Solution::make_unchecked(n, std::move(lambda), std::move(rho));
}

bool triviality_check(const MatchedProductSystem& sys, MpCase mp_case) {
  if (mp_case != MpCase::LL && mp_case != MpCase::RR)
    throw std::invalid_argument("triviality_check: unsupported case " + to_string(mp_case));
  if (auto report = check_simplified(sys, mp_case); !report.valid)
    throw invalid_system_error(std::move(report));
  return sys.alpha().all_identity() && sys.beta().all_identity();
}

OperationTable direct_product_shelf(const OperationTable& op_s, const OperationTable& op_t,
                                    MpCase mp_case) {
  const int ns = op_s.size();
  const int nt = op_t.size();
  const int n = checked_pair_count(ns, nt);
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int b = 0; b < ns; ++b)
        for (int v = 0; v < nt; ++v) {
          int s, t;
          switch (mp_case) {
            case MpCase::RR:
              s = op_s.at(b, a);
              t = op_t.at(v, u);
              break;
            case MpCase::LR:
              s = op_s.at(a, b);
              t = op_t.at(v, u);
              break;
            default:  // LL and General share the componentwise formula
              s = op_s.at(a, b);
              t = op_t.at(u, v);
              break;
          }
          flat[static_cast<size_t>(pair_index(a, u, nt)) * n + pair_index(b, v, nt)] =
              pair_index(s, t, nt);
        }
  return OperationTable(n, std::move(flat));
}

}  // namespace ybset
