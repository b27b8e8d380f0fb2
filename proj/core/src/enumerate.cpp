#include "ybset/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

namespace ybset {

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "T3.1", "T3.3", "P3.4", "T4.1", "T4.2",
      "P4.3", "T5.1", "P5.2", "T6.1", "S2-correspondence"};
  return ids;
}

bool is_theorem_id(const std::string& id) {
  const auto& ids = theorem_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kU64Max / a) return kU64Max;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

// Lexicographic odometer; false once the digits wrap around to all zeros.
bool next_tuple(std::vector<int>& digits, std::size_t base) {
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    if (++digits[i] < static_cast<int>(base)) return true;
    digits[i] = 0;
  }
  return false;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(images);
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Self-distributivity over the triples that became fully determined when row
// x was filled in (rows 0..x are valid, deeper rows are garbage).
bool rows_consistent(const std::vector<int>& flat, int n, int x, ShelfSide side) {
  if (side == ShelfSide::Left) {
    for (int a = 0; a <= x; ++a)
      for (int b = 0; b <= x; ++b) {
        const int e = flat[a * n + b];  // a▷b
        if (e > x || std::max({a, b, e}) != x) continue;
        for (int c = 0; c < n; ++c)
          if (flat[a * n + flat[b * n + c]] != flat[e * n + flat[a * n + c]]) return false;
      }
  } else {
    for (int a = 0; a <= x; ++a)
      for (int b = 0; b <= x; ++b)
        for (int c = 0; c < n; ++c) {
          const int e = flat[a * n + b];  // a◁b
          const int f = flat[a * n + c];  // a◁c
          if (e > x || f > x || std::max({a, b, e, f}) != x) continue;
          if (flat[e * n + c] != flat[f * n + flat[b * n + c]]) return false;
        }
  }
  return true;
}

void shelf_rows_dfs(int n, ShelfSide side, std::vector<int>& flat, int depth,
                    std::vector<OperationTable>& out) {
  if (depth == n) {
    out.emplace_back(n, flat);
    return;
  }
  std::vector<int> row(n, 0);
  do {
    std::copy(row.begin(), row.end(), flat.begin() + static_cast<std::size_t>(depth) * n);
    if (rows_consistent(flat, n, depth, side)) shelf_rows_dfs(n, side, flat, depth + 1, out);
  } while (next_tuple(row, n));
}

// Unvalidated from_shelf: builds the induced map even when the table is not a
// shelf, so both sides of the correspondence can be tested independently.
Solution induced_map(const OperationTable& op, ShelfSide side) {
  const int n = op.size();
  std::vector<std::vector<int>> lambda(n, std::vector<int>(n)), rho(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (side == ShelfSide::Left) {
        lambda[x][y] = y;
        rho[x][y] = op.at(x, y);
      } else {
        lambda[x][y] = op.at(y, x);
        rho[x][y] = y;
      }
    }
  return Solution::make_unchecked(n, std::move(lambda), std::move(rho));
}

std::vector<int> action_key(const std::vector<Permutation>& alpha,
                            const std::vector<Permutation>& beta) {
  std::vector<int> key;
  for (const auto& p : alpha) key.insert(key.end(), p.images().begin(), p.images().end());
  for (const auto& p : beta) key.insert(key.end(), p.images().begin(), p.images().end());
  return key;
}

struct CaseSides {
  ShelfSide s, t;
};

CaseSides case_sides(MpCase c) {
  switch (c) {
    case MpCase::LL: return {ShelfSide::Left, ShelfSide::Left};
    case MpCase::RR: return {ShelfSide::Right, ShelfSide::Right};
    case MpCase::LR: return {ShelfSide::Left, ShelfSide::Right};
    case MpCase::General: break;
  }
  throw std::logic_error("case_sides: General has no shelf sides");
}

MpCase theorem_case(const std::string& id) {
  if (id == "T3.1" || id == "T3.3" || id == "P3.4") return MpCase::LL;
  if (id == "T4.1" || id == "T4.2" || id == "P4.3") return MpCase::RR;
  if (id == "T5.1" || id == "P5.2") return MpCase::LR;
  return MpCase::General;
}

Counterexample package(std::string detail, const OperationTable* op_s,
                       const OperationTable* op_t, const Solution* r_s, const Solution* r_t,
                       const std::vector<Permutation>* alpha,
                       const std::vector<Permutation>* beta, std::string condition = {},
                       std::vector<int> witness = {}) {
  Counterexample cx;
  cx.detail = std::move(detail);
  if (op_s) cx.op_s = *op_s;
  if (op_t) cx.op_t = *op_t;
  if (r_s) cx.r_s = *r_s;
  if (r_t) cx.r_t = *r_t;
  if (alpha) cx.alpha = *alpha;
  if (beta) cx.beta = *beta;
  cx.condition = std::move(condition);
  cx.witness = std::move(witness);
  return cx;
}

struct SystemContext {
  const OperationTable& op_s;
  const OperationTable& op_t;
  const Solution& r_s;
  const Solution& r_t;
  const std::vector<Permutation>& alpha;
  const std::vector<Permutation>& beta;

  Counterexample found(std::string detail, std::string condition = {},
                       std::vector<int> witness = {}) const {
    return package(std::move(detail), &op_s, &op_t, &r_s, &r_t, &alpha, &beta,
                   std::move(condition), std::move(witness));
  }

  MatchedProductSystem system() const {
    return MatchedProductSystem::make_unchecked(
        r_s, r_t, ActionFamily(r_t.size(), r_s.size(), alpha),
        ActionFamily(r_s.size(), r_t.size(), beta));
  }
};

// T3.1 / T4.1 / T5.1 on one candidate: the two checkers agree; on valid
// systems the closed form matches the built product, the product satisfies
// the braid relation, and left non-degeneracy matches its characterization.
std::optional<Counterexample> equivalence_instance(MpCase c, const SystemContext& ctx) {
  const MatchedProductSystem sys = ctx.system();
  const CheckReport gen = check_system_general(sys);
  const CheckReport simp = check_simplified(sys, c);
  if (gen.valid != simp.valid) {
    const CheckReport& bad = gen.valid ? simp : gen;
    return ctx.found("general and simplified checkers disagree", bad.violations.front().condition,
                     bad.violations.front().witness);
  }
  if (!gen.valid) return std::nullopt;
  const Solution product = build_matched_product(sys);
  if (!(closed_form(sys, c) == product))
    return ctx.found("closed form differs from the built product");
  if (!ybe_holds(product, YbeMode::Direct))
    return ctx.found("product fails the braid relation");
  const bool expected =
      c == MpCase::LL ? true
      : c == MpCase::RR
          ? is_rack(ctx.op_s, ShelfSide::Right) && is_rack(ctx.op_t, ShelfSide::Right)
          : is_rack(ctx.op_t, ShelfSide::Right);
  if (properties(product).left_nondegenerate != expected)
    return ctx.found("left non-degeneracy characterization fails");
  return std::nullopt;
}

// T3.3 / T4.2 on one valid system: the product is itself shelf-type on the
// case's side exactly when every action permutation is the identity.
std::optional<Counterexample> triviality_instance(MpCase c, const SystemContext& ctx,
                                                  const MatchedProductSystem& sys) {
  const ShelfSide side = c == MpCase::LL ? ShelfSide::Left : ShelfSide::Right;
  const bool trivial = triviality_check(sys, c);
  if (shelf_type_of(build_matched_product(sys)).has(side) != trivial)
    return ctx.found("product shelf type does not match action triviality");
  return std::nullopt;
}

// P3.4 / P4.3 / P5.2 on one valid system with left non-degenerate factors:
// the product's structure shelf is the componentwise table.
std::optional<Counterexample> structure_instance(MpCase c, const SystemContext& ctx,
                                                 const MatchedProductSystem& sys) {
  const Solution product = build_matched_product(sys);
  if (!properties(product).left_nondegenerate)
    return ctx.found("product is not left non-degenerate");
  if (!(structure_shelf(product) == direct_product_shelf(ctx.op_s, ctx.op_t, c)))
    return ctx.found("product structure shelf differs from the componentwise table");
  return std::nullopt;
}

enum class CaseClaim { Equivalence, Triviality, StructureShelf };

TheoremReport run_case_theorem(const std::string& id, CaseClaim claim, int ns, int nt,
                               SearchMode mode, std::uint64_t samples, std::uint64_t seed) {
  const MpCase c = theorem_case(id);
  const CaseSides sides = case_sides(c);
  TheoremReport report{id, 0, std::nullopt};

  const auto shelves_s = enumerate_shelves(ns, sides.s);
  const auto shelves_t = enumerate_shelves(nt, sides.t);
  const auto sym_s = symmetric_group(ns);
  const auto sym_t = symmetric_group(nt);
  std::vector<Solution> sols_s, sols_t;
  sols_s.reserve(shelves_s.size());
  sols_t.reserve(shelves_t.size());
  for (const auto& op : shelves_s) sols_s.push_back(from_shelf(op, sides.s));
  for (const auto& op : shelves_t) sols_t.push_back(from_shelf(op, sides.t));

  const auto visit = [&](std::size_t si, std::size_t ti, const std::vector<Permutation>& alpha,
                         const std::vector<Permutation>& beta) {
    const SystemContext ctx{shelves_s[si], shelves_t[ti], sols_s[si], sols_t[ti], alpha, beta};
    if (claim == CaseClaim::Equivalence) {
      ++report.instances;
      if (auto cx = equivalence_instance(c, ctx)) report.counterexample = std::move(cx);
      return !report.counterexample;
    }
    const MatchedProductSystem sys = ctx.system();
    if (!check_simplified(sys, c).valid) return true;
    if (claim == CaseClaim::StructureShelf &&
        !(properties(ctx.r_s).left_nondegenerate && properties(ctx.r_t).left_nondegenerate))
      return true;
    ++report.instances;
    auto cx = claim == CaseClaim::Triviality ? triviality_instance(c, ctx, sys)
                                             : structure_instance(c, ctx, sys);
    if (cx) report.counterexample = std::move(cx);
    return !report.counterexample;
  };

  if (mode == SearchMode::Exhaustive) {
    const std::uint64_t space =
        saturating_mul(saturating_mul(shelves_s.size(), shelves_t.size()),
                       saturating_mul(saturating_pow(sym_s.size(), nt),
                                      saturating_pow(sym_t.size(), ns)));
    if (space > 20'000'000ULL)
      throw std::invalid_argument(
          "verify_theorem: search space too large for exhaustive mode; use Sampled");
    for (std::size_t si = 0; si < shelves_s.size(); ++si)
      for (std::size_t ti = 0; ti < shelves_t.size(); ++ti) {
        std::vector<int> ai(nt, 0), bi(ns, 0);
        do {
          std::vector<Permutation> alpha, beta;
          alpha.reserve(nt);
          beta.reserve(ns);
          for (int u = 0; u < nt; ++u) alpha.push_back(sym_s[ai[u]]);
          for (int a = 0; a < ns; ++a) beta.push_back(sym_t[bi[a]]);
          if (!visit(si, ti, alpha, beta)) return report;
        } while (next_tuple(bi, sym_t.size()) || next_tuple(ai, sym_s.size()));
      }
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const auto si = static_cast<std::size_t>(rng() % shelves_s.size());
      const auto ti = static_cast<std::size_t>(rng() % shelves_t.size());
      std::vector<Permutation> alpha, beta;
      alpha.reserve(nt);
      beta.reserve(ns);
      for (int u = 0; u < nt; ++u) alpha.push_back(sym_s[rng() % sym_s.size()]);
      for (int a = 0; a < ns; ++a) beta.push_back(sym_t[rng() % sym_t.size()]);
      if (!visit(si, ti, alpha, beta)) break;
    }
  }
  return report;
}

// T6.1: over left non-degenerate factor pairs and all (sampled) action pairs,
// every valid product is left non-degenerate, its structure shelf is the
// componentwise product of the factor structure shelves, and the table does
// not depend on which valid action pair produced it.
TheoremReport run_t61(int ns, int nt, SearchMode mode, std::uint64_t samples,
                      std::uint64_t seed) {
  TheoremReport report{"T6.1", 0, std::nullopt};
  if (mode == SearchMode::Exhaustive && (ns != 2 || nt != 2))
    throw std::invalid_argument("verify_theorem: T6.1 exhaustive mode requires sizes (2, 2)");

  const auto pool = [&](int n) {
    std::vector<Solution> out;
    for (auto& sol : n == 2 ? enumerate_solutions(2, SearchMode::Exhaustive)
                            : enumerate_solutions(n, SearchMode::Sampled, samples, seed))
      if (properties(sol).left_nondegenerate) out.push_back(std::move(sol));
    return out;
  };
  const auto pool_s = pool(ns);
  const auto pool_t = pool(nt);
  const auto sym_s = symmetric_group(ns);
  const auto sym_t = symmetric_group(nt);

  const auto visit = [&](const Solution& rs, const Solution& rt,
                         const std::vector<Permutation>& alpha,
                         const std::vector<Permutation>& beta,
                         std::optional<OperationTable>& first_seen) {
    ++report.instances;
    const MatchedProductSystem sys = MatchedProductSystem::make_unchecked(
        rs, rt, ActionFamily(nt, ns, alpha), ActionFamily(ns, nt, beta));
    if (!check_system_general(sys).valid) return true;
    const auto record = [&](std::string detail) {
      report.counterexample = package(std::move(detail), nullptr, nullptr, &rs, &rt, &alpha, &beta);
    };
    const Solution product = build_matched_product(sys);
    if (!properties(product).left_nondegenerate) {
      record("product is not left non-degenerate");
      return false;
    }
    const OperationTable got = structure_shelf(product);
    if (!(got == direct_product_shelf(structure_shelf(rs), structure_shelf(rt), MpCase::General))) {
      record("product structure shelf differs from the componentwise table");
      return false;
    }
    if (first_seen && !(got == *first_seen)) {
      record("product structure shelf varies with the actions");
      return false;
    }
    if (!first_seen) first_seen = got;
    return true;
  };

  if (mode == SearchMode::Exhaustive) {
    for (const auto& rs : pool_s)
      for (const auto& rt : pool_t) {
        std::optional<OperationTable> first_seen;
        std::vector<int> ai(nt, 0), bi(ns, 0);
        do {
          std::vector<Permutation> alpha, beta;
          alpha.reserve(nt);
          beta.reserve(ns);
          for (int u = 0; u < nt; ++u) alpha.push_back(sym_s[ai[u]]);
          for (int a = 0; a < ns; ++a) beta.push_back(sym_t[bi[a]]);
          if (!visit(rs, rt, alpha, beta, first_seen)) return report;
        } while (next_tuple(bi, sym_t.size()) || next_tuple(ai, sym_s.size()));
      }
  } else {
    if (pool_s.empty() || pool_t.empty()) return report;
    std::mt19937_64 rng(seed);
    std::map<std::pair<std::size_t, std::size_t>, std::optional<OperationTable>> first_seen;
    for (std::uint64_t s = 0; s < samples; ++s) {
      const auto i = static_cast<std::size_t>(rng() % pool_s.size());
      const auto j = static_cast<std::size_t>(rng() % pool_t.size());
      std::vector<Permutation> alpha, beta;
      alpha.reserve(nt);
      beta.reserve(ns);
      for (int u = 0; u < nt; ++u) alpha.push_back(sym_s[rng() % sym_s.size()]);
      for (int a = 0; a < ns; ++a) beta.push_back(sym_t[rng() % sym_t.size()]);
      if (!visit(pool_s[i], pool_t[j], alpha, beta, first_seen[{i, j}])) break;
    }
  }
  return report;
}

// S2-correspondence: a table is self-distributive on a side exactly when the
// induced map satisfies the braid relation. Exhaustive over every table on
// 1..max_n elements; Sampled draws tables of size max_n.
TheoremReport run_s2(int max_n, SearchMode mode, std::uint64_t samples, std::uint64_t seed) {
  TheoremReport report{"S2-correspondence", 0, std::nullopt};
  const auto instance = [&](const OperationTable& op) {
    ++report.instances;
    for (ShelfSide side : {ShelfSide::Left, ShelfSide::Right}) {
      const bool sd = is_self_distributive(op, side);
      if (sd != ybe_holds(induced_map(op, side), YbeMode::Direct)) {
        report.counterexample =
            package("self-distributivity and the braid relation disagree", &op, nullptr, nullptr,
                    nullptr, nullptr, nullptr, {}, {side == ShelfSide::Left ? 0 : 1});
        return false;
      }
    }
    return true;
  };
  if (max_n < 1) throw std::invalid_argument("verify_theorem: size must be positive");
  if (mode == SearchMode::Exhaustive) {
    if (max_n > 3)
      throw std::invalid_argument(
          "verify_theorem: S2-correspondence exhaustive mode supports sizes 1..3");
    for (int n = 1; n <= max_n; ++n) {
      std::vector<int> flat(static_cast<std::size_t>(n) * n, 0);
      do {
        if (!instance(OperationTable(n, flat))) return report;
      } while (next_tuple(flat, n));
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      std::vector<int> flat(static_cast<std::size_t>(max_n) * max_n);
      for (auto& v : flat) v = static_cast<int>(rng() % max_n);
      if (!instance(OperationTable(max_n, flat))) break;
    }
  }
  return report;
}

}  // namespace

std::vector<OperationTable> enumerate_shelves(int n, ShelfSide side, int workers) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("enumerate_shelves: size unsupported (1 <= n <= 4)");
  const int row_count = static_cast<int>(saturating_pow(n, n));
  const auto branch = [&](int first, std::vector<OperationTable>& out) {
    std::vector<int> flat(static_cast<std::size_t>(n) * n, 0);
    int r = first;
    for (int y = n - 1; y >= 0; --y) {
      flat[y] = r % n;
      r /= n;
    }
    if (rows_consistent(flat, n, 0, side)) shelf_rows_dfs(n, side, flat, 1, out);
  };
  if (workers <= 1) {
    std::vector<OperationTable> out;
    for (int first = 0; first < row_count; ++first) branch(first, out);
    return out;
  }
  // One slot per first row keeps the merged output in lexicographic order no
  // matter how the branches are scheduled.
  std::vector<std::vector<OperationTable>> slots(row_count);
  const int count = std::min(workers, row_count);
  std::vector<std::thread> threads;
  threads.reserve(count);
  for (int w = 0; w < count; ++w)
    threads.emplace_back([&, w] {
      for (int first = w; first < row_count; first += count) branch(first, slots[first]);
    });
  for (auto& t : threads) t.join();
  std::vector<OperationTable> out;
  for (auto& slot : slots)
    for (auto& op : slot) out.push_back(std::move(op));
  return out;
}

std::vector<Solution> enumerate_solutions(int n, SearchMode mode, std::uint64_t samples,
                                          std::uint64_t seed) {
  if (n < 2 || n > 3)
    throw std::invalid_argument("enumerate_solutions: size unsupported (2 <= n <= 3)");
  const int cells = n * n;
  const auto candidate = [&](const std::vector<int>& lam, const std::vector<int>& rho) {
    std::vector<std::vector<int>> l(n, std::vector<int>(n)), r(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        l[x][y] = lam[x * n + y];
        r[x][y] = rho[x * n + y];
      }
    return Solution::make_unchecked(n, std::move(l), std::move(r));
  };
  std::vector<Solution> out;
  if (mode == SearchMode::Exhaustive) {
    if (n != 2)
      throw std::invalid_argument("enumerate_solutions: exhaustive mode supports size 2 only");
    std::vector<int> digits(2 * cells, 0);  // lambda cells then rho cells, row-major
    do {
      Solution cand = candidate({digits.begin(), digits.begin() + cells},
                                {digits.begin() + cells, digits.end()});
      if (ybe_holds(cand, YbeMode::Direct)) out.push_back(std::move(cand));
    } while (next_tuple(digits, n));
    return out;
  }
  std::mt19937_64 rng(seed);
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<int> lam(cells), rho(cells);
    for (auto& v : lam) v = static_cast<int>(rng() % n);
    for (auto& v : rho) v = static_cast<int>(rng() % n);
    Solution cand = candidate(lam, rho);
    if (!ybe_holds(cand, YbeMode::Direct)) continue;
    if (seen.emplace(std::move(lam), std::move(rho)).second) out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MatchedProductSystem> search_systems(const Solution& r_s, const Solution& r_t,
                                                 const SearchSpec& spec) {
  if (spec.size_s != r_s.size() || spec.size_t_ != r_t.size())
    throw std::invalid_argument("search_systems: spec sizes do not match the factor solutions");
  const int ns = r_s.size();
  const int nt = r_t.size();
  const auto sym_s = symmetric_group(ns);
  const auto sym_t = symmetric_group(nt);
  const auto is_valid = [&](const MatchedProductSystem& sys) {
    return spec.mp_case == MpCase::General ? check_system_general(sys).valid
                                           : check_simplified(sys, spec.mp_case).valid;
  };
  std::vector<MatchedProductSystem> out;
  if (spec.mode == SearchMode::Exhaustive) {
    if (ns > 3 || nt > 3)
      throw std::invalid_argument("search_systems: exhaustive mode requires sizes at most 3");
    if (saturating_mul(saturating_pow(sym_s.size(), nt), saturating_pow(sym_t.size(), ns)) >
        100'000'000ULL)
      throw std::invalid_argument("search_systems: action space exceeds the exhaustive bound");
    std::vector<int> ai(nt, 0), bi(ns, 0);
    do {
      std::vector<Permutation> alpha, beta;
      alpha.reserve(nt);
      beta.reserve(ns);
      for (int u = 0; u < nt; ++u) alpha.push_back(sym_s[ai[u]]);
      for (int a = 0; a < ns; ++a) beta.push_back(sym_t[bi[a]]);
      MatchedProductSystem sys = MatchedProductSystem::make_unchecked(
          r_s, r_t, ActionFamily(nt, ns, alpha), ActionFamily(ns, nt, beta));
      if (is_valid(sys)) out.push_back(std::move(sys));
    } while (next_tuple(bi, sym_t.size()) || next_tuple(ai, sym_s.size()));
    return out;
  }
  std::mt19937_64 rng(spec.seed);
  std::set<std::vector<int>> seen;
  for (std::uint64_t s = 0; s < spec.samples; ++s) {
    std::vector<Permutation> alpha, beta;
    alpha.reserve(nt);
    beta.reserve(ns);
    for (int u = 0; u < nt; ++u) alpha.push_back(sym_s[rng() % sym_s.size()]);
    for (int a = 0; a < ns; ++a) beta.push_back(sym_t[rng() % sym_t.size()]);
    MatchedProductSystem sys = MatchedProductSystem::make_unchecked(
        r_s, r_t, ActionFamily(nt, ns, alpha), ActionFamily(ns, nt, beta));
    if (!is_valid(sys)) continue;
    if (seen.insert(action_key(alpha, beta)).second) out.push_back(std::move(sys));
  }
  std::sort(out.begin(), out.end(), [](const MatchedProductSystem& a, const MatchedProductSystem& b) {
    return action_key(a.alpha().perms(), a.beta().perms()) <
           action_key(b.alpha().perms(), b.beta().perms());
  });
  return out;
}

OperationTable canonical_form(const OperationTable& op) {
  const int n = op.size();
  if (n > 6) throw std::invalid_argument("canonical_form: size unsupported (n <= 6)");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<int> best = op.entries();
  do {
    const OperationTable cand = relabel(op, Permutation(images));
    if (cand.entries() < best) best = cand.entries();
  } while (std::next_permutation(images.begin(), images.end()));
  return OperationTable(n, std::move(best));
}

std::vector<OperationTable> classify_up_to_iso(const std::vector<OperationTable>& tables) {
  std::vector<OperationTable> canon;
  canon.reserve(tables.size());
  for (const auto& t : tables) canon.push_back(canonical_form(t));
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return canon;
}

TheoremReport verify_theorem(const std::string& theorem_id, int size_s, int size_t_,
                             SearchMode mode, std::uint64_t samples, std::uint64_t seed) {
  if (!is_theorem_id(theorem_id))
    throw std::invalid_argument("verify_theorem: unknown theorem id " + theorem_id);
  if (theorem_id == "S2-correspondence") return run_s2(size_s, mode, samples, seed);
  if (theorem_id == "T6.1") return run_t61(size_s, size_t_, mode, samples, seed);
  const CaseClaim claim =
      theorem_id == "T3.1" || theorem_id == "T4.1" || theorem_id == "T5.1"
          ? CaseClaim::Equivalence
      : theorem_id == "T3.3" || theorem_id == "T4.2" ? CaseClaim::Triviality
                                                     : CaseClaim::StructureShelf;
  return run_case_theorem(theorem_id, claim, size_s, size_t_, mode, samples, seed);
}

std::vector<TheoremReport> run_theorem_suite(int max_n, std::uint64_t seed) {
  if (max_n < 2) throw std::invalid_argument("run_theorem_suite: max_n must be at least 2");
  std::vector<TheoremReport> out;
  for (const auto& id : theorem_ids())
    out.push_back(id == "S2-correspondence"
                      ? verify_theorem(id, std::min(max_n, 3), 0, SearchMode::Exhaustive)
                      : verify_theorem(id, 2, 2, SearchMode::Exhaustive));
  if (max_n >= 3)
    for (const std::string id : {"T3.1", "T4.1", "T5.1"})
      out.push_back(verify_theorem(id, 3, 3, SearchMode::Sampled, 10000, seed));
  return out;
}

bool counterexample_replays(const TheoremReport& report) {
  if (!report.counterexample) return false;
  const Counterexample& cx = *report.counterexample;
  const std::string& id = report.theorem;

  if (id == "S2-correspondence") {
    if (!cx.op_s || cx.witness.empty()) return false;
    const ShelfSide side = cx.witness.front() == 0 ? ShelfSide::Left : ShelfSide::Right;
    return is_self_distributive(*cx.op_s, side) !=
           ybe_holds(induced_map(*cx.op_s, side), YbeMode::Direct);
  }

  if (!cx.r_s || !cx.r_t || !cx.alpha || !cx.beta) return false;
  try {
    const MatchedProductSystem sys = MatchedProductSystem::make_unchecked(
        *cx.r_s, *cx.r_t, ActionFamily(cx.r_t->size(), cx.r_s->size(), *cx.alpha),
        ActionFamily(cx.r_s->size(), cx.r_t->size(), *cx.beta));
    const MpCase c = theorem_case(id);

    if (!cx.condition.empty()) {
      const bool general_condition = cx.condition.size() == 2 && cx.condition[0] == 's';
      const CheckReport rep = general_condition ? check_system_general(sys, true)
                                                : check_simplified(sys, c, true);
      const Violation sought{cx.condition, cx.witness};
      return std::find(rep.violations.begin(), rep.violations.end(), sought) !=
             rep.violations.end();
    }

    if (id == "T6.1") {
      if (!check_system_general(sys).valid) return false;
      const Solution product = build_matched_product(sys);
      if (!properties(product).left_nondegenerate) return true;
      if (!(properties(*cx.r_s).left_nondegenerate && properties(*cx.r_t).left_nondegenerate))
        return false;
      return !(structure_shelf(product) == direct_product_shelf(structure_shelf(*cx.r_s),
                                                                structure_shelf(*cx.r_t),
                                                                MpCase::General));
    }

    if (!cx.op_s || !cx.op_t) return false;
    const SystemContext ctx{*cx.op_s, *cx.op_t, *cx.r_s, *cx.r_t, *cx.alpha, *cx.beta};
    if (id == "T3.1" || id == "T4.1" || id == "T5.1")
      return equivalence_instance(c, ctx).has_value();
    if (!check_simplified(sys, c).valid) return false;
    if (id == "T3.3" || id == "T4.2") return triviality_instance(c, ctx, sys).has_value();
    if (!(properties(*cx.r_s).left_nondegenerate && properties(*cx.r_t).left_nondegenerate))
      return false;
    return structure_instance(c, ctx, sys).has_value();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace ybset
