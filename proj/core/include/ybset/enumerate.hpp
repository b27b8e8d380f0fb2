#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybset/matched_product.hpp"
#include "ybset/op_table.hpp"
#include "ybset/solution.hpp"

namespace ybset {

enum class SearchMode { Exhaustive, Sampled };

struct SearchSpec {
  int size_s = 2;
  int size_t_ = 2;
  MpCase mp_case = MpCase::General;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t samples = 10000;  // Sampled only
  std::uint64_t seed = 0;
  // Classify enumerated tables up to isomorphism; exhaustive system searches
  // cannot produce duplicates, so this has no effect on search_systems.
  bool dedupe = false;
};

// Everything needed to replay a failed theorem instance: the inputs plus the
// first offending condition/witness, if the failure was condition-level.
struct Counterexample {
  std::string detail;
  std::optional<OperationTable> op_s, op_t;
  std::optional<Solution> r_s, r_t;
  std::optional<std::vector<Permutation>> alpha, beta;
  std::string condition;
  std::vector<int> witness;
};

struct TheoremReport {
  std::string theorem;
  std::uint64_t instances = 0;
  std::optional<Counterexample> counterexample;
};

// The verifiable claim ids. S2-correspondence covers the shelf <-> solution
// equivalence; the rest are the matched-product statements named in
// matched_product.hpp.
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);

// All tables on n elements passing the side's self-distributivity test, in
// lexicographic order of the flattened table. n <= 4; the n = 4 space
// (4^16 tables) is walked by a row-wise generator that prunes a prefix as
// soon as some fully-determined triple violates the identity. Workers > 1
// partitions the first-row branches across threads; output order does not
// depend on the partition.
std::vector<OperationTable> enumerate_shelves(int n, ShelfSide side, int workers = 1);

// All (lambda, rho) grids on n elements passing the braid relation, in
// lexicographic order. n = 2 is exhaustive; n = 3 is supported only in
// Sampled mode (deduplicated, sorted). Other sizes are unsupported.
std::vector<Solution> enumerate_solutions(int n, SearchMode mode = SearchMode::Exhaustive,
                                          std::uint64_t samples = 10000,
                                          std::uint64_t seed = 0);

// All (alpha, beta) action pairs passing the case's checker (General uses
// check_system_general, LL/RR/LR use check_simplified), ordered
// lexicographically on the concatenated image sequences. Sampled mode draws
// spec.samples seeded candidates instead and deduplicates.
std::vector<MatchedProductSystem> search_systems(const Solution& r_s, const Solution& r_t,
                                                 const SearchSpec& spec);

// Lexicographically least relabeling of op; n <= 6.
OperationTable canonical_form(const OperationTable& op);

// One representative (canonical form) per isomorphism class, ascending;
// invariant under permutation of the input list.
std::vector<OperationTable> classify_up_to_iso(const std::vector<OperationTable>& tables);

// Runs the claim's exhaustive or sampled check and reports the instance count
// and first counterexample, if any.
//
//   S2-correspondence  sizes (n, -): every table on 1..n elements, both sides:
//                      self-distributive ⟺ the induced map passes the braid
//                      relation. Instances count tables.
//   T3.1/T4.1/T5.1     sizes (s, t): over shelf pairs of the case's sides and
//                      all action pairs (Exhaustive) or seeded samples:
//                      general check ⟺ simplified check; on valid systems the
//                      closed form equals the built product, the product
//                      passes the braid relation, and the left-nondegeneracy
//                      characterization holds. Instances count candidate
//                      systems.
//   T3.3/T4.2          over valid LL (RR) systems: product shelf-type on the
//                      case side ⟺ all actions are identities. Instances
//                      count valid systems.
//   P3.4/P4.3/P5.2     over valid case systems with left non-degenerate
//                      factors: structure shelf of the product equals the
//                      componentwise table. Instances count qualifying
//                      systems.
//   T6.1               sizes (s, t) with s = t = 2: over all left
//                      non-degenerate solution pairs and all action pairs:
//                      valid products are left non-degenerate, their structure
//                      shelf is the componentwise one, and it is identical
//                      across all valid action pairs for fixed factors.
//                      Instances count candidate systems.
TheoremReport verify_theorem(const std::string& theorem_id, int size_s, int size_t_,
                             SearchMode mode = SearchMode::Exhaustive,
                             std::uint64_t samples = 10000, std::uint64_t seed = 0);

// Exhaustive suite at (2,2) for every id (S2 up to max_n); for max_n >= 3
// appends the sampled (3,3) runs of T3.1/T4.1/T5.1.
std::vector<TheoremReport> run_theorem_suite(int max_n, std::uint64_t seed = 0);

// Re-runs the instance check on the objects packaged in the counterexample;
// true iff the discrepancy is still there. Reports without a counterexample
// have nothing to replay and return false.
bool counterexample_replays(const TheoremReport& report);

}  // namespace ybset
