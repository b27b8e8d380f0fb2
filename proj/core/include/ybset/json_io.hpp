#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ybset/action_family.hpp"
#include "ybset/enumerate.hpp"
#include "ybset/matched_product.hpp"
#include "ybset/op_table.hpp"
#include "ybset/perm.hpp"
#include "ybset/solution.hpp"

// JSON file formats. All documents are UTF-8, newline-terminated, with keys
// in lexicographic order:
//   table:       {"size": n, "table": [[...], ...]}          table[x][y] = x∘y
//   permutation: {"size": n, "images": [...]}
//   solution:    {"size": n, "lambda": [[...]], "rho": [[...]]}   subscript-first
//   system:      {"alpha": [[...]...], "beta": [[...]...], "r_s": <solution>, "r_t": <solution>}
//   product:     solution format plus "pair_encoding": {"t_size": |T|}
//   check report:   {"valid": bool, "violations": [{"condition": ..., "witness": [...]}]}
//   theorem report: {"theorem": id, "instances": k, "counterexample": null | {...}}
// Parse failures throw std::invalid_argument with a position or field
// diagnostic.

namespace ybset::io {

OperationTable parse_table(const std::string& text);
Permutation parse_permutation(const std::string& text);
// check_ybe validates the braid relation on load (the default); range checks
// always run.
Solution parse_solution(const std::string& text, bool check_ybe = true);
// Parses structure and sizes; system conditions are the caller's explicit
// check. Factor solutions are YBE-validated per check_ybe.
MatchedProductSystem parse_system(const std::string& text, bool check_ybe = true);
CheckReport parse_check_report(const std::string& text);
TheoremReport parse_theorem_report(const std::string& text);

std::string to_json(const OperationTable& op);
std::string to_json(const Permutation& p);
// pair_t_size, when present, adds the product annotation.
std::string to_json(const Solution& sol, std::optional<int> pair_t_size = std::nullopt);
std::string to_json(const MatchedProductSystem& sys);
std::string to_json(const CheckReport& report);
std::string to_json(const TheoremReport& report);
std::string to_json(const std::vector<TheoremReport>& reports);

OperationTable read_table(std::istream& in);
Permutation read_permutation(std::istream& in);
Solution read_solution(std::istream& in, bool check_ybe = true);
MatchedProductSystem read_system(std::istream& in, bool check_ybe = true);

OperationTable load_table(const std::string& path);
Permutation load_permutation(const std::string& path);
Solution load_solution(const std::string& path, bool check_ybe = true);
MatchedProductSystem load_system(const std::string& path, bool check_ybe = true);

}  // namespace ybset::io
