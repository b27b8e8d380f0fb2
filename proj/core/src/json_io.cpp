#include "ybset/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace ybset::io {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

const json& member(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field))
    throw std::invalid_argument(std::string("missing field \"") + field + "\"");
  return j.at(field);
}

int int_field(const json& j, const char* field) {
  const json& v = member(j, field);
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string("field \"") + field + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const json& v, const char* field) {
  try {
    return v.get<std::vector<int>>();
  } catch (const json::exception&) {
    throw std::invalid_argument(std::string("field \"") + field +
                                "\" must be an array of integers");
  }
}

std::vector<std::vector<int>> int_grid(const json& v, const char* field) {
  try {
    return v.get<std::vector<std::vector<int>>>();
  } catch (const json::exception&) {
    throw std::invalid_argument(std::string("field \"") + field +
                                "\" must be an array of integer arrays");
  }
}

std::vector<Permutation> permutation_list(const json& v, const char* field) {
  std::vector<Permutation> out;
  for (const auto& images : int_grid(v, field)) out.emplace_back(images);
  return out;
}

OperationTable table_from_json(const json& j) {
  const int n = int_field(j, "size");
  const auto rows = int_grid(member(j, "table"), "table");
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("\"table\" row count does not match \"size\"");
  return OperationTable::from_rows(rows);
}

Permutation permutation_from_json(const json& j) {
  const int n = int_field(j, "size");
  const auto images = int_list(member(j, "images"), "images");
  if (static_cast<int>(images.size()) != n)
    throw std::invalid_argument("\"images\" length does not match \"size\"");
  return Permutation(images);
}

Solution solution_from_json(const json& j, bool check_ybe) {
  const int n = int_field(j, "size");
  auto lambda = int_grid(member(j, "lambda"), "lambda");
  auto rho = int_grid(member(j, "rho"), "rho");
  return check_ybe ? Solution::make(n, std::move(lambda), std::move(rho))
                   : Solution::make_unchecked(n, std::move(lambda), std::move(rho));
}

MatchedProductSystem system_from_json(const json& j, bool check_ybe) {
  Solution r_s = solution_from_json(member(j, "r_s"), check_ybe);
  Solution r_t = solution_from_json(member(j, "r_t"), check_ybe);
  auto alpha = permutation_list(member(j, "alpha"), "alpha");
  auto beta = permutation_list(member(j, "beta"), "beta");
  const int ns = r_s.size();
  const int nt = r_t.size();
  return MatchedProductSystem::make_unchecked(std::move(r_s), std::move(r_t),
                                              ActionFamily(nt, ns, std::move(alpha)),
                                              ActionFamily(ns, nt, std::move(beta)));
}

CheckReport check_report_from_json(const json& j) {
  CheckReport report;
  const json& valid = member(j, "valid");
  if (!valid.is_boolean()) throw std::invalid_argument("field \"valid\" must be a boolean");
  report.valid = valid.get<bool>();
  for (const auto& v : member(j, "violations")) {
    const json& condition = member(v, "condition");
    if (!condition.is_string())
      throw std::invalid_argument("field \"condition\" must be a string");
    report.violations.push_back(
        {condition.get<std::string>(), int_list(member(v, "witness"), "witness")});
  }
  if (report.valid != report.violations.empty())
    throw std::invalid_argument("\"valid\" is inconsistent with \"violations\"");
  return report;
}

Counterexample counterexample_from_json(const json& j) {
  Counterexample cx;
  const json& detail = member(j, "detail");
  if (!detail.is_string()) throw std::invalid_argument("field \"detail\" must be a string");
  cx.detail = detail.get<std::string>();
  if (j.contains("op_s")) cx.op_s = table_from_json(j.at("op_s"));
  if (j.contains("op_t")) cx.op_t = table_from_json(j.at("op_t"));
  if (j.contains("r_s")) cx.r_s = solution_from_json(j.at("r_s"), false);
  if (j.contains("r_t")) cx.r_t = solution_from_json(j.at("r_t"), false);
  if (j.contains("alpha")) cx.alpha = permutation_list(j.at("alpha"), "alpha");
  if (j.contains("beta")) cx.beta = permutation_list(j.at("beta"), "beta");
  if (j.contains("condition")) {
    if (!j.at("condition").is_string())
      throw std::invalid_argument("field \"condition\" must be a string");
    cx.condition = j.at("condition").get<std::string>();
  }
  if (j.contains("witness")) cx.witness = int_list(j.at("witness"), "witness");
  return cx;
}

TheoremReport theorem_report_from_json(const json& j) {
  TheoremReport report;
  const json& theorem = member(j, "theorem");
  if (!theorem.is_string()) throw std::invalid_argument("field \"theorem\" must be a string");
  report.theorem = theorem.get<std::string>();
  if (!is_theorem_id(report.theorem))
    throw std::invalid_argument("unknown theorem id " + report.theorem);
  const json& instances = member(j, "instances");
  if (!instances.is_number_integer())
    throw std::invalid_argument("field \"instances\" must be an integer");
  report.instances = instances.get<std::uint64_t>();
  const json& cx = member(j, "counterexample");
  if (!cx.is_null()) report.counterexample = counterexample_from_json(cx);
  return report;
}

std::vector<std::vector<int>> rows_of(const std::vector<int>& flat, int n) {
  std::vector<std::vector<int>> rows(n);
  for (int x = 0; x < n; ++x)
    rows[x].assign(flat.begin() + static_cast<std::size_t>(x) * n,
                   flat.begin() + static_cast<std::size_t>(x + 1) * n);
  return rows;
}

json table_json(const OperationTable& op) {
  return json{{"size", op.size()}, {"table", rows_of(op.entries(), op.size())}};
}

json permutation_json(const Permutation& p) {
  return json{{"size", p.size()}, {"images", p.images()}};
}

json solution_json(const Solution& sol, std::optional<int> pair_t_size) {
  json j{{"size", sol.size()},
         {"lambda", rows_of(sol.lambda_entries(), sol.size())},
         {"rho", rows_of(sol.rho_entries(), sol.size())}};
  if (pair_t_size) j["pair_encoding"] = json{{"t_size", *pair_t_size}};
  return j;
}

json images_json(const std::vector<Permutation>& perms) {
  json arr = json::array();
  for (const auto& p : perms) arr.push_back(p.images());
  return arr;
}

json system_json(const MatchedProductSystem& sys) {
  return json{{"alpha", images_json(sys.alpha().perms())},
              {"beta", images_json(sys.beta().perms())},
              {"r_s", solution_json(sys.r_s(), std::nullopt)},
              {"r_t", solution_json(sys.r_t(), std::nullopt)}};
}

json check_report_json(const CheckReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back(json{{"condition", v.condition}, {"witness", v.witness}});
  return json{{"valid", report.valid}, {"violations", std::move(violations)}};
}

json counterexample_json(const Counterexample& cx) {
  json j{{"detail", cx.detail}};
  if (cx.op_s) j["op_s"] = table_json(*cx.op_s);
  if (cx.op_t) j["op_t"] = table_json(*cx.op_t);
  if (cx.r_s) j["r_s"] = solution_json(*cx.r_s, std::nullopt);
  if (cx.r_t) j["r_t"] = solution_json(*cx.r_t, std::nullopt);
  if (cx.alpha) j["alpha"] = images_json(*cx.alpha);
  if (cx.beta) j["beta"] = images_json(*cx.beta);
  if (!cx.condition.empty()) j["condition"] = cx.condition;
  if (!cx.witness.empty()) j["witness"] = cx.witness;
  return j;
}

json theorem_report_json(const TheoremReport& report) {
  return json{{"theorem", report.theorem},
              {"instances", report.instances},
              {"counterexample", report.counterexample
                                     ? counterexample_json(*report.counterexample)
                                     : json(nullptr)}};
}

std::string finish(const json& j) { return j.dump() + "\n"; }

std::string slurp(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return slurp(in);
}

}  // namespace

OperationTable parse_table(const std::string& text) { return table_from_json(parse_text(text)); }

Permutation parse_permutation(const std::string& text) {
  return permutation_from_json(parse_text(text));
}

Solution parse_solution(const std::string& text, bool check_ybe) {
  return solution_from_json(parse_text(text), check_ybe);
}

MatchedProductSystem parse_system(const std::string& text, bool check_ybe) {
  return system_from_json(parse_text(text), check_ybe);
}

CheckReport parse_check_report(const std::string& text) {
  return check_report_from_json(parse_text(text));
}

TheoremReport parse_theorem_report(const std::string& text) {
  return theorem_report_from_json(parse_text(text));
}

std::string to_json(const OperationTable& op) { return finish(table_json(op)); }

std::string to_json(const Permutation& p) { return finish(permutation_json(p)); }

std::string to_json(const Solution& sol, std::optional<int> pair_t_size) {
  return finish(solution_json(sol, pair_t_size));
}

std::string to_json(const MatchedProductSystem& sys) { return finish(system_json(sys)); }

std::string to_json(const CheckReport& report) { return finish(check_report_json(report)); }

std::string to_json(const TheoremReport& report) { return finish(theorem_report_json(report)); }

std::string to_json(const std::vector<TheoremReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(theorem_report_json(r));
  return finish(arr);
}

OperationTable read_table(std::istream& in) { return parse_table(slurp(in)); }

Permutation read_permutation(std::istream& in) { return parse_permutation(slurp(in)); }

Solution read_solution(std::istream& in, bool check_ybe) {
  return parse_solution(slurp(in), check_ybe);
}

MatchedProductSystem read_system(std::istream& in, bool check_ybe) {
  return parse_system(slurp(in), check_ybe);
}

OperationTable load_table(const std::string& path) { return parse_table(slurp_file(path)); }

Permutation load_permutation(const std::string& path) {
  return parse_permutation(slurp_file(path));
}

Solution load_solution(const std::string& path, bool check_ybe) {
  return parse_solution(slurp_file(path), check_ybe);
}

MatchedProductSystem load_system(const std::string& path, bool check_ybe) {
  return parse_system(slurp_file(path), check_ybe);
}

}  // namespace ybset::io
