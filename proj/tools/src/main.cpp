#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybset/ybset.hpp"

namespace {

using ybset::MpCase;
using ybset::ShelfSide;
using ybset::SearchMode;

ShelfSide side_of(const std::string& s) {
  return s == "left" ? ShelfSide::Left : ShelfSide::Right;
}

MpCase case_of(const std::string& s) {
  if (s == "ll") return MpCase::LL;
  if (s == "rr") return MpCase::RR;
  if (s == "lr") return MpCase::LR;
  return MpCase::General;
}

SearchMode mode_of(const std::string& s) {
  return s == "sampled" ? SearchMode::Sampled : SearchMode::Exhaustive;
}

bool to_stdout(const std::string& out) { return out.empty() || out == "-" || out == "stdout"; }

void write_out(const std::string& out, const std::string& doc) {
  if (to_stdout(out)) {
    std::cout << doc;
    return;
  }
  std::ofstream file(out);
  if (!file) throw std::invalid_argument("cannot write " + out);
  file << doc;
}

int worker_count() {
  const char* env = std::getenv("YBSET_WORKERS");
  if (!env || !*env) return 1;
  try {
    const int n = std::stoi(env);
    if (n < 1) throw std::invalid_argument("");
    return n;
  } catch (const std::exception&) {
    throw std::invalid_argument("YBSET_WORKERS must be a positive integer");
  }
}

// Violating triples of the side's self-distributivity identity, lex order.
std::vector<ybset::Violation> shelf_violations(const ybset::OperationTable& op, ShelfSide side,
                                               bool all) {
  const char* condition = side == ShelfSide::Left ? "left-sd" : "right-sd";
  std::vector<ybset::Violation> out;
  const int n = op.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const bool ok = side == ShelfSide::Left
                            ? op.at(x, op.at(y, z)) == op.at(op.at(x, y), op.at(x, z))
                            : op.at(op.at(x, y), z) == op.at(op.at(x, z), op.at(y, z));
        if (ok) continue;
        out.push_back({condition, {x, y, z}});
        if (!all) return out;
      }
  return out;
}

// Triples where the two braid-relation composites differ, lex order.
std::vector<ybset::Violation> braid_violations(const ybset::Solution& sol, bool all) {
  const auto r12 = [&](std::array<int, 3> t) {
    const auto [a, b] = sol.apply(t[0], t[1]);
    return std::array<int, 3>{a, b, t[2]};
  };
  const auto r23 = [&](std::array<int, 3> t) {
    const auto [a, b] = sol.apply(t[1], t[2]);
    return std::array<int, 3>{t[0], a, b};
  };
  std::vector<ybset::Violation> out;
  const int n = sol.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const std::array<int, 3> t{x, y, z};
        if (r12(r23(r12(t))) == r23(r12(r23(t)))) continue;
        out.push_back({"braid", {x, y, z}});
        if (!all) return out;
      }
  return out;
}

int emit_check_report(const ybset::CheckReport& report, const std::string& out) {
  write_out(out, ybset::io::to_json(report));
  return report.valid ? 0 : 1;
}

int run_verify_shelf(const std::string& path, const std::string& side, bool verbose,
                     const std::string& out) {
  const auto op = ybset::io::load_table(path);
  ybset::CheckReport report;
  report.violations = shelf_violations(op, side_of(side), verbose);
  report.valid = report.violations.empty();
  return emit_check_report(report, out);
}

int run_verify_solution(const std::string& path, const std::string& mode, bool verbose,
                        const std::string& out) {
  const auto sol = ybset::io::load_solution(path, false);
  const auto ybe_mode =
      mode == "componentwise" ? ybset::YbeMode::Componentwise : ybset::YbeMode::Direct;
  ybset::CheckReport report;
  report.valid = ybset::ybe_holds(sol, ybe_mode);
  if (!report.valid) report.violations = braid_violations(sol, verbose);
  return emit_check_report(report, out);
}

int run_structure_shelf(const std::string& path, const std::string& out) {
  write_out(out, ybset::io::to_json(ybset::structure_shelf(ybset::io::load_solution(path))));
  return 0;
}

int run_derive(const std::string& path, const std::string& out) {
  write_out(out, ybset::io::to_json(ybset::derived_solution(ybset::io::load_solution(path))));
  return 0;
}

int run_mp_check(const std::string& path, const std::string& mp_case, bool verbose,
                 const std::string& out) {
  const auto sys = ybset::io::load_system(path);
  const MpCase c = case_of(mp_case);
  const auto report = c == MpCase::General ? ybset::check_system_general(sys, verbose)
                                           : ybset::check_simplified(sys, c, verbose);
  return emit_check_report(report, out);
}

int run_mp_build(const std::string& path, const std::string& mp_case, const std::string& out) {
  const auto sys = ybset::io::load_system(path);
  const MpCase c = case_of(mp_case);
  try {
    const auto product =
        c == MpCase::General ? ybset::build_matched_product(sys) : ybset::closed_form(sys, c);
    write_out(out, ybset::io::to_json(product, sys.size_t_()));
    return 0;
  } catch (const ybset::invalid_system_error& e) {
    write_out(out, ybset::io::to_json(e.report()));
    return 1;
  }
}

int run_enum(const std::string& target, int n, const std::string& side, const std::string& mode,
             std::uint64_t seed, bool up_to_iso, const std::string& out) {
  nlohmann::json arr = nlohmann::json::array();
  if (target == "solutions") {
    if (up_to_iso)
      throw std::invalid_argument("--up-to-iso is unsupported for solution enumeration");
    for (const auto& sol : ybset::enumerate_solutions(n, mode_of(mode), 10000, seed))
      arr.push_back(nlohmann::json::parse(ybset::io::to_json(sol)));
  } else {
    auto tables = ybset::enumerate_shelves(n, side_of(side), worker_count());
    if (target == "racks")
      std::erase_if(tables, [&](const ybset::OperationTable& op) {
        return !ybset::is_rack(op, side_of(side));
      });
    if (up_to_iso) tables = ybset::classify_up_to_iso(tables);
    for (const auto& op : tables) arr.push_back(nlohmann::json::parse(ybset::io::to_json(op)));
  }
  write_out(out, arr.dump() + "\n");
  return 0;
}

int run_search(const std::string& rs_path, const std::string& rt_path, const std::string& mp_case,
               const std::string& mode, std::uint64_t seed, const std::string& out) {
  const auto r_s = ybset::io::load_solution(rs_path);
  const auto r_t = ybset::io::load_solution(rt_path);
  ybset::SearchSpec spec;
  spec.size_s = r_s.size();
  spec.size_t_ = r_t.size();
  spec.mp_case = case_of(mp_case);
  spec.mode = mode_of(mode);
  spec.seed = seed;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& sys : ybset::search_systems(r_s, r_t, spec))
    arr.push_back(nlohmann::json::parse(ybset::io::to_json(sys)));
  write_out(out, arr.dump() + "\n");
  return 0;
}

int run_check_theorems(int max_n, std::uint64_t seed, const std::string& out) {
  const auto reports = ybset::run_theorem_suite(max_n, seed);
  write_out(out, ybset::io::to_json(reports));
  // The human-readable summary must not corrupt a JSON stream sharing stdout.
  std::ostream& summary = to_stdout(out) ? std::cerr : std::cout;
  bool all_pass = true;
  for (const auto& r : reports) {
    if (r.counterexample) {
      all_pass = false;
      summary << r.theorem << ": " << r.instances
              << " instances, counterexample: " << r.counterexample->detail << "\n";
    } else {
      summary << r.theorem << ": " << r.instances << " instances, no counterexample\n";
    }
  }
  summary << (all_pass ? "all claims verified" : "counterexamples found") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Yang-Baxter solutions from shelves and their matched products"};
  app.require_subcommand(1);

  std::string path, path_rt, out, side = "left", mp_case = "general", mode = "exhaustive",
                    target;
  std::string ybe_mode = "direct";
  bool verbose = false, up_to_iso = false;
  int max_n = 2;
  std::uint64_t seed = 0;

  auto* verify_shelf = app.add_subcommand("verify-shelf", "Check a table for self-distributivity");
  verify_shelf->add_option("file", path, "operation table JSON")->required();
  verify_shelf->add_option("--side", side, "left or right")
      ->check(CLI::IsMember({"left", "right"}));
  verify_shelf->add_flag("--verbose", verbose, "report every witness");
  verify_shelf->add_option("--out", out, "output path (default stdout)");

  auto* verify_solution =
      app.add_subcommand("verify-solution", "Check a map against the braid relation");
  verify_solution->add_option("file", path, "solution JSON")->required();
  verify_solution->add_option("--mode", ybe_mode, "direct or componentwise")
      ->check(CLI::IsMember({"direct", "componentwise"}));
  verify_solution->add_flag("--verbose", verbose, "report every witness");
  verify_solution->add_option("--out", out, "output path (default stdout)");

  auto* structure =
      app.add_subcommand("structure-shelf", "Structure shelf of a left non-degenerate solution");
  structure->add_option("file", path, "solution JSON")->required();
  structure->add_option("--out", out, "output path (default stdout)");

  auto* derive = app.add_subcommand("derive", "Derived solution of a left non-degenerate solution");
  derive->add_option("file", path, "solution JSON")->required();
  derive->add_option("--out", out, "output path (default stdout)");

  auto* mp_check = app.add_subcommand("mp-check", "Check matched product system conditions");
  mp_check->add_option("file", path, "system JSON")->required();
  mp_check->add_option("--case", mp_case, "ll, rr, lr, or general")
      ->check(CLI::IsMember({"ll", "rr", "lr", "general"}));
  mp_check->add_flag("--verbose", verbose, "report every witness");
  mp_check->add_option("--out", out, "output path (default stdout)");

  auto* mp_build = app.add_subcommand("mp-build", "Build the matched product solution");
  mp_build->add_option("file", path, "system JSON")->required();
  mp_build->add_option("--case", mp_case, "ll, rr, lr, or general")
      ->check(CLI::IsMember({"ll", "rr", "lr", "general"}));
  mp_build->add_option("--out", out, "output path (default stdout)");

  auto* enumerate = app.add_subcommand("enum", "Enumerate shelves, racks, or solutions");
  enumerate->add_option("target", target, "shelves, racks, or solutions")
      ->required()
      ->check(CLI::IsMember({"shelves", "racks", "solutions"}));
  enumerate->add_option("--max-n", max_n, "carrier size")->required();
  enumerate->add_option("--side", side, "left or right")
      ->check(CLI::IsMember({"left", "right"}));
  enumerate->add_option("--mode", mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  enumerate->add_option("--seed", seed, "sampling seed");
  enumerate->add_flag("--up-to-iso", up_to_iso, "one representative per isomorphism class");
  enumerate->add_option("--out", out, "output path (default stdout)");

  auto* search = app.add_subcommand("search", "Search action pairs completing two solutions");
  search->add_option("r_s", path, "S-factor solution JSON")->required();
  search->add_option("r_t", path_rt, "T-factor solution JSON")->required();
  search->add_option("--case", mp_case, "ll, rr, lr, or general")
      ->check(CLI::IsMember({"ll", "rr", "lr", "general"}));
  search->add_option("--mode", mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  search->add_option("--seed", seed, "sampling seed");
  search->add_option("--out", out, "output path (default stdout)");

  auto* check_theorems = app.add_subcommand("check-theorems", "Run the verification suite");
  check_theorems->add_option("--max-n", max_n, "largest carrier size (at least 2)");
  check_theorems->add_option("--seed", seed, "seed for the sampled runs");
  check_theorems->add_option("--out", out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify_shelf) return run_verify_shelf(path, side, verbose, out);
    if (*verify_solution) return run_verify_solution(path, ybe_mode, verbose, out);
    if (*structure) return run_structure_shelf(path, out);
    if (*derive) return run_derive(path, out);
    if (*mp_check) return run_mp_check(path, mp_case, verbose, out);
    if (*mp_build) return run_mp_build(path, mp_case, out);
    if (*enumerate) return run_enum(target, max_n, side, mode, seed, up_to_iso, out);
    if (*search) return run_search(path, path_rt, mp_case, mode, seed, out);
    if (*check_theorems) return run_check_theorems(max_n, seed, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
