#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "ybset/json_io.hpp"
#include "ybset/matched_product.hpp"

using ybset::ActionFamily;
using ybset::CheckReport;
using ybset::Counterexample;
using ybset::MatchedProductSystem;
using ybset::OperationTable;
using ybset::Permutation;
using ybset::ShelfSide;
using ybset::Solution;
using ybset::TheoremReport;
namespace io = ybset::io;

namespace {

Solution twist() { return Solution::make(2, {{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}); }

MatchedProductSystem worked_example() {
  const auto proj = ybset::from_shelf(OperationTable::from_rows({{0, 0}, {1, 1}}), ShelfSide::Left);
  const Permutation swap({1, 0});
  return MatchedProductSystem::make(proj, proj,
                                    ActionFamily(2, 2, {swap, swap}),
                                    ActionFamily::identities(2, 2));
}

}  // namespace

TEST_CASE("table serialization is compact, key-sorted, and newline-terminated") {
  const auto op = OperationTable::from_rows({{0, 0}, {1, 1}});
  CHECK(io::to_json(op) == "{\"size\":2,\"table\":[[0,0],[1,1]]}\n");
  CHECK(io::parse_table(io::to_json(op)) == op);
}

TEST_CASE("permutation serialization") {
  const Permutation swap({1, 0});
  CHECK(io::to_json(swap) == "{\"images\":[1,0],\"size\":2}\n");
  CHECK(io::parse_permutation(io::to_json(swap)) == swap);
  CHECK_THROWS_WITH_AS(io::parse_permutation("{\"images\":[1,0,2],\"size\":2}"),
                       "\"images\" length does not match \"size\"", std::invalid_argument);
}

TEST_CASE("solution serialization round trips") {
  const auto s = twist();
  CHECK(io::to_json(s) == "{\"lambda\":[[1,0],[1,0]],\"rho\":[[0,1],[0,1]],\"size\":2}\n");
  CHECK(io::parse_solution(io::to_json(s)) == s);

  const auto product = ybset::build_matched_product(worked_example());
  const auto text = io::to_json(product, 2);
  CHECK(text.find("\"pair_encoding\":{\"t_size\":2}") != std::string::npos);
  CHECK(io::parse_solution(text) == product);
}

TEST_CASE("solution parsing can defer the braid check") {
  const std::string text = "{\"lambda\":[[0,1],[0,1]],\"rho\":[[0,1],[1,0]],\"size\":2}";
  CHECK_THROWS_AS(io::parse_solution(text), std::domain_error);
  const auto s = io::parse_solution(text, false);
  CHECK_FALSE(ybset::ybe_holds(s, ybset::YbeMode::Direct));
}

TEST_CASE("system serialization round trips") {
  const auto sys = worked_example();
  const auto text = io::to_json(sys);
  CHECK(text.find("\"alpha\":") != std::string::npos);
  const auto back = io::parse_system(text);
  CHECK(back == sys);
}

TEST_CASE("check report serialization") {
  const CheckReport bad{false, {{"s1", {0, 1}}}};
  CHECK(io::to_json(bad) ==
        "{\"valid\":false,\"violations\":[{\"condition\":\"s1\",\"witness\":[0,1]}]}\n");
  const auto back = io::parse_check_report(io::to_json(bad));
  CHECK(back == bad);
  CHECK(io::parse_check_report("{\"valid\":true,\"violations\":[]}").valid);
  CHECK_THROWS_WITH_AS(io::parse_check_report(
                           "{\"valid\":true,\"violations\":[{\"condition\":\"s1\",\"witness\":[0]}]}"),
                       "\"valid\" is inconsistent with \"violations\"", std::invalid_argument);
}

TEST_CASE("theorem report serialization with and without a counterexample") {
  TheoremReport clean;
  clean.theorem = "T3.1";
  clean.instances = 1296;
  CHECK(io::to_json(clean) == "{\"counterexample\":null,\"instances\":1296,\"theorem\":\"T3.1\"}\n");
  const auto back = io::parse_theorem_report(io::to_json(clean));
  CHECK(back.theorem == clean.theorem);
  CHECK(back.instances == clean.instances);
  CHECK_FALSE(back.counterexample.has_value());

  TheoremReport failed;
  failed.theorem = "T6.1";
  failed.instances = 7;
  Counterexample cx;
  cx.detail = "structure shelf mismatch";
  cx.op_s = OperationTable::from_rows({{0, 0}, {1, 1}});
  cx.r_s = twist();
  cx.alpha = std::vector<Permutation>{Permutation({1, 0}), Permutation::identity(2)};
  cx.condition = "s1";
  cx.witness = {0, 1};
  failed.counterexample = cx;
  const auto round = io::parse_theorem_report(io::to_json(failed));
  REQUIRE(round.counterexample.has_value());
  CHECK(round.counterexample->detail == cx.detail);
  CHECK(round.counterexample->op_s == cx.op_s);
  CHECK_FALSE(round.counterexample->op_t.has_value());
  CHECK(round.counterexample->r_s == cx.r_s);
  CHECK(round.counterexample->alpha == cx.alpha);
  CHECK(round.counterexample->condition == cx.condition);
  CHECK(round.counterexample->witness == cx.witness);

  CHECK_THROWS_WITH_AS(
      io::parse_theorem_report("{\"counterexample\":null,\"instances\":1,\"theorem\":\"T9.9\"}"),
      "unknown theorem id T9.9", std::invalid_argument);
}

TEST_CASE("suite serialization is a json array") {
  std::vector<TheoremReport> reports(2);
  reports[0].theorem = "T3.1";
  reports[1].theorem = "T3.3";
  const auto text = io::to_json(reports);
  CHECK(text.front() == '[');
  CHECK(text.find("\"T3.1\"") != std::string::npos);
  CHECK(text.find("\"T3.3\"") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("parse diagnostics name the offending field") {
  CHECK_THROWS_WITH_AS(io::parse_table("{\"table\":[[0]]}"), "missing field \"size\"",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(io::parse_table("{\"size\":2,\"table\":[[0,0]]}"),
                       "\"table\" row count does not match \"size\"", std::invalid_argument);
  CHECK_THROWS_AS(io::parse_table("{\"size\":\"two\",\"table\":[[0,0],[1,1]]}"),
                  std::invalid_argument);
  bool prefixed = false;
  try {
    io::parse_table("{\"size\": 2");
  } catch (const std::invalid_argument& e) {
    prefixed = std::string(e.what()).rfind("invalid JSON: ", 0) == 0;
  }
  CHECK(prefixed);
}

TEST_CASE("stream and file loaders") {
  std::istringstream in("{\"size\":2,\"table\":[[0,0],[1,1]]}\n");
  CHECK(io::read_table(in) == OperationTable::from_rows({{0, 0}, {1, 1}}));
  CHECK_THROWS_WITH_AS(io::load_table("/nonexistent/ybset-table.json"),
                       "cannot open /nonexistent/ybset-table.json", std::invalid_argument);
}
