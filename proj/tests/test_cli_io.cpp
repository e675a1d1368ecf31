#include "support.hpp"

#include "hitchin/generators.hpp"
#include "hitchin/json_io.hpp"
#include "hitchin/suites.hpp"

#include "doctest.h"

using namespace hitchin;
using test::vec;

namespace {

Json segment_json()
{
  return Json::parse(R"({"group": {"n": 2}, "levi": [[1], [2]],
                         "points": {"1|2": ["3", "-3"], "2|1": ["0", "0"]}, "xi": ["5", "-5"]})");
}

}  // namespace

TEST_CASE("family JSON round trip")
{
  auto in = family_from_json(segment_json());
  REQUIRE(in.xi.has_value());
  CHECK(*in.xi == vec({"5", "-5"}));
  CHECK(in.family.point(test::par("1|2", 2)) == vec({"3", "-3"}));
  Rng rng(113);
  for (int k = 0; k < 10; ++k) {
    int n = 2 + k % 3;
    auto f = random_family(rng, n, random_levi(rng, n));
    auto back = family_from_json(family_to_json(f)).family;
    CHECK(back.points() == f.points());
    CHECK(back.levi() == f.levi());
  }
}

TEST_CASE("GL(n) input is projected to trace zero")
{
  auto j = segment_json();
  j["points"]["1|2"] = {"4", "-2"};
  j["points"]["2|1"] = {"1", "1"};
  auto f = family_from_json(j).family;
  CHECK(f.point(test::par("1|2", 2)) == vec({"3", "-3"}));
}

TEST_CASE("schema violations")
{
  auto broken = [](const std::function<void(Json&)>& edit) {
    Json j = segment_json();
    edit(j);
    return j;
  };
  CHECK_THROWS_AS(family_from_json(broken([](Json& j) { j.erase("group"); })), SchemaError);
  CHECK_THROWS_AS(family_from_json(broken([](Json& j) { j["group"]["n"] = "2"; })), SchemaError);
  CHECK_THROWS_AS(family_from_json(broken([](Json& j) { j["levi"] = {{1}, {1}}; })), SchemaError);
  CHECK_THROWS_AS(family_from_json(broken([](Json& j) { j["points"]["1|3"] = {"0", "0"}; })), SchemaError);
  CHECK_THROWS_AS(family_from_json(broken([](Json& j) { j["points"]["1|2"] = {3, -3}; })), SchemaError);
  CHECK_THROWS_AS(family_from_json(broken([](Json& j) { j["points"]["1|2"] = {"3"}; })), SchemaError);
  CHECK_THROWS_AS(family_from_json(broken([](Json& j) { j["points"]["1|2"] = {"x", "1"}; })), SchemaError);
  CHECK_THROWS_AS(family_from_json(broken([](Json& j) { j["points"].erase("2|1"); })), SchemaError);
  CHECK_THROWS_AS(family_from_json(broken([](Json& j) { j["points"]["1|2"] = {"-1", "1"}; })), SchemaError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/family.json"), SchemaError);
}

TEST_CASE("instance JSON")
{
  auto in = instance_from_json(Json::parse(R"({"q": 3, "D": [["t", 1]], "lambda": "(t+1)/t", "xi": ["1/3", "-1/3"]})"));
  CHECK(in.datum.kind == CharKind::split);
  CHECK(in.datum.deg_D() == 1);
  CHECK(*in.xi == vec({"1/3", "-1/3"}));
  auto back = instance_from_json(instance_to_json(in.datum, in.xi));
  CHECK(back.datum.lambda == in.datum.lambda);
  auto ell = instance_from_json(Json::parse(R"({"q": 3, "D": [], "det": 1})"));
  CHECK(ell.datum.kind == CharKind::elliptic);
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"q": 3, "D": [], "det": 1, "lambda": "1"})")), SchemaError);
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"q": 6, "D": [], "lambda": "1"})")), SchemaError);
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"q": 3, "D": [["t"]], "lambda": "1"})")), SchemaError);
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"q": 3, "D": [["t", 1]], "lambda": "1/t^2"})")), SchemaError);
}

TEST_CASE("reports print exact rationals")
{
  HNResult h{vec({"1/2", "-1/2"}), test::par("2|1", 2), Q(9, 2)};
  auto j = hn_to_json(h);
  CHECK(j["rho"][0] == "1/2");
  CHECK(j["q"] == "2|1");
  CHECK(j["dist2"] == "9/2");
}

TEST_CASE("suite reports are deterministic")
{
  SuiteConfig cfg;
  cfg.seed = 3;
  cfg.cases = 6;
  cfg.points = 50;
  auto run = [&] {
    auto all = weight_suites(cfg);
    all.push_back(polytope_suite(cfg));
    all.push_back(hn_suite(cfg));
    all.push_back(identity_suite(cfg));
    return suites_to_json(all, false).dump();
  };
  std::string a = run();
  CHECK(a == run());
  cfg.seed = 4;
  CHECK(a != run());
}
