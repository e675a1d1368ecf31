#include "hitchin/suites.hpp"
#include "hitchin/weights.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace hitchin;

namespace {

struct Options {
  std::uint64_t seed = 7;
  long cases = 100;
  long points = 1000;
  bool json = false;
  std::string out;
  std::string input;
};

int emit(const Options& o, const Json& report, const std::string& text, bool ok)
{
  if (o.json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f)
      throw SchemaError("cannot write " + o.out);
    f << report.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

Vec require_xi(const std::optional<Vec>& xi)
{
  if (!xi)
    throw SchemaError("input needs an \"xi\" vector");
  return *xi;
}

int run_identities(const Options& o)
{
  SuiteConfig cfg;
  cfg.seed = o.seed;
  cfg.cases = o.cases;
  cfg.points = o.points;
  std::vector<SuiteResult> all = weight_suites(cfg);
  all.push_back(polytope_suite(cfg));
  all.push_back(hn_suite(cfg));
  all.push_back(identity_suite(cfg));
  Json report = suites_to_json(all, true);
  std::string text;
  for (const auto& r : all) {
    text += r.name + ": " + std::to_string(r.cases) + " cases, " + std::to_string(r.checks) + " checks, " +
            std::to_string(r.failures) + " failures\n";
    for (const auto& n : r.notes)
      text += "  " + n + "\n";
  }
  return emit(o, report, text, report["passed"].get<bool>());
}

int run_hn(const Options& o)
{
  auto in = family_from_json(read_json_file(o.input));
  Vec xi = require_xi(in.xi);
  HNResult h = hn_point(in.family, xi);
  Json report = hn_to_json(h);
  report["xi"] = vec_to_json(xi);
  std::string text = "rho = " + vec_string(h.rho) + "\nQ = " + h.q.key() + "\ndist2 = " + to_string(h.dist2) + "\n";
  return emit(o, report, text, true);
}

int run_weights(const Options& o)
{
  auto in = family_from_json(read_json_file(o.input));
  Vec xi = require_xi(in.xi);
  const int directions = 3;
  long wd = w_weight(in.family, xi, Method::direct);
  long wl = w_weight(in.family, xi, Method::limit, directions);
  auto vd = v_weight(in.family, Method::direct);
  auto vl = v_weight(in.family, Method::limit, directions);
  bool ok = wd == wl && vd.equals(vl);
  Json report{{"w_direct", wd},
              {"w_limit", wl},
              {"v_direct", to_string(vd.canonical().value())},
              {"v_limit", to_string(vl.canonical().value())},
              {"reference_lattice", vd.canonical().reference_string()},
              {"directions_tested", directions}};
  std::string text = "w: direct " + std::to_string(wd) + ", limit " + std::to_string(wl) + "\nv: direct " +
                     vd.to_string() + ", limit " + vl.to_string() + "\n";
  return emit(o, report, text, ok);
}

int run_count(const Options& o)
{
  auto in = instance_from_json(read_json_file(o.input));
  std::vector<Vec> xis;
  if (in.xi)
    xis.push_back(*in.xi);
  for (const auto& x : standard_xis())
    if (!in.xi || x != *in.xi)
      xis.push_back(x);
  auto r = count_report(in.datum, xis);
  std::string text;
  for (const auto& row : r.json["results"])
    text += "xi = " + row["xi"].dump() + ": direct " + row["direct"].get<std::string>() + ", formula " +
            row["w_form"].get<std::string>() + " / " + row["v_form"].get<std::string>() + "\n";
  text += std::string("xi-independent: ") + (r.json["xi_independent"].get<bool>() ? "yes" : "no") + "\n";
  return emit(o, r.json, text, r.holds);
}

int run_descent(const Options& o)
{
  auto in = instance_from_json(read_json_file(o.input));
  if (in.datum.kind != CharKind::split)
    throw SchemaError("descent needs split data (\"lambda\")");
  auto r = descent_report(in.datum, 50);
  std::string text;
  for (const auto& row : r.json["descent"])
    text += "Q = " + row["q"].get<std::string>() + ": " + row["lhs"].get<std::string>() + " vs " +
            row["rhs"].get<std::string>() + "\n";
  text += "spot check: " + r.json["spot_check"].dump() + "\n";
  return emit(o, r.json, text, r.holds);
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact weights, polytopes and SL(2) fiber counts"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Print the JSON report");
    sub->add_option("--out", o.out, "Write the JSON report to FILE");
  };
  auto* ident = app.add_subcommand("identities", "Run the randomized identity suites");
  ident->add_option("--seed", o.seed, "Random seed");
  ident->add_option("--cases", o.cases, "Random families per suite")->check(CLI::PositiveNumber);
  ident->add_option("--points", o.points, "Random points per family")->check(CLI::PositiveNumber);
  common(ident);
  std::vector<CLI::App*> file_cmds;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"hn", "Harder-Narasimhan point of a family file"},
           {"weights", "w and v weights of a family file, both methods"},
           {"count", "Fiber count of an instance file, both pipelines"},
           {"descent", "Descent checks for an instance file"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "Input JSON file")->required();
    common(sub);
    file_cmds.push_back(sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (ident->parsed())
      return run_identities(o);
    if (file_cmds[0]->parsed())
      return run_hn(o);
    if (file_cmds[1]->parsed())
      return run_weights(o);
    if (file_cmds[2]->parsed())
      return run_count(o);
    return run_descent(o);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
}
