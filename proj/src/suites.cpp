#include "hitchin/suites.hpp"

#include "hitchin/generators.hpp"
#include "hitchin/weights.hpp"

#include <chrono>
#include <functional>

namespace hitchin {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Rng case_rng(const SuiteConfig& cfg, long i) { return Rng(cfg.seed * 1000003ULL + static_cast<std::uint64_t>(i)); }

int case_n(long i, int lo, int count) { return lo + static_cast<int>(i % count); }

// Runs body(i) for every case, turning exceptions into failures.
void run_cases(SuiteResult& r, long cases, const std::function<void(long)>& body)
{
  auto t0 = Clock::now();
  for (long i = 0; i < cases; ++i) {
    ++r.cases;
    try {
      body(i);
    } catch (const std::exception& e) {
      r.fail("case " + std::to_string(i) + ": " + e.what());
    }
  }
  r.seconds = since(t0);
}

void check(SuiteResult& r, bool ok, const std::string& what)
{
  ++r.checks;
  if (!ok)
    r.fail(what);
}

Vec random_closed_point(Rng& rng, const PositiveOrthogonalFamily& f)
{
  Vec r = random_vector(rng, f.group().n, 6, 4);
  return add(random_hull_point(rng, f), sub(r, project_levi(r, f.levi())));
}

}  // namespace

void SuiteResult::fail(const std::string& msg)
{
  ++failures;
  if (notes.size() < 5)
    notes.push_back(msg);
}

Json SuiteResult::to_json(bool timing) const
{
  Json j{{"name", name}, {"cases", cases}, {"checks", checks}, {"failures", failures}, {"digest", digest},
         {"passed", passed()}};
  if (!notes.empty())
    j["notes"] = notes;
  if (timing)
    j["seconds"] = seconds;
  return j;
}

std::vector<SuiteResult> weight_suites(const SuiteConfig& cfg)
{
  SuiteResult w{"w_weight"}, v{"v_weight"};
  Q w_sum = 0, v_sum = 0;
  auto t0 = Clock::now();
  for (long i = 0; i < cfg.cases; ++i) {
    ++w.cases;
    ++v.cases;
    try {
      Rng rng = case_rng(cfg, i);
      int n = case_n(i, 2, 3);
      Levi m = random_levi(rng, n);
      auto f = random_family(rng, n, m);
      for (int k = 0; k < cfg.xis; ++k) {
        Vec xi = random_general_xi(rng, n);
        long d = w_weight(f, xi, Method::direct);
        long l = w_weight(f, xi, Method::limit);
        w_sum += d;
        check(w, d == l, "case " + std::to_string(i) + ": w direct " + std::to_string(d) + " vs limit " +
                             std::to_string(l));
      }
      auto vd = v_weight(f, Method::direct);
      auto vl = v_weight(f, Method::limit);
      v_sum += vd.value();
      check(v, vd.equals(vl), "case " + std::to_string(i) + ": v direct " + vd.to_string() + " vs limit " +
                                  vl.to_string());
    } catch (const std::exception& e) {
      w.fail("case " + std::to_string(i) + ": " + e.what());
    }
  }
  w.seconds = v.seconds = since(t0);
  w.digest = "sum=" + to_string(w_sum);
  v.digest = "sum=" + to_string(v_sum);
  return {w, v};
}

SuiteResult polytope_suite(const SuiteConfig& cfg)
{
  SuiteResult r{"polytope"};
  long inside = 0, agree = 0;
  run_cases(r, cfg.cases, [&](long i) {
    Rng rng = case_rng(cfg, i);
    int n = case_n(i, 2, 3);
    Levi m = random_levi(rng, n);
    auto f = random_family(rng, n, m);
    std::vector<Covector> dirs;
    for (int k = 0; k < cfg.directions; ++k)
      dirs.push_back(random_generic_direction(rng, m));
    long modes_ok = 0, hull_ok = 0;
    for (long k = 0; k < cfg.points; ++k) {
      Vec xi = random_point_near(rng, f, Q(1));
      bool closed = cm_member(f, xi, true, CmMode::all_F);
      bool open = cm_member(f, xi, false, CmMode::all_F);
      bool same = true;
      for (auto mode : {CmMode::only_P, CmMode::only_maximal})
        same = same && cm_member(f, xi, true, mode) == closed && cm_member(f, xi, false, mode) == open;
      bool hull = hull_member(f, xi);
      modes_ok += same;
      hull_ok += hull == closed;
      inside += hull;
      if (k < 25)
        for (const auto& d : dirs) {
          ++agree;
          check(r, langlands_indicator(f, xi, d) == (hull ? 1 : 0),
                "case " + std::to_string(i) + ": Langlands indicator disagrees at " + vec_string(xi));
        }
    }
    for (const auto& [p, y] : f.points())
      for (const auto& d : dirs) {
        ++agree;
        check(r, langlands_indicator(f, y, d) == 1, "case " + std::to_string(i) + ": indicator at vertex " + p.key());
      }
    check(r, modes_ok == cfg.points,"case " + std::to_string(i) + ": cm_member modes disagree");
    check(r, hull_ok == cfg.points, "case " + std::to_string(i) + ": closed C_m differs from the hull");
  });
  r.digest = "inside=" + std::to_string(inside) + ";indicator=" + std::to_string(agree);
  return r;
}

SuiteResult hn_suite(const SuiteConfig& cfg)
{
  SuiteResult r{"hn"};
  Q dist_sum = 0;
  run_cases(r, cfg.cases, [&](long i) {
    Rng rng = case_rng(cfg, i);
    int n = case_n(i, 2, 3);
    Levi m = random_levi(rng, n);
    auto f = random_family(rng, n, m);
    Vec noise = random_vector(rng, n, 4, 3);
    Vec xi = add(random_point_near(rng, f, Q(3)), sub(noise, project_levi(noise, m)));
    HNResult h = hn_point(f, xi);
    dist_sum += h.dist2;
    std::string tag = "case " + std::to_string(i) + ": ";
    Vec diff = sub(xi, h.rho);
    check(r, h.dist2 == norm2(diff), tag + "dist2 mismatch");
    check(r, hull_member(f, h.rho) && cm_member(f, h.rho, true, CmMode::all_F), tag + "rho outside the closed C_m");
    check(r, is_zero(project(diff, h.q, Part::onto_aTP)) && cone_member(h.q, diff, ConeKind::acute),
          tag + "xi - rho not in the acute cone of Q");
    check(r, is_zero(project(sub(h.rho, family_point_for(f, h.q)), h.q, Part::onto_aP)),
          tag + "rho off the affine subspace of Q");
    bool minimal = true;
    for (const auto& [p, y] : f.points())
      minimal = minimal && norm2(sub(xi, add(y, sub(xi, project_levi(xi, m))))) >= h.dist2;
    for (long k = 0; k < cfg.points; ++k)
      minimal = minimal && norm2(sub(xi, random_closed_point(rng, f))) >= h.dist2;
    check(r, minimal, tag + "a point of the closed C_m is nearer than rho");
  });
  r.digest = "dist2_sum=" + to_string(dist_sum);
  return r;
}

SuiteResult identity_suite(const SuiteConfig& cfg)
{
  SuiteResult r{"identities"};
  Q lhs_sum = 0;
  run_cases(r, cfg.cases, [&](long i) {
    Rng rng = case_rng(cfg, i);
    int n = case_n(i, 2, 2);
    Levi m = random_levi(rng, n);
    auto ls = levis_containing(m);
    Levi l = ls[uniform(rng, 0, static_cast<long>(ls.size()) - 1)];
    auto f = random_family(rng, n, m);
    Vec xi = random_general_xi(rng, n);
    std::string tag = "case " + std::to_string(i) + ": ";
    for (bool shifted : {false, true}) {
      auto reps = coset_reps(m, shifted);
      auto wl = wl_sum_identity(make_group(n), m, l, xi, reps);
      check(r, wl.holds, tag + "sum over cosets " + wl.lhs.to_string() + " vs " + wl.rhs.to_string());
      auto rf = reformulation_check(f, xi, reps);
      lhs_sum += rf.lhs;
      check(r, rf.holds, tag + "reformulation " + to_string(rf.lhs) + " vs " + std::to_string(rf.rhs));
    }
  });
  r.digest = "sum=" + to_string(lhs_sum);
  return r;
}

std::vector<CountInstance> standard_instances()
{
  return {
      {"q3_t", 3, {{"t", 1}}, "(t+1)/t"},
      {"q5_t", 5, {{"t", 1}}, "(t+2)/t"},
      {"q3_2t", 3, {{"t", 2}}, "(t^2+1)/t^2"},
      {"q5_t_t1", 5, {{"t", 1}, {"t+1", 1}}, "(t+2)*(t+3)/(t*(t+1))"},
      {"q5_2t", 5, {{"t", 2}}, "(t+1)^2/t^2"},
  };
}

std::vector<Vec> standard_xis() { return {{Q(1, 3), Q(-1, 3)}, {Q(2, 5), Q(-2, 5)}, {Q(-9, 7), Q(9, 7)}}; }

CountReport count_report(const CharDatum& c, const std::vector<Vec>& xis)
{
  auto t0 = Clock::now();
  CountReport out;
  out.holds = true;
  Json results = Json::array();
  std::optional<Q> first;
  bool independent = true;
  for (const auto& xi : xis) {
    auto d = fiber_count_direct(c, xi);
    auto f = fiber_count_formula(c, xi);
    bool ok = d.count == f.w_form && f.w_form == f.v_form && f.comparison_holds;
    out.holds = out.holds && ok;
    if (!first)
      first = d.count;
    independent = independent && d.count == *first;
    Json stabs = Json::object();
    for (const auto& [order, num] : d.stabilizers)
      stabs[std::to_string(order)] = num;
    results.push_back({{"xi", vec_to_json(xi)},
                       {"direct", to_string(d.count)},
                       {"w_form", to_string(f.w_form)},
                       {"v_form", to_string(f.v_form)},
                       {"comparison", f.comparison_holds},
                       {"points", d.points},
                       {"orbits", d.orbits},
                       {"stabilizers", stabs},
                       {"holds", ok}});
  }
  out.holds = out.holds && independent;
  Json counts = Json::object();
  for (const auto& [key, num] : class_counts(c))
    counts[key] = num;
  out.json = {{"instance", instance_to_json(c, std::nullopt)},
              {"t_order", {c.t_order.first, c.t_order.second}},
              {"levi", levi_to_json(c.levi)},
              {"vol", to_string(vol_at(c))},
              {"class_counts", counts},
              {"results", results},
              {"xi_independent", independent},
              {"holds", out.holds},
              {"seconds", since(t0)}};
  return out;
}

CountReport descent_report(const CharDatum& c, long spot_classes)
{
  auto t0 = Clock::now();
  CountReport out;
  out.holds = true;
  Json checks = Json::array();
  for (const auto& key : {"1|2", "2|1"}) {
    auto d = descent_check(c, Parabolic::from_key(key, 2));
    out.holds = out.holds && d.holds;
    checks.push_back({{"q", key}, {"lhs", to_string(d.lhs)}, {"rhs", to_string(d.rhs)}, {"holds", d.holds}});
  }
  auto s = levi_descent_spot_check(c, spot_classes);
  out.holds = out.holds && s.failures == 0;
  out.json = {{"instance", instance_to_json(c, std::nullopt)},
              {"deg_D", c.deg_D()},
              {"torus_side", to_string(torus_orbital_integral(c).value())},
              {"descent", checks},
              {"spot_check", {{"checked", s.checked}, {"failures", s.failures}}},
              {"holds", out.holds},
              {"seconds", since(t0)}};
  return out;
}

CountReport bound_report(const CharDatum& c, const Vec& xi)
{
  CountReport out;
  auto pts = enumerate_points(c, xi);
  Q max_x = 0;
  long bad = 0;
  for (const auto& pt : pts) {
    try {
      for (const auto& [pair, x] : validate_family(point_family(pt)))
        max_x = std::max(max_x, x);
      bad += !gl2_bound_check(pt);
    } catch (const std::invalid_argument&) {
      ++bad;
    }
  }
  out.holds = bad == 0 && !pts.empty();
  out.json = {{"points", static_cast<long>(pts.size())},
              {"max_coefficient", to_string(max_x)},
              {"bound", 2 * c.deg_D()},
              {"violations", bad},
              {"holds", out.holds}};
  return out;
}

Json suites_to_json(const std::vector<SuiteResult>& results, bool timing)
{
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back(r.to_json(timing));
    all = all && r.passed();
  }
  return Json{{"suites", arr}, {"passed", all}};
}

}  // namespace hitchin
