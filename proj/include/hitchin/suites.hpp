#pragma once

#include "hitchin/adelic.hpp"
#include "hitchin/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hitchin {

struct SuiteResult {
  std::string name;
  long cases = 0;
  long checks = 0;
  long failures = 0;
  std::string digest;               // deterministic summary of the computed values
  std::vector<std::string> notes;   // first few failure messages
  double seconds = 0;

  bool passed() const { return failures == 0 && checks > 0; }
  void fail(const std::string& msg);
  Json to_json(bool timing) const;
};

struct SuiteConfig {
  std::uint64_t seed = 7;
  long cases = 100;
  long points = 1000;   // random points per family for the polytope and HN suites
  int xis = 3;          // general-position xi per family
  int directions = 10;  // generic directions for the Langlands indicator
};

// Case i draws from Rng(seed * 1000003 + i) with n = 2 + i mod 3.
std::vector<SuiteResult> weight_suites(const SuiteConfig& cfg);   // w_weight, v_weight
SuiteResult polytope_suite(const SuiteConfig& cfg);
SuiteResult hn_suite(const SuiteConfig& cfg);
// Lemma-type sums for n in {2, 3}, with both coset representative sets.
SuiteResult identity_suite(const SuiteConfig& cfg);

struct CountInstance {
  std::string name;
  int q;
  std::vector<std::pair<std::string, int>> D;
  std::string lambda;
};
std::vector<CountInstance> standard_instances();
std::vector<Vec> standard_xis();

struct CountReport {
  Json json;
  bool holds = false;
};
// Both pipelines at every xi, per-place class counts and the xi-independence check.
CountReport count_report(const CharDatum& c, const std::vector<Vec>& xis);
// Descent for both Borels and the Levi spot check.
CountReport descent_report(const CharDatum& c, long spot_classes);
// Every enumerated point yields a valid family with coefficients in [0, 2 deg D].
CountReport bound_report(const CharDatum& c, const Vec& xi);

Json suites_to_json(const std::vector<SuiteResult>& results, bool timing);

}  // namespace hitchin
