#pragma once

#include "hitchin/local_field.hpp"
#include "hitchin/polytope.hpp"
#include "hitchin/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hitchin {

enum class CharKind { split, elliptic };

struct DivisorTerm {
  Place place;
  int mult = 0;
};

// Characteristic (a, t) for SL(2) over F_q(t) on P^1, with D supported at finite places.
struct CharDatum {
  int q = 3;
  std::vector<DivisorTerm> D;
  CharKind kind = CharKind::split;
  RatFunc lambda;   // split: eigenvalues +-lambda
  int det = 0;      // elliptic: char. polynomial u^2 + det, det in F_q
  Levi levi;
  std::pair<std::string, std::string> t_order;  // eigenvalues at infinity, in this order

  const Fq& field() const { return hitchin::field(q); }
  int deg_D() const;
  int d_at(const Place& v) const;
  // Global section X: diag(lambda, -lambda) or the companion matrix [[0, -det], [1, 0]].
  Mat2 X() const;
  // val_v(lambda_1 - lambda_2) + d_v: the depth of the local condition.
  int e_at(const Place& v) const;
  // Places where the local set is not a single torus orbit of the standard lattice, plus infinity.
  std::vector<Place> support() const;
};

CharDatum build_char(int q, const std::vector<std::pair<std::string, int>>& D, const std::string& lambda);
CharDatum build_elliptic(int q, const std::vector<std::pair<std::string, int>>& D, int det);

struct LocalClass {
  Place place;
  int a = 0;
  RatFunc u;
  Mat2 g;
  Vec hB, hBbar;   // H_B(g), H_{B-bar}(g) from the Iwasawa factorization
  std::string key() const;
};

struct LocalSpringer {
  Place place;
  int e = 0;
  int window = 0;
  std::vector<LocalClass> classes;  // |a| <= window, u of depth <= window
};

// Certified enumeration window e_v + 1.
int certified_window(const CharDatum& c, const Place& v);
// Hermite classes L with X L in pi^{-d_v} L; throws if window is below the certified bound.
LocalSpringer local_springer(const CharDatum& c, const Place& v, int window);
LocalSpringer local_springer(const CharDatum& c, const Place& v, int window, int depth);
bool springer_condition(const CharDatum& c, const Place& v, const Mat2& g);
LocalClass make_class(const Place& v, const Mat2& g);
// Enlarging the u-depth by one never adds classes.
bool window_stable(const CharDatum& c, const Place& v);

struct AdelicPoint {
  const CharDatum* datum = nullptr;
  std::vector<LocalClass> classes;  // one per support place; trivial elsewhere
};

Vec hp_global(const AdelicPoint& pt, const Parabolic& p);
PositiveOrthogonalFamily point_family(const AdelicPoint& pt);
bool gl2_bound_check(const AdelicPoint& pt);

enum class WeightKind { vM, wM_xi, vQ, vL, one };
struct Weight {
  WeightKind kind = WeightKind::one;
  Vec xi;
  std::optional<Parabolic> q;
  std::optional<Levi> l;
};

// Local T(O_v)-orbits of the a = 0 classes, with orbit sizes.
struct LocalOrbit {
  LocalClass rep;
  long size = 0;
};
std::vector<LocalOrbit> local_torus_orbits(const CharDatum& c, const Place& v);

NormalizedScalar orbital_integral(const CharDatum& c, const Weight& w);
NormalizedScalar torus_orbital_integral(const CharDatum& c);

Q vol_at(const CharDatum& c);

struct DirectCount {
  Q count;
  long points = 0;        // normalized points in the window
  long orbits = 0;
  std::map<long, long> stabilizers;  // order -> number of orbits
};
DirectCount fiber_count_direct(const CharDatum& c, const Vec& xi);

struct FormulaCount {
  Q w_form;
  Q v_form;
  bool comparison_holds = false;  // covol(X_*(M)) J^xi_M = J^G_M class by class
  bool holds = false;
};
FormulaCount fiber_count_formula(const CharDatum& c, const Vec& xi);

struct DescentCheck {
  Q lhs;
  Q rhs;
  bool holds = false;
};
DescentCheck descent_check(const CharDatum& c, const Parabolic& q);

// H_Q(g) from the Hermite data against H_T(l_Q(g)) from the Iwasawa factor, and the v-family series.
struct SpotCheck {
  long checked = 0;
  long failures = 0;
};
SpotCheck levi_descent_spot_check(const CharDatum& c, long max_classes);

// Enumerated points of the split fiber inside the A-window, for positivity and bound checks.
std::vector<AdelicPoint> enumerate_points(const CharDatum& c, const Vec& xi);

std::map<std::string, long> class_counts(const CharDatum& c);

}  // namespace hitchin
