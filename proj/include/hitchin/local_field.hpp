#pragma once

#include "hitchin/fq_poly.hpp"
#include "hitchin/rational.hpp"

#include <string>
#include <vector>

namespace hitchin {

// A place of F_q(t). Local computations use the local variable: t at finite places, s = 1/t at infinity,
// where the uniformizer is the polynomial s.
struct Place {
  FqPoly poly;
  bool infinite = false;

  int degree() const { return poly.degree(); }
  std::string key() const { return infinite ? "inf" : poly.to_string("t"); }
  bool operator==(const Place& o) const { return infinite == o.infinite && poly == o.poly; }
  bool operator<(const Place& o) const;
};

Place finite_place(const FqPoly& p);
Place infinite_place(const Fq& f);
// Finite places of degree <= deg_bound, by degree then lexicographically, followed by infinity.
std::vector<Place> places(const Fq& f, int deg_bound);

// Global element of F_q(t) written in the local variable of v.
RatFunc localize(const RatFunc& x, const Place& v);
// Valuation of an element already written in the local variable.
int local_val(const RatFunc& x, const Place& v);
RatFunc uniformizer_power(const Place& v, int k);
// Residue representatives: polynomials of degree < deg(v) in the local variable.
std::vector<FqPoly> residue_reps(const Place& v);
// Digits c_lo..c_{hi-1} with x = sum c_k pi^k + O(pi^hi); requires val(x) >= lo.
std::vector<FqPoly> expansion(const RatFunc& x, const Place& v, int lo, int hi);
RatFunc from_expansion(const std::vector<FqPoly>& digits, const Place& v, int lo);

struct Mat2 {
  RatFunc a, b, c, d;  // [[a, b], [c, d]]

  Mat2 operator*(const Mat2& o) const;
  RatFunc det() const;
  Mat2 inverse() const;
  bool operator==(const Mat2& o) const = default;
  std::string to_string(const std::string& var) const;
};

Mat2 identity2(const Fq& f);
Mat2 diagonal2(const RatFunc& x, const RatFunc& y);
// True when every entry has valuation >= shift.
bool integral(const Mat2& m, const Place& v, int shift = 0);

struct IwasawaFactor {
  Mat2 k;         // element of SL_2(O_v)
  Mat2 reduced;   // g k, triangular with diagonal (x, x^{-1})
  RatFunc x;
};
// g k upper triangular.
IwasawaFactor iwasawa_upper(const Mat2& g, const Place& v);
// g k lower triangular.
IwasawaFactor iwasawa_lower(const Mat2& g, const Place& v);

// Canonical representative [[pi^a, u], [0, pi^{-a}]] of g SL_2(O_v), u reduced modulo pi^a O_v.
struct HermiteForm {
  int a = 0;
  RatFunc u;
  std::string key() const;
  bool operator==(const HermiteForm& o) const { return a == o.a && u == o.u; }
};
HermiteForm hermite_form(const Mat2& g, const Place& v);
Mat2 hermite_matrix(const Place& v, int a, const RatFunc& u);

// H_P of a diagonal Levi part diag(x, x^{-1}) at v: -deg(v) val(x) (1,-1).
Vec torus_height(const RatFunc& x, const Place& v);

}  // namespace hitchin
