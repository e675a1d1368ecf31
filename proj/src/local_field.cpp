#include "hitchin/local_field.hpp"

#include <stdexcept>

namespace hitchin {

bool Place::operator<(const Place& o) const
{
  if (infinite != o.infinite)
    return !infinite;
  return poly < o.poly;
}

Place finite_place(const FqPoly& p)
{
  if (!p.is_monic() || !is_irreducible(p))
    throw std::invalid_argument("finite_place: " + p.to_string() + " is not monic irreducible");
  return Place{p, false};
}

Place infinite_place(const Fq& f) { return Place{FqPoly::x(f), true}; }

std::vector<Place> places(const Fq& f, int deg_bound)
{
  if (deg_bound < 1)
    throw std::invalid_argument("places: degree bound must be positive");
  std::vector<Place> out;
  for (int d = 1; d <= deg_bound; ++d)
    for (const auto& p : monic_irreducibles(f, d))
      out.push_back(Place{p, false});
  out.push_back(infinite_place(f));
  return out;
}

RatFunc localize(const RatFunc& x, const Place& v) { return v.infinite ? x.at_inverse_variable() : x; }

int local_val(const RatFunc& x, const Place& v) { return x.valuation(v.poly); }

RatFunc uniformizer_power(const Place& v, int k)
{
  return RatFunc::from_poly(v.poly).pow(k);
}

std::vector<FqPoly> residue_reps(const Place& v)
{
  const Fq& f = v.poly.field();
  std::vector<FqPoly> out;
  long count = 1;
  for (int i = 0; i < v.degree(); ++i)
    count *= f.q();
  for (long code = 0; code < count; ++code) {
    std::vector<int> c(v.degree());
    long x = code;
    for (int i = 0; i < v.degree(); ++i) {
      c[i] = static_cast<int>(x % f.q());
      x /= f.q();
    }
    out.emplace_back(&f, c);
  }
  return out;
}

std::vector<FqPoly> expansion(const RatFunc& x, const Place& v, int lo, int hi)
{
  const Fq& f = v.poly.field();
  std::vector<FqPoly> out;
  if (hi <= lo)
    return out;
  if (x.is_zero()) {
    out.assign(hi - lo, FqPoly(&f, {}));
    return out;
  }
  if (local_val(x, v) < lo)
    throw std::invalid_argument("expansion: valuation below the requested start");
  RatFunc y = x * uniformizer_power(v, -lo);
  for (int k = lo; k < hi; ++k) {
    FqPoly c = (y.num() * inverse_mod(y.den(), v.poly)) % v.poly;
    out.push_back(c);
    y = (y - RatFunc::from_poly(c)) * uniformizer_power(v, -1);
  }
  return out;
}

RatFunc from_expansion(const std::vector<FqPoly>& digits, const Place& v, int lo)
{
  const Fq& f = v.poly.field();
  RatFunc r = RatFunc::constant(f, 0);
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (!digits[i].is_zero())
      r = r + RatFunc::from_poly(digits[i]) * uniformizer_power(v, lo + static_cast<int>(i));
  return r;
}

Mat2 Mat2::operator*(const Mat2& o) const
{
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

RatFunc Mat2::det() const { return a * d - b * c; }

Mat2 Mat2::inverse() const
{
  RatFunc di = det().inverse();
  return {d * di, -b * di, -c * di, a * di};
}

std::string Mat2::to_string(const std::string& var) const
{
  return "[[" + a.to_string(var) + ", " + b.to_string(var) + "], [" + c.to_string(var) + ", " + d.to_string(var) +
         "]]";
}

Mat2 identity2(const Fq& f)
{
  return {RatFunc::constant(f, 1), RatFunc::constant(f, 0), RatFunc::constant(f, 0), RatFunc::constant(f, 1)};
}

Mat2 diagonal2(const RatFunc& x, const RatFunc& y)
{
  const Fq& f = x.field();
  return {x, RatFunc::constant(f, 0), RatFunc::constant(f, 0), y};
}

bool integral(const Mat2& m, const Place& v, int shift)
{
  for (const auto* e : {&m.a, &m.b, &m.c, &m.d})
    if (local_val(*e, v) < shift)
      return false;
  return true;
}

namespace {

Mat2 swap_k(const Fq& f)
{
  return {RatFunc::constant(f, 0), RatFunc::constant(f, f.neg(1)), RatFunc::constant(f, 1), RatFunc::constant(f, 0)};
}

}  // namespace

IwasawaFactor iwasawa_upper(const Mat2& g, const Place& v)
{
  const Fq& f = v.poly.field();
  Mat2 k = identity2(f);
  Mat2 h = g;
  if (!h.c.is_zero()) {
    if (h.d.is_zero() || local_val(h.c, v) < local_val(h.d, v)) {
      k = k * swap_k(f);
      h = g * k;
    }
    RatFunc r = h.c / h.d;
    Mat2 shear{RatFunc::constant(f, 1), RatFunc::constant(f, 0), -r, RatFunc::constant(f, 1)};
    k = k * shear;
    h = g * k;
  }
  if (!h.c.is_zero() || !integral(k, v))
    throw std::logic_error("iwasawa_upper: reduction failed");
  return {k, h, h.a};
}

IwasawaFactor iwasawa_lower(const Mat2& g, const Place& v)
{
  const Fq& f = v.poly.field();
  Mat2 k = identity2(f);
  Mat2 h = g;
  if (!h.b.is_zero()) {
    if (h.a.is_zero() || local_val(h.b, v) < local_val(h.a, v)) {
      k = k * swap_k(f);
      h = g * k;
    }
    RatFunc r = h.b / h.a;
    Mat2 shear{RatFunc::constant(f, 1), -r, RatFunc::constant(f, 0), RatFunc::constant(f, 1)};
    k = k * shear;
    h = g * k;
  }
  if (!h.b.is_zero() || !integral(k, v))
    throw std::logic_error("iwasawa_lower: reduction failed");
  return {k, h, h.a};
}

std::string HermiteForm::key() const { return std::to_string(a) + ":" + u.to_string("z"); }

HermiteForm hermite_form(const Mat2& g, const Place& v)
{
  auto iw = iwasawa_upper(g, v);
  int a = local_val(iw.x, v);
  RatFunc eps = iw.x * uniformizer_power(v, -a);
  RatFunc y = iw.reduced.b * eps;
  HermiteForm h;
  h.a = a;
  int vy = local_val(y, v);
  if (y.is_zero() || vy >= a)
    h.u = RatFunc::constant(v.poly.field(), 0);
  else
    h.u = from_expansion(expansion(y, v, vy, a), v, vy);
  return h;
}

Mat2 hermite_matrix(const Place& v, int a, const RatFunc& u)
{
  const Fq& f = v.poly.field();
  return {uniformizer_power(v, a), u, RatFunc::constant(f, 0), uniformizer_power(v, -a)};
}

Vec torus_height(const RatFunc& x, const Place& v)
{
  Q h = -Q(v.degree()) * local_val(x, v);
  return {h, -h};
}

}  // namespace hitchin
