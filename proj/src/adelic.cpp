#include "hitchin/adelic.hpp"

#include "hitchin/weights.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace hitchin {

namespace {

const Parabolic& borel()
{
  static const Parabolic b(2, {{0}, {1}});
  return b;
}

const Parabolic& opposite_borel()
{
  static const Parabolic b(2, {{1}, {0}});
  return b;
}

RatFunc zero(const Fq& f) { return RatFunc::constant(f, 0); }

std::vector<DivisorTerm> parse_divisor(const Fq& f, const std::vector<std::pair<std::string, int>>& D)
{
  std::vector<DivisorTerm> out;
  for (const auto& [text, mult] : D) {
    if (text == "inf" || text == "infinity")
      throw std::invalid_argument("divisor: infinity must not lie in the support of D");
    if (mult < 0)
      throw std::invalid_argument("divisor: negative multiplicity at " + text);
    RatFunc r = parse_ratfunc(text, f);
    if (r.den().degree() != 0)
      throw std::invalid_argument("divisor: " + text + " is not a polynomial");
    Place v = finite_place(r.num());
    for (auto& t : out)
      if (t.place == v)
        throw std::invalid_argument("divisor: repeated place " + text);
    if (mult > 0)
      out.push_back({v, mult});
  }
  std::sort(out.begin(), out.end(), [](const DivisorTerm& a, const DivisorTerm& b) { return a.place < b.place; });
  return out;
}

Mat2 localize(const Mat2& m, const Place& v)
{
  return {localize(m.a, v), localize(m.b, v), localize(m.c, v), localize(m.d, v)};
}

// All polynomials of degree < n in the local variable (used for units and digit tuples).
std::vector<FqPoly> polys_below(const Fq& f, int n)
{
  std::vector<FqPoly> out;
  long count = 1;
  for (int i = 0; i < n; ++i)
    count *= f.q();
  for (long code = 0; code < count; ++code) {
    std::vector<int> c(n);
    long x = code;
    for (int i = 0; i < n; ++i) {
      c[i] = static_cast<int>(x % f.q());
      x /= f.q();
    }
    out.emplace_back(&f, c);
  }
  return out;
}

Mat2 act(const RatFunc& f, const Mat2& g) { return diagonal2(f, f.inverse()) * g; }

void require_split(const CharDatum& c, const char* who)
{
  if (c.kind != CharKind::split)
    throw std::invalid_argument(std::string(who) + ": requires split data");
}

}  // namespace

int CharDatum::deg_D() const
{
  int s = 0;
  for (const auto& t : D)
    s += t.mult * t.place.degree();
  return s;
}

int CharDatum::d_at(const Place& v) const
{
  for (const auto& t : D)
    if (t.place == v)
      return t.mult;
  return 0;
}

Mat2 CharDatum::X() const
{
  const Fq& f = field();
  if (kind == CharKind::split)
    return diagonal2(lambda, -lambda);
  return {zero(f), RatFunc::constant(f, f.neg(det)), RatFunc::constant(f, 1), zero(f)};
}

int CharDatum::e_at(const Place& v) const
{
  if (kind == CharKind::elliptic)
    return d_at(v);
  return local_val(localize(lambda, v), v) + d_at(v);
}

std::vector<Place> CharDatum::support() const
{
  std::vector<Place> out;
  auto push = [&](const Place& v) {
    if (std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(v);
  };
  for (const auto& t : D)
    push(t.place);
  if (kind == CharKind::split) {
    for (const auto& [p, m] : factor(lambda.num()))
      push(Place{p, false});
    for (const auto& [p, m] : factor(lambda.den()))
      push(Place{p, false});
  }
  std::erase_if(out, [&](const Place& v) { return e_at(v) == 0 && d_at(v) == 0; });
  std::sort(out.begin(), out.end());
  out.push_back(infinite_place(field()));
  return out;
}

CharDatum build_char(int q, const std::vector<std::pair<std::string, int>>& D, const std::string& lambda)
{
  const Fq& f = field(q);
  if (f.p() == 2)
    throw std::invalid_argument("build_char: split SL(2) data needs odd characteristic");
  CharDatum c;
  c.q = q;
  c.kind = CharKind::split;
  c.D = parse_divisor(f, D);
  c.lambda = parse_ratfunc(lambda, f);
  if (c.lambda.is_zero())
    throw std::invalid_argument("build_char: lambda must be nonzero");
  for (const auto& [p, m] : factor(c.lambda.den())) {
    Place v{p, false};
    if (m > c.d_at(v))
      throw std::invalid_argument("build_char: pole of lambda at " + v.key() + " exceeds D");
  }
  int vinf = c.lambda.valuation_at_infinity();
  if (vinf < 0)
    throw std::invalid_argument("build_char: lambda has a pole at infinity");
  if (vinf > 0)
    throw std::invalid_argument("build_char: roots at infinity coincide (lambda vanishes there)");
  int l = f.mul(c.lambda.num().lead(), f.inv(c.lambda.den().lead()));
  c.t_order = {f.to_string(l), f.to_string(f.neg(l))};
  c.levi = Levi::torus(2);
  return c;
}

CharDatum build_elliptic(int q, const std::vector<std::pair<std::string, int>>& D, int det)
{
  const Fq& f = field(q);
  if (f.p() == 2)
    throw std::invalid_argument("build_elliptic: needs odd characteristic");
  CharDatum c;
  c.q = q;
  c.kind = CharKind::elliptic;
  c.D = parse_divisor(f, D);
  if (!c.D.empty())
    throw std::invalid_argument("build_elliptic: only D = 0 is supported");
  c.det = f.from_int(det);
  if (c.det == 0 || f.is_square(f.neg(c.det)))
    throw std::invalid_argument("build_elliptic: u^2 + det splits over F_q");
  c.t_order = {"sqrt(" + f.to_string(f.neg(c.det)) + ")", "-sqrt(" + f.to_string(f.neg(c.det)) + ")"};
  c.levi = Levi::whole(2);
  return c;
}

std::string LocalClass::key() const { return place.key() + "/" + std::to_string(a) + ":" + u.to_string("z"); }

int certified_window(const CharDatum& c, const Place& v) { return c.e_at(v) + 1; }

bool springer_condition(const CharDatum& c, const Place& v, const Mat2& g)
{
  Mat2 y = g.inverse() * localize(c.X(), v) * g;
  return integral(y, v, -c.d_at(v));
}

LocalClass make_class(const Place& v, const Mat2& g)
{
  HermiteForm h = hermite_form(g, v);
  LocalClass cl;
  cl.place = v;
  cl.a = h.a;
  cl.u = h.u;
  cl.g = hermite_matrix(v, h.a, h.u);
  cl.hB = torus_height(iwasawa_upper(cl.g, v).x, v);
  cl.hBbar = torus_height(iwasawa_lower(cl.g, v).x, v);
  return cl;
}

LocalSpringer local_springer(const CharDatum& c, const Place& v, int window) { return local_springer(c, v, window, window); }

LocalSpringer local_springer(const CharDatum& c, const Place& v, int window, int depth)
{
  LocalSpringer out;
  out.place = v;
  out.e = c.e_at(v);
  out.window = window;
  if (window < certified_window(c, v) || depth < certified_window(c, v))
    throw std::invalid_argument("local_springer: window below the certified bound " +
                                std::to_string(certified_window(c, v)) + " at " + v.key());
  const Fq& f = c.field();
  auto reps = residue_reps(v);
  std::size_t total = 1;
  for (int i = 0; i < depth; ++i)
    total *= reps.size();
  for (int a = -window; a <= window; ++a)
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<FqPoly> digits(depth);
      std::size_t x = code;
      for (int i = 0; i < depth; ++i) {
        digits[i] = reps[x % reps.size()];
        x /= reps.size();
      }
      RatFunc u = from_expansion(digits, v, a - depth);
      if (u.is_zero())
        u = zero(f);
      Mat2 g = hermite_matrix(v, a, u);
      if (springer_condition(c, v, g))
        out.classes.push_back(make_class(v, g));
    }
  return out;
}

bool window_stable(const CharDatum& c, const Place& v)
{
  int w = certified_window(c, v);
  auto keys = [](const LocalSpringer& s) {
    std::set<std::string> k;
    for (const auto& cl : s.classes)
      k.insert(cl.key());
    return k;
  };
  return keys(local_springer(c, v, w, w)) == keys(local_springer(c, v, w, w + 1));
}

Vec hp_global(const AdelicPoint& pt, const Parabolic& p)
{
  Vec h = zero_vec(2);
  if (p.is_whole())
    return h;
  bool upper = p == borel();
  if (!upper && p != opposite_borel())
    throw std::invalid_argument("hp_global: parabolic is not semi-standard for SL(2)");
  for (const auto& cl : pt.classes)
    h = add(h, upper ? cl.hB : cl.hBbar);
  return h;
}

PositiveOrthogonalFamily point_family(const AdelicPoint& pt)
{
  std::map<Parabolic, Vec> pts;
  pts.emplace(borel(), neg(hp_global(pt, borel())));
  pts.emplace(opposite_borel(), neg(hp_global(pt, opposite_borel())));
  return PositiveOrthogonalFamily(make_group(2), Levi::torus(2), pts);
}

bool gl2_bound_check(const AdelicPoint& pt)
{
  auto coeffs = validate_family(point_family(pt));
  Q bound = 2 * pt.datum->deg_D();
  for (const auto& [pair, x] : coeffs)
    if (x < 0 || x > bound)
      return false;
  return true;
}

std::vector<LocalOrbit> local_torus_orbits(const CharDatum& c, const Place& v)
{
  require_split(c, "local_torus_orbits");
  const Fq& f = c.field();
  auto springer = local_springer(c, v, certified_window(c, v));
  std::vector<LocalClass> normalized;
  std::set<std::string> valid;
  for (const auto& cl : springer.classes)
    if (cl.a == 0) {
      normalized.push_back(cl);
      valid.insert(cl.key());
    }
  int m = std::max(1, c.e_at(v));
  std::vector<RatFunc> units;
  for (const auto& p : polys_below(f, m * v.degree()))
    if (!(p % v.poly).is_zero())
      units.push_back(RatFunc::from_poly(p));
  std::vector<LocalOrbit> out;
  std::set<std::string> seen;
  for (const auto& cl : normalized) {
    if (seen.count(cl.key()))
      continue;
    std::set<std::string> orbit;
    for (const auto& eps : units) {
      LocalClass moved = make_class(v, act(eps, cl.g));
      if (!valid.count(moved.key()))
        throw std::logic_error("local_torus_orbits: torus action left the local set at " + v.key());
      orbit.insert(moved.key());
    }
    seen.insert(orbit.begin(), orbit.end());
    out.push_back({cl, static_cast<long>(orbit.size())});
  }
  return out;
}

namespace {

// Every combination of one entry per place.
template <class T>
void for_each_product(const std::vector<std::vector<T>>& sets, const std::function<void(const std::vector<T>&)>& fn)
{
  std::vector<T> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == sets.size()) {
      fn(cur);
      return;
    }
    for (const auto& x : sets[i]) {
      cur.push_back(x);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Verifies the elliptic local sets are the standard lattice alone at infinity and the degree-1 places.
void check_elliptic_local_sets(const CharDatum& c)
{
  std::vector<Place> check = places(c.field(), 1);
  for (const auto& v : check) {
    auto s = local_springer(c, v, certified_window(c, v));
    if (s.classes.size() != 1 || s.classes[0].a != 0 || !s.classes[0].u.is_zero())
      throw std::logic_error("elliptic local set at " + v.key() + " is not the standard lattice");
  }
}

long elliptic_stabilizer(const CharDatum& c)
{
  const Fq& f = c.field();
  long n = 0;
  for (int a = 0; a < f.q(); ++a)
    for (int b = 0; b < f.q(); ++b)
      if (f.add(f.mul(a, a), f.mul(c.det, f.mul(b, b))) == 1)
        ++n;
  return n;
}

}  // namespace

NormalizedScalar orbital_integral(const CharDatum& c, const Weight& w)
{
  if (c.kind == CharKind::elliptic) {
    if (w.kind != WeightKind::one)
      throw std::invalid_argument("orbital_integral: elliptic data supports only the trivial weight");
    check_elliptic_local_sets(c);
    return NormalizedScalar(1);
  }
  std::vector<std::vector<LocalOrbit>> sets;
  for (const auto& v : c.support())
    sets.push_back(local_torus_orbits(c, v));
  auto dirs = generic_directions(Levi::torus(2), 3);
  NormalizedScalar total;
  for_each_product<LocalOrbit>(sets, [&](const std::vector<LocalOrbit>& combo) {
    AdelicPoint pt{&c, {}};
    Q size = 1;
    for (const auto& o : combo) {
      pt.classes.push_back(o.rep);
      size *= o.size;
    }
    auto fam = point_family(pt);
    NormalizedScalar value;
    switch (w.kind) {
      case WeightKind::vM:
        value = v_weight(fam, Method::direct);
        break;
      case WeightKind::wM_xi:
        value = NormalizedScalar(Q(w_weight(fam, w.xi, Method::direct)));
        break;
      case WeightKind::vQ:
        value = relative_family_limit(v_family(fam), w.q.value(), dirs);
        break;
      case WeightKind::vL: {
        const Levi& l = w.l.value();
        value = relative_family_limit(v_family(fam), levi_geometry(l).minimal.front(), dirs);
        break;
      }
      case WeightKind::one:
        value = NormalizedScalar(1);
        break;
    }
    total = total + value * size;
  });
  return total.canonical();
}

NormalizedScalar torus_orbital_integral(const CharDatum& c)
{
  require_split(c, "torus_orbital_integral");
  for (const auto& v : c.support())
    if (!springer_condition(c, v, identity2(c.field())))
      return NormalizedScalar(0);
  return NormalizedScalar(1);
}

Q vol_at(const CharDatum& c)
{
  // P^1 has trivial degree-0 class group, so the quotient is one point with stabilizer T_X(F) n T_X(O).
  if (c.kind == CharKind::elliptic)
    return Q(1, elliptic_stabilizer(c));
  const Fq& f = c.field();
  long units = 0;
  for (int x = 1; x < f.q(); ++x)
    if (f.mul(x, f.inv(x)) == 1)
      ++units;
  return Q(1, units);
}

std::vector<AdelicPoint> enumerate_points(const CharDatum& c, const Vec& xi)
{
  require_split(c, "enumerate_points");
  auto sup = c.support();
  Place inf = sup.back();
  std::vector<std::vector<LocalClass>> sets;
  for (std::size_t i = 0; i + 1 < sup.size(); ++i) {
    std::vector<LocalClass> normalized;
    for (const auto& cl : local_springer(c, sup[i], certified_window(c, sup[i])).classes)
      if (cl.a == 0)
        normalized.push_back(cl);
    sets.push_back(normalized);
  }
  Q s = xi.at(0);
  long lo = floor_q(s).get_si() - 1;
  long hi = ceil_q(s).get_si() + c.deg_D() + 1;
  std::vector<LocalClass> at_inf;
  for (long a = lo; a <= hi; ++a) {
    Mat2 g = hermite_matrix(inf, static_cast<int>(a), zero(c.field()));
    if (!springer_condition(c, inf, g))
      throw std::logic_error("enumerate_points: diagonal class fails at infinity");
    at_inf.push_back(make_class(inf, g));
  }
  sets.push_back(at_inf);
  std::vector<AdelicPoint> out;
  for_each_product<LocalClass>(sets, [&](const std::vector<LocalClass>& combo) { out.push_back({&c, combo}); });
  return out;
}

DirectCount fiber_count_direct(const CharDatum& c, const Vec& xi)
{
  if (!is_general_position(xi, make_group(2)))
    throw std::invalid_argument("fiber_count_direct: xi is not in general position");
  const Fq& f = c.field();
  DirectCount out;
  if (c.kind == CharKind::elliptic) {
    check_elliptic_local_sets(c);
    long stab = elliptic_stabilizer(c);
    out.count = Q(1, stab);
    out.points = 1;
    out.orbits = 1;
    out.stabilizers[stab] = 1;
    return out;
  }
  auto pts = enumerate_points(c, xi);
  long a_lo = pts.empty() ? 0 : pts.front().classes.back().a, a_hi = a_lo;
  for (const auto& pt : pts) {
    a_lo = std::min<long>(a_lo, pt.classes.back().a);
    a_hi = std::max<long>(a_hi, pt.classes.back().a);
  }
  auto point_key = [](const AdelicPoint& pt) {
    std::string k;
    for (const auto& cl : pt.classes)
      k += cl.key() + ";";
    return k;
  };
  std::set<std::string> seen;
  for (const auto& pt : pts) {
    if (!hull_member(point_family(pt), xi))
      continue;
    long a_inf = pt.classes.back().a;
    if (a_inf == a_lo || a_inf == a_hi)
      throw std::logic_error("fiber_count_direct: window at infinity too small");
    ++out.points;
    std::string key = point_key(pt);
    if (seen.count(key))
      continue;
    long stab = 0;
    std::set<std::string> orbit;
    for (int x = 1; x < f.q(); ++x) {
      AdelicPoint moved{&c, {}};
      for (const auto& cl : pt.classes)
        moved.classes.push_back(make_class(cl.place, act(RatFunc::constant(f, x), cl.g)));
      std::string mk = point_key(moved);
      orbit.insert(mk);
      if (mk == key)
        ++stab;
    }
    if (stab * static_cast<long>(orbit.size()) != f.q() - 1)
      throw std::logic_error("fiber_count_direct: orbit-stabilizer mismatch");
    seen.insert(orbit.begin(), orbit.end());
    ++out.orbits;
    ++out.stabilizers[stab];
    out.count += Q(1, stab);
  }
  return out;
}

FormulaCount fiber_count_formula(const CharDatum& c, const Vec& xi)
{
  if (!is_general_position(xi, make_group(2)))
    throw std::invalid_argument("fiber_count_formula: xi is not in general position");
  FormulaCount out;
  Q vol = vol_at(c);
  if (c.kind == CharKind::elliptic) {
    NormalizedScalar j = orbital_integral(c, Weight{});
    out.w_form = vol * j.value();
    out.v_form = out.w_form;
    out.comparison_holds = true;
    out.holds = true;
    return out;
  }
  NormalizedScalar jw = orbital_integral(c, Weight{WeightKind::wM_xi, xi, std::nullopt, std::nullopt});
  NormalizedScalar jv = orbital_integral(c, Weight{WeightKind::vM, {}, std::nullopt, std::nullopt});
  LatticeQ full = cochar_lattice(Levi::torus(2), LatticeKind::full);
  NormalizedScalar jv_norm = jv * NormalizedScalar::volume_of(full, -1);
  if (!jw.is_rational() || !jv_norm.is_rational())
    throw std::domain_error("fiber_count_formula: volume factors do not cancel");
  out.w_form = vol * jw.value();
  out.v_form = vol * jv_norm.value();

  out.comparison_holds = true;
  std::vector<std::vector<LocalOrbit>> sets;
  for (const auto& v : c.support())
    sets.push_back(local_torus_orbits(c, v));
  for_each_product<LocalOrbit>(sets, [&](const std::vector<LocalOrbit>& combo) {
    AdelicPoint pt{&c, {}};
    for (const auto& o : combo)
      pt.classes.push_back(o.rep);
    auto fam = point_family(pt);
    NormalizedScalar lhs = NormalizedScalar::volume_of(full) * Q(w_weight(fam, xi, Method::direct));
    if (!lhs.equals(v_weight(fam, Method::direct)))
      out.comparison_holds = false;
  });
  out.holds = out.comparison_holds && out.w_form == out.v_form;
  return out;
}

DescentCheck descent_check(const CharDatum& c, const Parabolic& q)
{
  require_split(c, "descent_check");
  if (q != borel() && q != opposite_borel())
    throw std::invalid_argument("descent_check: Q must be a proper parabolic of SL(2)");
  NormalizedScalar lhs = orbital_integral(c, Weight{WeightKind::vQ, {}, q, std::nullopt});
  if (!lhs.is_rational())
    throw std::domain_error("descent_check: v^Q weight is not rational");
  Q factor = 1;
  for (int i = 0; i < c.deg_D(); ++i)
    factor *= c.q;
  DescentCheck out{lhs.value(), factor * torus_orbital_integral(c).value(), false};
  out.holds = out.lhs == out.rhs;
  return out;
}

SpotCheck levi_descent_spot_check(const CharDatum& c, long max_classes)
{
  require_split(c, "levi_descent_spot_check");
  SpotCheck out;
  auto dirs = generic_directions(Levi::torus(2), 3);
  for (const auto& v : c.support()) {
    auto s = local_springer(c, v, certified_window(c, v));
    for (const auto& cl : s.classes) {
      if (out.checked >= max_classes)
        return out;
      ++out.checked;
      int vu = cl.u.is_zero() ? cl.a : std::min(cl.a, local_val(cl.u, v));
      Q d = v.degree();
      Vec hb{-d * cl.a, d * cl.a};
      Vec hbb{-d * vu, d * vu};
      bool ok = true;
      for (const auto& [p, h] : {std::pair{borel(), hb}, std::pair{opposite_borel(), hbb}}) {
        auto iw = p == borel() ? iwasawa_upper(cl.g, v) : iwasawa_lower(cl.g, v);
        RatFunc x = iw.x;
        const Mat2& r = iw.reduced;
        RatFunc other = p == borel() ? r.d : r.d;
        ok = ok && integral(iw.k, v) && (x * other) == RatFunc::constant(c.field(), 1);
        Vec hl = torus_height(x, v);
        ok = ok && hl == h;
        for (const auto& l : dirs)
          ok = ok && SeriesQ::exp_linear(l(neg(h)), 4).agrees_with(SeriesQ::exp_linear(l(neg(hl)), 4));
      }
      if (!ok)
        ++out.failures;
    }
  }
  return out;
}

std::map<std::string, long> class_counts(const CharDatum& c)
{
  std::map<std::string, long> out;
  if (c.kind == CharKind::elliptic) {
    for (const auto& v : places(c.field(), 1))
      out[v.key()] = static_cast<long>(local_springer(c, v, certified_window(c, v)).classes.size());
    return out;
  }
  for (const auto& v : c.support()) {
    long n = 0;
    for (const auto& cl : local_springer(c, v, certified_window(c, v)).classes)
      n += cl.a == 0;
    out[v.key()] = n;
  }
  return out;
}

}  // namespace hitchin
