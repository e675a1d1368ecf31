#include "hitchin/weights.hpp"

#include "hitchin/hull_volume.hpp"
#include "hitchin/kernels.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

namespace hitchin {

FloorParts floor_decompose(const Vec& mu, const Parabolic& p, IntegerPart convention)
{
  auto x = coroot_coordinates(mu, p);
  if (!x)
    throw std::invalid_argument("floor_decompose: vector is not in a_M");
  const auto& cor = levi_geometry(p.levi()).bases.at(p).coroots;
  Vec integral = zero_vec(p.n());
  for (std::size_t i = 0; i < x->size(); ++i) {
    Z k = convention == IntegerPart::floor ? floor_q((*x)[i]) : Z(ceil_q((*x)[i]) - 1);
    integral = add(integral, scale(Q(k), cor[i]));
  }
  return {integral, sub(mu, integral)};
}

namespace {

void require_generic(const Parabolic& p, const Covector& lambda0, const char* who)
{
  for (const auto& c : root_bases(p).coroots)
    if (lambda0(c) == 0)
      throw std::invalid_argument(std::string(who) + ": direction vanishes on a coroot of " + p.key());
}

const LatticeQ& scnx_lattice(const Levi& m)
{
  static std::mutex mu;
  static std::map<Levi, LatticeQ> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end())
    it = cache.emplace(m, cochar_lattice(m, LatticeKind::scnx)).first;
  return it->second;
}

const LatticeQ& full_lattice(const Levi& m)
{
  static std::mutex mu;
  static std::map<Levi, LatticeQ> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end())
    it = cache.emplace(m, cochar_lattice(m, LatticeKind::full)).first;
  return it->second;
}

}  // namespace

SeriesQ cP_series(const Parabolic& p, const Covector& lambda0, int order)
{
  require_generic(p, lambda0, "cP_series");
  SeriesQ s = SeriesQ::constant(1, order);
  for (const auto& c : root_bases(p).coroots)
    s = s * (SeriesQ::exp_linear(lambda0(c), order) - SeriesQ::constant(1, order));
  return s;
}

DSeries dP_series(const Parabolic& p, const Covector& lambda0, int order)
{
  require_generic(p, lambda0, "dP_series");
  const auto& cor = root_bases(p).coroots;
  Q prod = 1;
  for (const auto& c : cor)
    prod *= lambda0(c);
  int k = static_cast<int>(cor.size());
  return {SeriesQ::monomial(prod, k, order + k), NormalizedScalar::volume_of(scnx_lattice(p.levi()), -1)};
}

SeriesQ bernoulli_factor(const Q& c, int order)
{
  if (c == 0)
    return SeriesQ::constant(1, order);
  SeriesQ g = (SeriesQ::exp_linear(c, order + 1) - SeriesQ::constant(1, order + 1)).shifted(-1) * Q(1 / c);
  return g.inverse();
}

GMFamily product(const GMFamily& a, const GMFamily& b)
{
  if (a.levi != b.levi)
    throw std::invalid_argument("product: families over different Levis");
  auto unit = a.unit;
  unit.insert(unit.end(), b.unit.begin(), b.unit.end());
  MemberFn fa = a.member, fb = b.member;
  return {a.group, a.levi, unit,
          [fa, fb](const Parabolic& p, const Covector& l, int order) { return fa(p, l, order) * fb(p, l, order); }};
}

GMFamily constant_family(const GroupData& g, const Levi& m, const Q& c)
{
  return {g, m, {}, [c](const Parabolic&, const Covector&, int order) { return SeriesQ::constant(c, order); }};
}

GMFamily v_family(const PositiveOrthogonalFamily& f)
{
  auto pts = f.points();
  return {f.group(), f.levi(), {}, [pts](const Parabolic& p, const Covector& l, int order) {
            auto it = pts.find(p);
            if (it == pts.end())
              throw std::invalid_argument("v_family: no member for " + p.key());
            return SeriesQ::exp_linear(l(it->second), order);
          }};
}

GMFamily w_family(const Vec& mu, const GroupData& g, const Levi& m, IntegerPart convention)
{
  if (!in_a_levi(mu, m))
    throw std::invalid_argument("w_family: mu is not in a_M");
  std::map<Parabolic, Vec> integral;
  for (const auto& p : levi_geometry(m).minimal)
    integral.emplace(p, floor_decompose(mu, p, convention).integral);
  return {g, m, {VolumeFactor{scnx_lattice(m), -1}}, [integral](const Parabolic& p, const Covector& l, int order) {
            auto it = integral.find(p);
            if (it == integral.end())
              throw std::invalid_argument("w_family: no member for " + p.key());
            SeriesQ s = SeriesQ::exp_linear(-l(it->second), order);
            for (const auto& c : levi_geometry(p.levi()).bases.at(p).coroots)
              s = s * bernoulli_factor(l(c), order);
            return s;
          }};
}

std::vector<Covector> generic_directions(const Levi& m, int count, std::uint64_t seed)
{
  std::vector<Covector> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 10000)
      throw std::runtime_error("generic_directions: no generic direction found");
    Vec v = zero_vec(m.n());
    for (const auto& b : m.blocks()) {
      Q x = Q(dist(rng)) / static_cast<long>(1 + rng() % 3);
      for (int a : b)
        v[a] = x;
    }
    Covector c{to_ambient(v)};
    if (!is_generic_direction(m, c))
      continue;
    bool dup = false;
    for (const auto& d : out)
      dup = dup || d == c;
    if (!dup || m.dim() == 0)
      out.push_back(c);
  }
  return out;
}

Covector wall_direction(const Covector& lambda0, const Vec& coroot)
{
  return {sub(lambda0.rep, scale(lambda0(coroot) / norm2(coroot), coroot))};
}

namespace {

// Constant term of sum over parabolics of member / prod Lambda0(alpha^vee) * t^{-r}.
Q singular_sum_limit(const GMFamily& fam, const std::vector<Parabolic>& pars,
                     const std::function<Mat(const Parabolic&)>& coroots, int r, const Covector& lambda0)
{
  int order = r + 2;
  SeriesQ total = SeriesQ::constant(0, order);
  for (const auto& p : pars) {
    Q prod = 1;
    for (const auto& c : coroots(p)) {
      Q x = lambda0(c);
      if (x == 0)
        throw std::invalid_argument("family_limit: direction is not generic for " + p.key());
      prod *= x;
    }
    total = total + fam.member(p, lambda0, order) * Q(1 / prod);
  }
  SeriesQ s = total.shifted(-r);
  for (int k = -r; k < 0; ++k)
    if (s.coeff(k) != 0)
      throw std::domain_error("family_limit: principal part does not vanish (degree " + std::to_string(k) + ")");
  return s.coeff(0);
}

Q agreed_limit(const std::vector<Q>& values)
{
  if (values.empty())
    throw std::invalid_argument("family_limit: no directions supplied");
  for (const auto& v : values)
    if (v != values.front())
      throw std::domain_error("family_limit: limit depends on the direction");
  return values.front();
}

}  // namespace

NormalizedScalar family_limit(const GMFamily& fam, const std::vector<Covector>& directions)
{
  const auto& geo = levi_geometry(fam.levi);
  int r = fam.levi.dim();
  std::vector<Q> values;
  for (const auto& d : directions) {
    if (!is_generic_direction(fam.levi, d))
      throw std::invalid_argument("family_limit: direction is not generic");
    values.push_back(singular_sum_limit(
        fam, geo.minimal, [&](const Parabolic& p) { return geo.bases.at(p).coroots; }, r, d));
  }
  auto factors = fam.unit;
  factors.push_back(VolumeFactor{scnx_lattice(fam.levi), 1});
  return NormalizedScalar(agreed_limit(values), factors).canonical();
}

namespace {

// Coroots of R lying in a_M^L, L the Levi of Q.
Mat coroots_inside(const Parabolic& r, const Parabolic& q)
{
  Mat out;
  const auto& b = r.blocks();
  const auto& cor = levi_geometry(r.levi()).bases.at(r).coroots;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    bool same = false;
    for (const auto& qb : q.blocks()) {
      bool has_a = std::find(qb.begin(), qb.end(), b[i][0]) != qb.end();
      bool has_b = std::find(qb.begin(), qb.end(), b[i + 1][0]) != qb.end();
      same = same || (has_a && has_b);
    }
    if (same)
      out.push_back(cor[i]);
  }
  return out;
}

}  // namespace

NormalizedScalar relative_family_limit(const GMFamily& fam, const Parabolic& q, const std::vector<Covector>& directions)
{
  const auto& geo = levi_geometry(fam.levi);
  auto it = geo.below.find(q);
  if (it == geo.below.end())
    throw std::invalid_argument("relative_family_limit: Q does not contain M");
  const auto& pars = it->second;
  int r = fam.levi.dim() - q.levi().dim();
  std::vector<Q> values;
  for (const auto& d : directions)
    values.push_back(singular_sum_limit(
        fam, pars, [&](const Parabolic& p) { return coroots_inside(p, q); }, r, d));
  auto factors = fam.unit;
  Mat gens = coroots_inside(pars.front(), q);
  if (!gens.empty()) {
    auto lat = LatticeQ::from_generators(fam.levi.n(), gens);
    lat.label = "X_*(M_scnx)[" + fam.levi.key() + "]^" + q.key();
    factors.push_back(VolumeFactor{lat, 1});
  }
  return NormalizedScalar(agreed_limit(values), factors).canonical();
}

bool wall_agreement(const GMFamily& fam, const Parabolic& p, const Parabolic& pp, const Covector& lambda0)
{
  auto a = adjacent(p, pp) ? adjacency_coroot(p, pp) : std::nullopt;
  if (!a)
    throw std::invalid_argument("wall_agreement: parabolics are not adjacent");
  Covector w = wall_direction(lambda0, *a);
  int order = fam.levi.dim() + 3;
  return fam.member(p, w, order).agrees_with(fam.member(pp, w, order));
}

GMFamily restrict_family(const GMFamily& fam, const Levi& l)
{
  if (!fam.levi.refines(l))
    throw std::invalid_argument("restrict_family: L does not contain M");
  if (l == fam.levi)
    return fam;
  const auto& geo = levi_geometry(fam.levi);
  MemberFn inner = fam.member;
  const auto* below = &geo.below;
  return {fam.group, l, fam.unit, [inner, below](const Parabolic& q, const Covector& lam, int order) {
            auto it = below->find(q);
            if (it == below->end() || it->second.empty())
              throw std::invalid_argument("restrict_family: no refinement of " + q.key());
            SeriesQ first = inner(it->second.front(), lam, order);
            for (std::size_t i = 1; i < it->second.size(); ++i)
              if (!inner(it->second[i], lam, order).agrees_with(first))
                throw std::domain_error("restrict_family: restriction depends on the choice of P for " + q.key());
            return first;
          }};
}

PositiveOrthogonalFamily restrict_family(const PositiveOrthogonalFamily& f, const Levi& l)
{
  if (!f.levi().refines(l))
    throw std::invalid_argument("restrict_family: L does not contain M");
  std::map<Parabolic, Vec> pts;
  for (const auto& q : levi_geometry(l).minimal)
    pts.emplace(q, family_point_for(f, q));
  return PositiveOrthogonalFamily(f.group(), l, pts);
}

std::vector<Vec> coset_reps(const Levi& m, bool shifted)
{
  auto reps = coset_representatives(full_lattice(m), scnx_lattice(m));
  if (shifted && scnx_lattice(m).rank() > 0) {
    Vec s = zero_vec(m.n());
    for (const auto& b : scnx_lattice(m).basis())
      s = add(s, b);
    for (auto& r : reps)
      r = add(r, s);
  }
  return reps;
}

namespace {

NormalizedScalar weighted_sum(const PositiveOrthogonalFamily& f, const Vec& xi, const std::vector<Vec>& reps,
                              int directions)
{
  Vec xm = project_levi(xi, f.levi());
  auto dirs = generic_directions(f.levi(), directions);
  GMFamily v = v_family(f);
  NormalizedScalar total;
  for (const auto& mu0 : reps)
    total = total + family_limit(product(v, w_family(add(mu0, xm), f.group(), f.levi())), dirs);
  return total.canonical();
}

}  // namespace

long w_weight(const PositiveOrthogonalFamily& f, const Vec& xi, Method method, int directions)
{
  if (method == Method::direct)
    return count_hull_points(f, xi, Backend::parallel);
  NormalizedScalar s = weighted_sum(f, xi, coset_reps(f.levi()), directions);
  if (!s.is_rational() || !is_integer(s.value()))
    throw std::domain_error("w_weight: limit is not an integer: " + s.to_string());
  return s.value().get_num().get_si();
}

NormalizedScalar v_weight(const PositiveOrthogonalFamily& f, Method method, int directions)
{
  if (method == Method::limit)
    return family_limit(v_family(f), generic_directions(f.levi(), directions));
  Q vol = convex_hull_volume(f.vertex_coordinates(), f.levi().dim());
  return NormalizedScalar(vol, {VolumeFactor{scnx_lattice(f.levi()), 1}}).canonical();
}

ScalarIdentity wl_sum_identity(const GroupData& g, const Levi& m, const Levi& l, const Vec& xi,
                               const std::vector<Vec>& reps, int directions)
{
  Vec xm = project_levi(xi, m);
  auto dirs = generic_directions(l, directions);
  NormalizedScalar lhs;
  for (const auto& mu0 : reps)
    lhs = lhs + family_limit(restrict_family(w_family(add(mu0, xm), g, m), l), dirs);
  long w = w_weight(trivial_family(g, l), xi, Method::direct);
  NormalizedScalar rhs =
      NormalizedScalar(Q(w), {VolumeFactor{full_lattice(l), 1}, VolumeFactor{full_lattice(m), -1}}).canonical();
  ScalarIdentity out{lhs.canonical(), rhs, false};
  out.holds = out.lhs.equals(out.rhs);
  return out;
}

IntegerIdentity reformulation_check(const PositiveOrthogonalFamily& f, const Vec& xi, const std::vector<Vec>& reps,
                                    int directions)
{
  NormalizedScalar s = weighted_sum(f, xi, reps, directions);
  if (!s.is_rational())
    throw std::domain_error("reformulation_check: volume factors do not cancel: " + s.to_string());
  IntegerIdentity out{s.value(), w_weight(f, xi, Method::direct), false};
  out.holds = out.lhs == out.rhs;
  return out;
}

PositiveOrthogonalFamily trivial_family(const GroupData& g, const Levi& m)
{
  std::map<Parabolic, Vec> pts;
  for (const auto& p : levi_geometry(m).minimal)
    pts.emplace(p, zero_vec(g.n));
  return PositiveOrthogonalFamily(g, m, pts);
}

}  // namespace hitchin
