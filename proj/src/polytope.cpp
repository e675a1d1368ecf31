#include "hitchin/polytope.hpp"

#include "hitchin/lp.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace hitchin {

const LeviGeometry& levi_geometry(const Levi& m)
{
  static std::mutex mu;
  static std::map<Levi, std::unique_ptr<LeviGeometry>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end())
    return *it->second;
  auto geo = std::make_unique<LeviGeometry>();
  geo->levi = m;
  geo->minimal = minimal_parabolics(m);
  geo->containing = parabolics_containing(m);
  geo->maximal = maximal_parabolics(m);
  for (const auto& q : geo->containing) {
    geo->bases.emplace(q, root_bases(q));
    auto& below = geo->below[q];
    for (const auto& p : geo->minimal)
      if (p.contained_in(q))
        below.push_back(p);
  }
  std::set<Vec> seen;
  for (const auto& p : geo->minimal)
    for (const auto& c : geo->bases.at(p).coroots)
      if (!seen.count(c) && !seen.count(neg(c))) {
        seen.insert(c);
        geo->all_coroots.push_back(c);
      }
  auto& ref = *geo;
  cache.emplace(m, std::move(geo));
  return ref;
}

PositiveOrthogonalFamily::PositiveOrthogonalFamily(GroupData g, Levi m, std::map<Parabolic, Vec> points)
    : g_(g), m_(std::move(m)), geo_(&levi_geometry(m_))
{
  if (m_.n() != g_.n)
    throw std::invalid_argument("family: Levi and group disagree on n");
  for (const auto& p : geo_->minimal) {
    auto it = points.find(p);
    if (it == points.end())
      throw std::invalid_argument("family: missing point for " + p.key());
    if (static_cast<int>(it->second.size()) != g_.n)
      throw std::invalid_argument("family: point of wrong size for " + p.key());
    points_.emplace(p, project_levi(it->second, m_));
  }
  if (points.size() != points_.size())
    throw std::invalid_argument("family: point given for a parabolic outside P(M)");
  for (const auto& q : geo_->containing)
    qpoints_.emplace(q, project(points_.at(geo_->below.at(q).front()), q, Part::onto_aP));
  std::set<Vec> seen;
  for (const auto& [p, y] : points_) {
    Vec c = *coroot_coordinates(y, reference_parabolic());
    if (seen.insert(c).second)
      vcoords_.push_back(c);
  }
}

const Vec& PositiveOrthogonalFamily::point(const Parabolic& p) const
{
  auto it = points_.find(p);
  if (it == points_.end())
    throw std::invalid_argument("family: no point for " + p.key());
  return it->second;
}

const Vec& PositiveOrthogonalFamily::q_point(const Parabolic& q) const
{
  auto it = qpoints_.find(q);
  if (it == qpoints_.end())
    throw std::invalid_argument("family: " + q.key() + " does not contain a member of P(M)");
  return it->second;
}

PositiveOrthogonalFamily PositiveOrthogonalFamily::translated(const Vec& shift) const
{
  std::map<Parabolic, Vec> pts;
  for (const auto& [p, y] : points_)
    pts.emplace(p, add(y, shift));
  return PositiveOrthogonalFamily(g_, m_, pts);
}

AdjacencyCoefficients validate_family(const PositiveOrthogonalFamily& f)
{
  AdjacencyCoefficients out;
  const auto& mins = f.geometry().minimal;
  for (const auto& p : mins)
    for (const auto& pp : mins) {
      if (!adjacent(p, pp))
        continue;
      auto a = adjacency_coroot(p, pp);
      if (!a)
        continue;
      Vec d = sub(f.point(p), f.point(pp));
      auto x = solve_rows({*a}, d);
      if (!x)
        throw std::invalid_argument("validate_family: difference is not a multiple of the adjacency coroot for " +
                                    p.key() + " / " + pp.key());
      if ((*x)[0] < 0)
        throw std::invalid_argument("validate_family: negative coefficient for " + p.key() + " / " + pp.key());
      out[{p, pp}] = (*x)[0];
    }
  return out;
}

Vec family_point_for(const PositiveOrthogonalFamily& f, const Parabolic& q)
{
  const auto& below = f.geometry().below;
  auto it = below.find(q);
  if (it == below.end() || it->second.empty())
    throw std::invalid_argument("family_point_for: " + q.key() + " contains no member of P(M)");
  Vec first = project(f.point(it->second.front()), q, Part::onto_aP);
  for (const auto& p : it->second)
    if (project(f.point(p), q, Part::onto_aP) != first)
      throw std::invalid_argument("family_point_for: projection depends on the choice of P for " + q.key());
  return first;
}

bool cone_member(const Parabolic& p, const Vec& h, ConeKind kind)
{
  if (!in_a_levi(h, p.levi()))
    throw std::invalid_argument("cone_member: vector is not in a_P");
  auto rb = root_bases(p);
  if (kind == ConeKind::acute) {
    for (const auto& a : rb.roots)
      if (a(h) <= 0)
        return false;
    return true;
  }
  for (const auto& w : rb.weights) {
    Q x = w(h);
    if (kind == ConeKind::obtuse_open ? x <= 0 : x < 0)
      return false;
  }
  return true;
}

namespace {

bool cylinder_member(const PositiveOrthogonalFamily& f, const Parabolic& q, const Vec& xi, bool closed)
{
  Vec d = sub(xi, f.q_point(q));
  for (const auto& w : f.geometry().bases.at(q).weights) {
    Q x = w(d);
    if (closed ? x > 0 : x >= 0)
      return false;
  }
  return true;
}

}  // namespace

bool cm_member(const PositiveOrthogonalFamily& f, const Vec& xi, bool closed, CmMode mode)
{
  const auto& geo = f.geometry();
  const auto& index = mode == CmMode::all_F ? geo.containing : mode == CmMode::only_P ? geo.minimal : geo.maximal;
  for (const auto& q : index)
    if (!cylinder_member(f, q, xi, closed))
      return false;
  return true;
}

bool hull_member(const PositiveOrthogonalFamily& f, const Vec& v)
{
  Vec vm = project_levi(v, f.levi());
  Vec c = *coroot_coordinates(vm, f.reference_parabolic());
  const auto& verts = f.vertex_coordinates();
  std::size_t r = c.size();
  for (std::size_t i = 0; i < r; ++i) {
    Q lo = verts[0][i], hi = verts[0][i];
    for (const auto& w : verts) {
      lo = std::min(lo, w[i]);
      hi = std::max(hi, w[i]);
    }
    if (c[i] < lo || c[i] > hi)
      return false;
  }
  if (verts.size() == 1)
    return c == verts[0];
  Mat a(r + 1, Vec(verts.size()));
  Vec b(r + 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < verts.size(); ++j)
      a[i][j] = verts[j][i];
    b[i] = c[i];
  }
  for (std::size_t j = 0; j < verts.size(); ++j)
    a[r][j] = 1;
  b[r] = 1;
  return lp_feasible(a, b).has_value();
}

HNResult hn_point(const PositiveOrthogonalFamily& f, const Vec& xi)
{
  std::vector<HNResult> hits;
  for (const auto& q : f.geometry().containing) {
    Vec xq = project(xi, q, Part::onto_aP);
    Vec diff = sub(xq, f.q_point(q));
    bool acute = true;
    for (const auto& a : f.geometry().bases.at(q).roots)
      if (a(diff) <= 0) {
        acute = false;
        break;
      }
    if (q.is_whole())
      acute = is_zero(diff);
    if (!acute)
      continue;
    Vec rho = sub(xi, diff);
    if (!cm_member(f, rho, true, CmMode::only_P))
      continue;
    hits.push_back({rho, q, norm2(diff)});
  }
  if (hits.size() != 1)
    throw std::logic_error("hn_point: expected exactly one solution, found " + std::to_string(hits.size()));
  return hits.front();
}

bool is_generic_direction(const Levi& m, const Covector& lambda0)
{
  for (const auto& c : levi_geometry(m).all_coroots)
    if (lambda0(c) == 0)
      return false;
  return true;
}

int langlands_indicator(const PositiveOrthogonalFamily& f, const Vec& mu, const Covector& lambda0)
{
  if (!is_generic_direction(f.levi(), lambda0))
    throw std::invalid_argument("langlands_indicator: direction is not generic");
  int total = 0;
  for (const auto& p : f.geometry().minimal) {
    const auto& rb = f.geometry().bases.at(p);
    Vec lam = sub(mu, f.point(p));
    int flips = 0;
    bool phi = true;
    for (std::size_t i = 0; i < rb.coroots.size(); ++i) {
      Q w = rb.weights[i](lam);
      if (lambda0(rb.coroots[i]) < 0) {
        ++flips;
        phi = phi && w > 0;
      } else {
        phi = phi && w <= 0;
      }
    }
    if (phi)
      total += (flips % 2) ? -1 : 1;
  }
  return total;
}

Parabolic chamber_partition_check(const GroupData& g, const Vec& v)
{
  if (!in_ambient(v, g))
    throw std::invalid_argument("chamber_partition_check: vector not in the ambient space");
  const auto& geo = levi_geometry(Levi::torus(g.n));
  std::vector<Parabolic> hits;
  for (const auto& p : geo.containing) {
    if (!in_a_levi(v, p.levi()))
      continue;
    bool ok = true;
    for (const auto& a : geo.bases.at(p).roots)
      if (a(v) <= 0)
        ok = false;
    if (ok)
      hits.push_back(p);
  }
  if (hits.size() != 1)
    throw std::logic_error("chamber_partition_check: partition violated");
  return hits.front();
}

}  // namespace hitchin
