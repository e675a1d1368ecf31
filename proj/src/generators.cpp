#include "hitchin/generators.hpp"

#include "hitchin/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hitchin {

long uniform(Rng& rng, long lo, long hi)
{
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

Q random_rational(Rng& rng, long num_bound, long max_den)
{
  Q x(uniform(rng, -num_bound, num_bound), uniform(rng, 1, max_den));
  x.canonicalize();
  return x;
}

Levi random_levi(Rng& rng, int n)
{
  auto parts = set_partitions(n);
  const auto& rgs = parts[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(parts.size()) - 1))];
  int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
  std::vector<Block> blocks(k);
  for (int i = 0; i < n; ++i)
    blocks[rgs[i]].push_back(i);
  return Levi(n, blocks);
}

PositiveOrthogonalFamily random_family(Rng& rng, int n, const Levi& m, const FamilyShape& shape)
{
  struct Summand {
    std::vector<int> support;
    Q weight;
  };
  std::vector<Summand> summands;
  for (int s = 0; s < shape.simplices; ++s) {
    std::vector<int> support;
    while (support.size() < 2) {
      support.clear();
      for (int i = 0; i < n; ++i)
        if (uniform(rng, 0, 1))
          support.push_back(i);
    }
    Q w(uniform(rng, 0, shape.weight_num), shape.integral ? 1 : uniform(rng, 1, shape.weight_den));
    w.canonicalize();
    summands.push_back({support, w});
  }
  Vec shift = zero_vec(n);
  if (shape.translate)
    shift = shape.integral ? integral_vector(rng, n, 2) : random_vector(rng, n, 2, 2);

  Levi t = Levi::torus(n);
  std::map<Parabolic, Vec> pts;
  for (const auto& p : levi_geometry(t).minimal) {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
      pos[p.blocks()[i][0]] = i;
    Vec y = zero_vec(n);
    Q mass = 0;
    for (const auto& s : summands) {
      int first = *std::min_element(s.support.begin(), s.support.end(),
                                    [&](int a, int b) { return pos[a] < pos[b]; });
      y[first] += s.weight;
      mass += s.weight;
    }
    // Subtracting the mass from one fixed coordinate keeps integral points in X_*(T).
    y[0] -= mass;
    pts.emplace(p, add(y, shift));
  }
  PositiveOrthogonalFamily ft(make_group(n), t, pts);
  return m == t ? ft : restrict_family(ft, m);
}

Vec integral_vector(Rng& rng, int n, long bound)
{
  Vec v = zero_vec(n);
  for (int i = 0; i + 1 < n; ++i) {
    v[i] = uniform(rng, -bound, bound);
    v[n - 1] -= v[i];
  }
  return v;
}

Vec random_vector(Rng& rng, int n, long num_bound, long max_den)
{
  Vec v(n);
  for (auto& x : v)
    x = random_rational(rng, num_bound, max_den);
  return to_ambient(v);
}

Vec random_general_xi(Rng& rng, int n)
{
  static const long dens[] = {7, 11, 13};
  for (int attempt = 0; attempt < 1000; ++attempt) {
    long den = dens[uniform(rng, 0, 2)];
    Vec v(n);
    Q s = 0;
    for (int i = 0; i + 1 < n; ++i) {
      v[i] = Q(uniform(rng, -3 * den, 3 * den), den);
      v[i].canonicalize();
      s += v[i];
    }
    v[n - 1] = -s;
    if (general_position_by_subsets(v))
      return v;
  }
  throw std::runtime_error("random_general_xi: no general-position vector found");
}

Vec random_point_near(Rng& rng, const PositiveOrthogonalFamily& f, const Q& margin)
{
  const auto& verts = f.vertex_coordinates();
  const auto& cor = f.geometry().bases.at(f.reference_parabolic()).coroots;
  Vec v = zero_vec(f.group().n);
  for (std::size_t i = 0; i < cor.size(); ++i) {
    Q lo = verts[0][i], hi = verts[0][i];
    for (const auto& w : verts) {
      lo = std::min(lo, w[i]);
      hi = std::max(hi, w[i]);
    }
    lo -= margin;
    hi += margin;
    const long steps = 64;
    Q x = lo + (hi - lo) * Q(uniform(rng, 0, steps)) / steps;
    v = add(v, scale(x, cor[i]));
  }
  // Random component orthogonal to a_M, which every membership test must ignore.
  Vec noise = random_vector(rng, f.group().n, 1, 3);
  return add(v, sub(noise, project_levi(noise, f.levi())));
}

Vec random_hull_point(Rng& rng, const PositiveOrthogonalFamily& f)
{
  std::vector<Q> w;
  Q total = 0;
  for (std::size_t i = 0; i < f.points().size(); ++i) {
    w.emplace_back(uniform(rng, 0, 5));
    total += w.back();
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  Vec v = zero_vec(f.group().n);
  std::size_t i = 0;
  for (const auto& [p, y] : f.points())
    v = add(v, scale(w[i++] / total, y));
  return v;
}

Covector random_generic_direction(Rng& rng, const Levi& m)
{
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec v = zero_vec(m.n());
    for (const auto& b : m.blocks()) {
      Q x = random_rational(rng, 9, 3);
      for (int a : b)
        v[a] = x;
    }
    Covector c{to_ambient(v)};
    if (is_generic_direction(m, c))
      return c;
  }
  throw std::runtime_error("random_generic_direction: no generic direction found");
}

}  // namespace hitchin
