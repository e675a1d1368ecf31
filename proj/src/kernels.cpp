#include "hitchin/kernels.hpp"

#include <stdexcept>

#ifdef HITCHIN_HAVE_OPENMP
#include <omp.h>
#endif

namespace hitchin {

std::uint64_t LatticeBox::size() const
{
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i])
      return 0;
    s *= static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
  }
  return s;
}

Vec LatticeBox::point(std::uint64_t index) const
{
  Vec c = offset;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    auto w = static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
    c[i] += lo[i] + static_cast<long>(index % w);
    index /= w;
  }
  Vec v = zero_vec(basis.empty() ? 0 : static_cast<int>(basis[0].size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    v = add(v, scale(c[i], basis[i]));
  return v;
}

LatticeBox hull_lattice_box(const PositiveOrthogonalFamily& f, const Vec& xi)
{
  auto lat = cochar_lattice(f.levi(), LatticeKind::full);
  LatticeBox box;
  box.basis = lat.basis();
  if (box.basis.empty()) {
    box.offset = {};
    return box;
  }
  Vec xm = project_levi(xi, f.levi());
  box.offset = *lat.coordinates(xm);
  std::vector<Vec> vc;
  for (const auto& [p, y] : f.points())
    vc.push_back(*lat.coordinates(y));
  for (std::size_t i = 0; i < box.offset.size(); ++i) {
    Q lo = vc[0][i], hi = vc[0][i];
    for (const auto& w : vc) {
      lo = std::min(lo, w[i]);
      hi = std::max(hi, w[i]);
    }
    box.lo.push_back(ceil_q(lo - box.offset[i]).get_si());
    box.hi.push_back(floor_q(hi - box.offset[i]).get_si());
  }
  return box;
}

int kernel_threads()
{
#ifdef HITCHIN_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

long count_hull_points(const PositiveOrthogonalFamily& f, const Vec& xi, Backend backend)
{
  LatticeBox box = hull_lattice_box(f, xi);
  if (box.basis.empty())
    return hull_member(f, zero_vec(f.group().n)) ? 1 : 0;
  auto total = static_cast<long long>(box.size());
  long count = 0;
  if (backend == Backend::serial) {
    for (long long i = 0; i < total; ++i)
      if (hull_member(f, box.point(static_cast<std::uint64_t>(i))))
        ++count;
    return count;
  }
#ifdef HITCHIN_HAVE_OPENMP
#pragma omp parallel for reduction(+ : count) schedule(dynamic, 16)
#endif
  for (long long i = 0; i < total; ++i)
    if (hull_member(f, box.point(static_cast<std::uint64_t>(i))))
      ++count;
  return count;
}

Q sum_terms(std::uint64_t count, const std::function<Q(std::uint64_t)>& term, Backend backend)
{
  std::vector<Q> terms(count);
  auto total = static_cast<long long>(count);
  if (backend == Backend::serial) {
    for (long long i = 0; i < total; ++i)
      terms[i] = term(static_cast<std::uint64_t>(i));
  } else {
#ifdef HITCHIN_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (long long i = 0; i < total; ++i)
      terms[i] = term(static_cast<std::uint64_t>(i));
  }
  Q s = 0;
  for (const auto& t : terms)
    s += t;
  return s;
}

}  // namespace hitchin
