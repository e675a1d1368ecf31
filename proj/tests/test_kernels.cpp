#include "hitchin/generators.hpp"
#include "hitchin/kernels.hpp"

#include "doctest.h"

#include <set>

using namespace hitchin;

TEST_CASE("lattice box enumerates every shift once")
{
  Rng rng(107);
  for (int k = 0; k < 10; ++k) {
    int n = 2 + k % 3;
    Levi m = random_levi(rng, n);
    auto f = random_family(rng, n, m);
    Vec xi = random_general_xi(rng, n);
    auto box = hull_lattice_box(f, xi);
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < box.lo.size(); ++i)
      expected *= static_cast<std::uint64_t>(std::max(0L, box.hi[i] - box.lo[i] + 1));
    CHECK(box.size() == expected);
    std::set<Vec> seen;
    for (std::uint64_t j = 0; j < box.size(); ++j)
      seen.insert(box.point(j));
    CHECK(seen.size() == box.size());
  }
}

TEST_CASE("serial and parallel kernels agree")
{
  Rng rng(109);
  for (int k = 0; k < 30; ++k) {
    int n = 2 + k % 3;
    Levi m = random_levi(rng, n);
    auto f = random_family(rng, n, m);
    Vec xi = random_general_xi(rng, n);
    long s = count_hull_points(f, xi, Backend::serial);
    CHECK(s == count_hull_points(f, xi, Backend::parallel));
    long brute = 0;
    auto box = hull_lattice_box(f, xi);
    if (box.basis.empty())
      brute = hull_member(f, zero_vec(n));
    else
      for (std::uint64_t j = 0; j < box.size(); ++j)
        brute += hull_member(f, box.point(j));
    CHECK(s == brute);
  }
  auto term = [](std::uint64_t i) -> Q { return Q(1) / Q(static_cast<long>(i) + 1); };
  Q h = 0;
  for (long i = 1; i <= 500; ++i)
    h += Q(1) / Q(i);
  CHECK(sum_terms(500, term, Backend::serial) == h);
  CHECK(sum_terms(500, term, Backend::parallel) == h);
  CHECK(kernel_threads() >= 1);
}
