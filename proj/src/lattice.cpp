#include "hitchin/lattice.hpp"

#include <stdexcept>

namespace hitchin {

namespace {

Z fdiv(const Z& a, const Z& b)
{
  Z q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Z lcm_den(const Mat& m)
{
  Z l = 1;
  for (const auto& row : m)
    for (const auto& x : row)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

}  // namespace

LatticeQ::LatticeQ(int ambient_dim, Mat basis) : ambient_(ambient_dim), basis_(std::move(basis))
{
  for (const auto& b : basis_)
    if (static_cast<int>(b.size()) != ambient_)
      throw std::invalid_argument("LatticeQ: basis vector of wrong size");
  if (hitchin::rank(basis_) != static_cast<int>(basis_.size()))
    throw std::invalid_argument("LatticeQ: dependent basis");
}

LatticeQ LatticeQ::from_generators(int ambient_dim, const Mat& gens)
{
  auto idx = independent_rows(gens);
  Mat qbasis;
  for (int i : idx)
    qbasis.push_back(gens[i]);
  if (qbasis.empty())
    return LatticeQ(ambient_dim, {});
  Mat coords;
  for (const auto& g : gens)
    coords.push_back(*solve_rows(qbasis, g));
  Z d = lcm_den(coords);
  ZMat zc;
  for (const auto& c : coords) {
    std::vector<Z> row;
    for (const auto& x : c) {
      Q y = x * d;
      row.push_back(y.get_num());
    }
    zc.push_back(row);
  }
  ZMat h = hermite_rows(zc);
  Mat basis;
  for (const auto& row : h) {
    Vec v = zero_vec(ambient_dim);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0)
        v = add(v, scale(Q(row[j]) / d, qbasis[j]));
    basis.push_back(v);
  }
  return LatticeQ(ambient_dim, basis);
}

std::optional<Vec> LatticeQ::coordinates(const Vec& v) const
{
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("LatticeQ::coordinates: wrong size");
  if (basis_.empty())
    return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve_rows(basis_, v);
}

bool LatticeQ::contains(const Vec& v) const
{
  auto c = coordinates(v);
  if (!c)
    return false;
  for (const auto& x : *c)
    if (!is_integer(x))
      return false;
  return true;
}

bool LatticeQ::same_span(const LatticeQ& other) const
{
  if (rank() != other.rank() || ambient_ != other.ambient_)
    return false;
  for (const auto& b : other.basis_)
    if (!in_span(b))
      return false;
  return true;
}

bool LatticeQ::contains(const LatticeQ& sub) const
{
  for (const auto& b : sub.basis_)
    if (!contains(b))
      return false;
  return true;
}

bool LatticeQ::operator==(const LatticeQ& other) const
{
  return same_span(other) && contains(other) && other.contains(*this);
}

Q covolume_ratio(const LatticeQ& a, const LatticeQ& b)
{
  if (!a.same_span(b))
    throw std::invalid_argument("covolume_ratio: lattices span different subspaces");
  Mat m;
  for (const auto& v : a.basis())
    m.push_back(*b.coordinates(v));
  Q d = det(m);
  return d < 0 ? Q(-d) : d;
}

ZMat hermite_rows(const ZMat& in)
{
  ZMat a = in;
  if (a.empty())
    return a;
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r..end.
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a[i][c] != 0 && (best == rows || abs(a[i][c]) < abs(a[best][c])))
          best = i;
      if (best == rows)
        break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0)
          continue;
        Z q = fdiv(a[i][c], a[r][c]);
        for (std::size_t j = c; j < cols; ++j)
          a[i][j] -= q * a[r][j];
        if (a[i][c] != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (a[r][c] == 0)
      continue;
    if (a[r][c] < 0)
      for (std::size_t j = c; j < cols; ++j)
        a[r][j] = -a[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      Z q = fdiv(a[i][c], a[r][c]);
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j)
          a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

SmithResult smith_normal_form(const ZMat& in)
{
  ZMat a = in;
  std::size_t m = a.size(), n = m ? a[0].size() : 0;
  ZMat u(m, std::vector<Z>(m, Z(0))), v(n, std::vector<Z>(n, Z(0)));
  for (std::size_t i = 0; i < m; ++i)
    u[i][i] = 1;
  for (std::size_t i = 0; i < n; ++i)
    v[i][i] = 1;
  auto row_op = [&](std::size_t dst, std::size_t src, const Z& q) {
    for (std::size_t j = 0; j < n; ++j)
      a[dst][j] -= q * a[src][j];
    for (std::size_t j = 0; j < m; ++j)
      u[dst][j] -= q * u[src][j];
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Z& q) {
    for (std::size_t i = 0; i < m; ++i)
      a[i][dst] -= q * a[i][src];
    for (std::size_t i = 0; i < n; ++i)
      v[i][dst] -= q * v[i][src];
  };
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    std::swap(a[x], a[y]);
    std::swap(u[x], u[y]);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < m; ++i)
      std::swap(a[i][x], a[i][y]);
    for (std::size_t i = 0; i < n; ++i)
      std::swap(v[i][x], v[i][y]);
  };
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (bi == m || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == m)
        return {a, u, v};
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (a[i][t] != 0) {
          row_op(i, t, fdiv(a[i][t], a[t][t]));
          if (a[i][t] != 0)
            clean = false;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (a[t][j] != 0) {
          col_op(j, t, fdiv(a[t][j], a[t][t]));
          if (a[t][j] != 0)
            clean = false;
        }
      if (!clean)
        continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_op(t, i, Z(-1));
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (a[t][t] < 0) {
      for (std::size_t i = 0; i < m; ++i)
        a[i][t] = -a[i][t];
      for (std::size_t i = 0; i < n; ++i)
        v[i][t] = -v[i][t];
    }
  }
  return {a, u, v};
}

namespace {

struct AdaptedBasis {
  Mat f;                  // basis of full adapted to sub
  std::vector<Z> elem;    // elementary divisors
};

AdaptedBasis adapted_basis(const LatticeQ& full, const LatticeQ& sub)
{
  if (!full.same_span(sub) || !full.contains(sub))
    throw std::invalid_argument("coset_representatives: not a finite-index sublattice");
  int k = full.rank();
  ZMat s;
  for (const auto& b : sub.basis()) {
    auto c = *full.coordinates(b);
    std::vector<Z> row;
    for (const auto& x : c)
      row.push_back(x.get_num());
    s.push_back(row);
  }
  // Rows of s express sub in full; u s v = d gives sub' = d * (v^{-1} full).
  auto snf = smith_normal_form(s);
  Mat vq(k, Vec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      vq[i][j] = Q(snf.v[i][j]);
  auto vinv = *inverse(vq);
  AdaptedBasis out;
  out.f = mat_mul(vinv, full.basis());
  for (int i = 0; i < k; ++i)
    out.elem.push_back(snf.d[i][i]);
  return out;
}

}  // namespace

Z lattice_index(const LatticeQ& full, const LatticeQ& sub)
{
  if (full.rank() == 0)
    return 1;
  auto ab = adapted_basis(full, sub);
  Z r = 1;
  for (const auto& d : ab.elem)
    r *= d;
  return r;
}

std::vector<Vec> coset_representatives(const LatticeQ& full, const LatticeQ& sub)
{
  int n = full.ambient_dim();
  if (full.rank() == 0)
    return {zero_vec(n)};
  auto ab = adapted_basis(full, sub);
  std::vector<Vec> reps{zero_vec(n)};
  for (std::size_t i = 0; i < ab.elem.size(); ++i) {
    std::vector<Vec> next;
    for (const auto& r : reps)
      for (Z c = 0; c < ab.elem[i]; ++c)
        next.push_back(add(r, scale(Q(c), ab.f[i])));
    reps = std::move(next);
  }
  return reps;
}

}  // namespace hitchin
