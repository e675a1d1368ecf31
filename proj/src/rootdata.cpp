#include "hitchin/rootdata.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hitchin {

GroupData make_group(int n)
{
  if (n < 2)
    throw std::invalid_argument("make_group: n must be at least 2");
  return GroupData{n};
}

bool in_ambient(const Vec& v, const GroupData& g)
{
  if (static_cast<int>(v.size()) != g.n)
    return false;
  Q s = 0;
  for (const auto& x : v)
    s += x;
  return s == 0;
}

Vec to_ambient(const Vec& v)
{
  Q s = 0;
  for (const auto& x : v)
    s += x;
  Q mean = s / static_cast<long>(v.size());
  Vec r = v;
  for (auto& x : r)
    x -= mean;
  return r;
}

namespace {

void check_cover(int n, const std::vector<Block>& blocks)
{
  std::vector<int> seen(n, 0);
  for (const auto& b : blocks) {
    if (b.empty())
      throw std::invalid_argument("empty block");
    for (int i : b) {
      if (i < 0 || i >= n)
        throw std::invalid_argument("block index out of range");
      if (seen[i]++)
        throw std::invalid_argument("blocks overlap");
    }
  }
  for (int s : seen)
    if (!s)
      throw std::invalid_argument("blocks do not cover {1..n}");
}

std::string blocks_key(const std::vector<Block>& blocks)
{
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i)
      s += "|";
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j)
        s += ",";
      s += std::to_string(blocks[i][j] + 1);
    }
  }
  return s;
}

}  // namespace

Levi::Levi(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks))
{
  check_cover(n_, blocks_);
  for (auto& b : blocks_)
    std::sort(b.begin(), b.end());
  std::sort(blocks_.begin(), blocks_.end());
}

Levi Levi::torus(int n)
{
  std::vector<Block> b;
  for (int i = 0; i < n; ++i)
    b.push_back({i});
  return Levi(n, b);
}

Levi Levi::whole(int n)
{
  Block b(n);
  std::iota(b.begin(), b.end(), 0);
  return Levi(n, {b});
}

bool Levi::refines(const Levi& coarser) const
{
  if (coarser.n_ != n_)
    return false;
  std::vector<int> owner(n_);
  for (std::size_t i = 0; i < coarser.blocks_.size(); ++i)
    for (int a : coarser.blocks_[i])
      owner[a] = static_cast<int>(i);
  for (const auto& b : blocks_)
    for (int a : b)
      if (owner[a] != owner[b[0]])
        return false;
  return true;
}

std::string Levi::key() const { return blocks_key(blocks_); }

Parabolic::Parabolic(int n, std::vector<Block> order) : n_(n), order_(std::move(order))
{
  check_cover(n_, order_);
  for (auto& b : order_)
    std::sort(b.begin(), b.end());
}

Parabolic Parabolic::from_key(const std::string& key, int n)
{
  std::vector<Block> blocks;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, '|')) {
    Block b;
    std::stringstream ps(part);
    std::string item;
    while (std::getline(ps, item, ',')) {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size())
        throw std::invalid_argument("malformed parabolic key: " + key);
      b.push_back(v - 1);
    }
    blocks.push_back(b);
  }
  return Parabolic(n, blocks);
}

Parabolic Parabolic::whole(int n)
{
  Block b(n);
  std::iota(b.begin(), b.end(), 0);
  return Parabolic(n, {b});
}

Levi Parabolic::levi() const { return Levi(n_, order_); }

bool Parabolic::contained_in(const Parabolic& q) const
{
  if (q.n_ != n_)
    return false;
  std::size_t idx = 0;
  for (const auto& qb : q.order_) {
    std::set<int> target(qb.begin(), qb.end()), acc;
    while (acc.size() < target.size() && idx < order_.size()) {
      acc.insert(order_[idx].begin(), order_[idx].end());
      ++idx;
    }
    if (acc != target)
      return false;
  }
  return idx == order_.size();
}

std::string Parabolic::key() const { return blocks_key(order_); }

RootBases root_bases(const Parabolic& p)
{
  RootBases rb;
  int n = p.n();
  const auto& b = p.blocks();
  std::vector<int> prefix;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    Vec c = zero_vec(n);
    Q l(1, static_cast<long>(b[i].size())), r(1, static_cast<long>(b[i + 1].size()));
    for (int a : b[i])
      c[a] = l;
    for (int a : b[i + 1])
      c[a] = -r;
    rb.coroots.push_back(c);
    // The root v -> v|B_i - v|B_{i+1} on a_P has this same Riesz representative.
    rb.roots.push_back(Covector{c});
    for (int a : b[i])
      prefix.push_back(a);
    Vec w = zero_vec(n);
    Q frac = Q(static_cast<long>(prefix.size())) / n;
    for (int a = 0; a < n; ++a)
      w[a] = -frac;
    for (int a : prefix)
      w[a] += 1;
    rb.weights.push_back(Covector{w});
  }
  return rb;
}

std::vector<std::vector<int>> set_partitions(int k)
{
  std::vector<std::vector<int>> out;
  if (k == 0)
    return {{}};
  std::vector<int> a(k, 0);
  std::function<void(int, int)> rec = [&](int i, int mx) {
    if (i == k) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      a[i] = v;
      rec(i + 1, std::max(mx, v));
    }
  };
  a[0] = 0;
  rec(1, 0);
  return out;
}

std::vector<Levi> enumerate_levis(const GroupData& g)
{
  std::vector<Levi> out;
  for (const auto& rgs : set_partitions(g.n)) {
    int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<Block> blocks(k);
    for (int i = 0; i < g.n; ++i)
      blocks[rgs[i]].push_back(i);
    out.emplace_back(g.n, blocks);
  }
  return out;
}

namespace {

std::vector<Parabolic> orderings(int n, std::vector<Block> blocks)
{
  std::sort(blocks.begin(), blocks.end());
  std::vector<Parabolic> out;
  do {
    out.emplace_back(n, blocks);
  } while (std::next_permutation(blocks.begin(), blocks.end()));
  return out;
}

}  // namespace

std::vector<Levi> levis_containing(const Levi& m)
{
  std::vector<Levi> out;
  const auto& mb = m.blocks();
  for (const auto& rgs : set_partitions(m.num_blocks())) {
    int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<Block> blocks(k);
    for (std::size_t i = 0; i < mb.size(); ++i)
      blocks[rgs[i]].insert(blocks[rgs[i]].end(), mb[i].begin(), mb[i].end());
    out.emplace_back(m.n(), blocks);
  }
  return out;
}

std::vector<Parabolic> minimal_parabolics(const Levi& m) { return orderings(m.n(), m.blocks()); }

std::vector<Parabolic> parabolics_containing(const Levi& m)
{
  std::vector<Parabolic> out;
  for (const auto& l : levis_containing(m))
    for (auto& p : orderings(m.n(), l.blocks()))
      out.push_back(std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Parabolic> maximal_parabolics(const Levi& m)
{
  std::vector<Parabolic> out;
  for (const auto& p : parabolics_containing(m))
    if (p.num_blocks() == 2)
      out.push_back(p);
  return out;
}

ParabolicSets parabolics_over(const Levi& m, const std::optional<Parabolic>& q)
{
  ParabolicSets s;
  s.minimal = minimal_parabolics(m);
  s.containing = parabolics_containing(m);
  if (q) {
    if (!m.refines(q->levi()))
      throw std::invalid_argument("parabolics_over: Q is not compatible with M");
    auto keep = [&](std::vector<Parabolic>& v) {
      std::erase_if(v, [&](const Parabolic& p) { return !p.contained_in(*q); });
    };
    keep(s.minimal);
    keep(s.containing);
  }
  return s;
}

Vec project_levi(const Vec& v, const Levi& m)
{
  if (static_cast<int>(v.size()) != m.n())
    throw std::invalid_argument("project: wrong vector size");
  Vec r(v.size());
  for (const auto& b : m.blocks()) {
    Q s = 0;
    for (int a : b)
      s += v[a];
    s /= static_cast<long>(b.size());
    for (int a : b)
      r[a] = s;
  }
  // Block averaging of a trace-zero vector stays trace-zero; GL input is centred.
  return to_ambient(r);
}

Vec project(const Vec& v, const Parabolic& p, Part part)
{
  Vec vp = project_levi(v, p.levi());
  return part == Part::onto_aP ? vp : sub(v, vp);
}

bool in_a_levi(const Vec& v, const Levi& m)
{
  Q s = 0;
  for (const auto& x : v)
    s += x;
  if (s != 0)
    return false;
  for (const auto& b : m.blocks())
    for (int a : b)
      if (v[a] != v[b[0]])
        return false;
  return true;
}

std::optional<Vec> coroot_coordinates(const Vec& v, const Parabolic& p)
{
  if (!in_a_levi(v, p.levi()))
    return std::nullopt;
  Vec x;
  Q acc = 0;
  const auto& b = p.blocks();
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    acc += v[b[i][0]] * static_cast<long>(b[i].size());
    x.push_back(acc);
  }
  return x;
}

std::optional<Vec> adjacency_coroot(const Parabolic& p, const Parabolic& pp)
{
  if (p.levi() != pp.levi())
    throw std::invalid_argument("adjacency_coroot: different Levis");
  auto a = root_bases(p).coroots, b = root_bases(pp).coroots;
  std::vector<Vec> common;
  for (const auto& x : a)
    for (const auto& y : b)
      if (x == neg(y))
        common.push_back(x);
  if (common.size() != 1)
    return std::nullopt;
  return common[0];
}

bool adjacent(const Parabolic& p, const Parabolic& pp)
{
  const auto& a = p.blocks();
  const auto& b = pp.blocks();
  if (a.size() != b.size())
    return false;
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i])
      diff.push_back(i);
  return diff.size() == 2 && diff[1] == diff[0] + 1 && a[diff[0]] == b[diff[1]] && a[diff[1]] == b[diff[0]];
}

LatticeQ cochar_lattice(const Levi& m, LatticeKind kind)
{
  int n = m.n();
  Mat gens;
  if (kind == LatticeKind::scnx) {
    gens = root_bases(minimal_parabolics(m).front()).coroots;
  } else {
    // Image of X_*(T) = {v in Z^n, sum 0}, generated by e_i - e_n.
    for (int i = 0; i + 1 < n; ++i) {
      Vec e = zero_vec(n);
      e[i] = 1;
      e[n - 1] = -1;
      gens.push_back(project_levi(e, m));
    }
  }
  auto l = LatticeQ::from_generators(n, gens);
  l.label = std::string(kind == LatticeKind::full ? "X_*(M)" : "X_*(M_scnx)") + "[" + m.key() + "]";
  return l;
}

bool is_general_position(const Vec& xi, const GroupData& g)
{
  if (!in_ambient(xi, g))
    throw std::invalid_argument("is_general_position: vector not in the trace-zero space");
  for (const auto& p : parabolics_containing(Levi::torus(g.n))) {
    if (p.is_whole())
      continue;
    auto lat = cochar_lattice(p.levi(), LatticeKind::full);
    if (lat.contains(project(xi, p, Part::onto_aP)))
      return false;
  }
  return true;
}

bool general_position_by_subsets(const Vec& xi)
{
  int n = static_cast<int>(xi.size());
  for (int mask = 1; mask + 1 < (1 << n); ++mask) {
    Q s = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i))
        s += xi[i];
    if (is_integer(s))
      return false;
  }
  return true;
}

}  // namespace hitchin
