#include "hitchin/scalar.hpp"

#include <stdexcept>

namespace hitchin {

namespace {

Q qpow(const Q& x, int p)
{
  Q r = 1;
  for (int i = 0; i < (p < 0 ? -p : p); ++i)
    r *= x;
  return p < 0 ? Q(1 / r) : r;
}

}  // namespace

NormalizedScalar::NormalizedScalar(Q value, std::vector<VolumeFactor> factors)
    : value_(std::move(value)), factors_(std::move(factors))
{
}

NormalizedScalar NormalizedScalar::volume_of(const LatticeQ& lattice, int power)
{
  return NormalizedScalar(1, {VolumeFactor{lattice, power}});
}

NormalizedScalar NormalizedScalar::canonical() const
{
  Q v = value_;
  std::vector<VolumeFactor> out;
  for (const auto& f : factors_) {
    if (f.power == 0 || f.lattice.rank() == 0)
      continue;
    bool merged = false;
    for (auto& g : out)
      if (g.lattice.same_span(f.lattice)) {
        v *= qpow(covolume_ratio(f.lattice, g.lattice), f.power);
        g.power += f.power;
        merged = true;
        break;
      }
    if (!merged)
      out.push_back(f);
  }
  std::erase_if(out, [](const VolumeFactor& f) { return f.power == 0; });
  if (v == 0)
    out.clear();
  return NormalizedScalar(v, out);
}

NormalizedScalar NormalizedScalar::rebased(const std::vector<LatticeQ>& refs) const
{
  NormalizedScalar c = canonical();
  Q v = c.value_;
  std::vector<VolumeFactor> out;
  for (const auto& f : c.factors_) {
    const LatticeQ* target = nullptr;
    for (const auto& r : refs)
      if (r.same_span(f.lattice)) {
        target = &r;
        break;
      }
    if (!target) {
      out.push_back(f);
      continue;
    }
    v *= qpow(covolume_ratio(f.lattice, *target), f.power);
    out.push_back(VolumeFactor{*target, f.power});
  }
  return NormalizedScalar(v, out);
}

NormalizedScalar NormalizedScalar::operator*(const NormalizedScalar& o) const
{
  auto f = factors_;
  f.insert(f.end(), o.factors_.begin(), o.factors_.end());
  return NormalizedScalar(value_ * o.value_, f).canonical();
}

NormalizedScalar NormalizedScalar::operator*(const Q& c) const { return NormalizedScalar(value_ * c, factors_); }

namespace {

// Same span set and powers after rebasing b onto a's lattices.
bool same_monomial(const NormalizedScalar& a, const NormalizedScalar& b)
{
  if (a.factors().size() != b.factors().size())
    return false;
  for (const auto& f : a.factors()) {
    bool found = false;
    for (const auto& g : b.factors())
      if (g.lattice.same_span(f.lattice) && g.power == f.power)
        found = true;
    if (!found)
      return false;
  }
  return true;
}

}  // namespace

NormalizedScalar NormalizedScalar::operator+(const NormalizedScalar& o) const
{
  NormalizedScalar a = canonical();
  if (a.value_ == 0)
    return o.canonical();
  std::vector<LatticeQ> refs;
  for (const auto& f : a.factors_)
    refs.push_back(f.lattice);
  NormalizedScalar b = o.rebased(refs);
  if (b.value_ == 0)
    return a;
  if (!same_monomial(a, b))
    throw std::domain_error("NormalizedScalar: adding incomparable volume factors");
  return NormalizedScalar(a.value_ + b.value_, a.factors_);
}

bool NormalizedScalar::equals(const NormalizedScalar& o) const
{
  NormalizedScalar a = canonical();
  std::vector<LatticeQ> refs;
  for (const auto& f : a.factors_)
    refs.push_back(f.lattice);
  NormalizedScalar b = o.rebased(refs);
  if (a.value_ == 0 || b.value_ == 0)
    return a.value_ == b.value_;
  if (!same_monomial(a, b))
    throw std::domain_error("NormalizedScalar: comparing incomparable volume factors");
  return a.value_ == b.value_;
}

std::string NormalizedScalar::reference_string() const
{
  NormalizedScalar c = canonical();
  if (c.factors_.empty())
    return "1";
  std::string s;
  for (const auto& f : c.factors_) {
    if (!s.empty())
      s += "*";
    s += "covol(" + (f.lattice.label.empty() ? std::string("L") : f.lattice.label) + ")";
    if (f.power != 1)
      s += "^" + std::to_string(f.power);
  }
  return s;
}

std::string NormalizedScalar::to_string() const
{
  return hitchin::to_string(canonical().value_) + " * " + reference_string();
}

}  // namespace hitchin
