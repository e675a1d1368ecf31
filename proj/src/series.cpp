#include "hitchin/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hitchin {

SeriesQ::SeriesQ(int lo, std::vector<Q> c, int trunc) : lo_(lo), c_(std::move(c)), trunc_(trunc) { normalize(); }

void SeriesQ::normalize()
{
  if (lo_ + static_cast<int>(c_.size()) > trunc_)
    c_.resize(std::max(0, trunc_ - lo_));
  std::size_t skip = 0;
  while (skip < c_.size() && c_[skip] == 0)
    ++skip;
  c_.erase(c_.begin(), c_.begin() + static_cast<long>(skip));
  lo_ += static_cast<int>(skip);
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
  if (c_.empty())
    lo_ = trunc_;
}

SeriesQ SeriesQ::constant(const Q& c, int trunc) { return SeriesQ(0, {c}, trunc); }

SeriesQ SeriesQ::monomial(const Q& c, int degree, int trunc) { return SeriesQ(degree, {c}, trunc); }

SeriesQ SeriesQ::exp_linear(const Q& a, int trunc)
{
  std::vector<Q> c;
  Q term = 1;
  for (int k = 0; k < trunc; ++k) {
    c.push_back(term);
    term = term * a / (k + 1);
  }
  return SeriesQ(0, c, trunc);
}

int SeriesQ::valuation() const { return c_.empty() ? trunc_ : lo_; }

Q SeriesQ::coeff(int degree) const
{
  if (degree >= trunc_)
    throw std::out_of_range("SeriesQ::coeff: degree " + std::to_string(degree) + " beyond truncation " +
                            std::to_string(trunc_));
  int i = degree - lo_;
  if (i < 0 || i >= static_cast<int>(c_.size()))
    return 0;
  return c_[i];
}

SeriesQ SeriesQ::operator+(const SeriesQ& o) const
{
  int t = std::min(trunc_, o.trunc_);
  int lo = std::min(valuation(), o.valuation());
  if (lo >= t)
    return SeriesQ(t, {}, t);
  std::vector<Q> c(t - lo);
  for (int k = lo; k < t; ++k)
    c[k - lo] = coeff(k) + o.coeff(k);
  return SeriesQ(lo, c, t);
}

SeriesQ SeriesQ::operator*(const Q& c) const
{
  std::vector<Q> d = c_;
  for (auto& x : d)
    x *= c;
  return SeriesQ(lo_, d, trunc_);
}

SeriesQ SeriesQ::operator-(const SeriesQ& o) const { return *this + o * Q(-1); }

SeriesQ SeriesQ::operator*(const SeriesQ& o) const
{
  int v1 = valuation(), v2 = o.valuation();
  int t = std::min(trunc_ + v2, o.trunc_ + v1);
  int lo = v1 + v2;
  if (lo >= t)
    return SeriesQ(t, {}, t);
  std::vector<Q> c(t - lo, Q(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      int deg = lo_ + static_cast<int>(i) + o.lo_ + static_cast<int>(j);
      if (deg >= t)
        break;
      c[deg - lo] += c_[i] * o.c_[j];
    }
  return SeriesQ(lo, c, t);
}

SeriesQ SeriesQ::shifted(int k) const { return SeriesQ(lo_ + k, c_, trunc_ + k); }

SeriesQ SeriesQ::inverse() const
{
  if (c_.empty())
    throw std::domain_error("SeriesQ::inverse: leading coefficient unknown or zero");
  int v = lo_;
  int rel = trunc_ - v;
  std::vector<Q> inv(rel);
  inv[0] = 1 / c_[0];
  for (int k = 1; k < rel; ++k) {
    Q s = 0;
    for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j)
      s += c_[j] * inv[k - j];
    inv[k] = -s * inv[0];
  }
  return SeriesQ(-v, inv, -v + rel);
}

SeriesQ SeriesQ::exp() const
{
  if (trunc_ <= 0)
    throw std::domain_error("SeriesQ::exp: constant term unknown");
  if (valuation() < 1)
    throw std::domain_error("SeriesQ::exp: argument must have positive valuation");
  int t = trunc_;
  std::vector<Q> e(t, Q(0));
  e[0] = 1;
  for (int k = 1; k < t; ++k) {
    Q s = 0;
    for (int j = 1; j <= k; ++j) {
      Q fj = coeff(j);
      if (fj != 0)
        s += fj * j * e[k - j];
    }
    e[k] = s / k;
  }
  return SeriesQ(0, e, t);
}

SeriesQ SeriesQ::truncated(int trunc) const
{
  if (trunc > trunc_)
    throw std::invalid_argument("SeriesQ::truncated: cannot extend precision");
  return SeriesQ(lo_, c_, trunc);
}

bool SeriesQ::agrees_with(const SeriesQ& o) const
{
  int t = std::min(trunc_, o.trunc_);
  int lo = std::min(valuation(), o.valuation());
  for (int k = lo; k < t; ++k)
    if (coeff(k) != o.coeff(k))
      return false;
  return true;
}

}  // namespace hitchin
