#pragma once

#include "hitchin/rational.hpp"

#include <vector>

namespace hitchin {

// Truncated Laurent series in t: coefficients of degree >= trunc() are unknown.
class SeriesQ {
public:
  SeriesQ() = default;

  static SeriesQ constant(const Q& c, int trunc);
  static SeriesQ monomial(const Q& c, int degree, int trunc);
  // exp(a t)
  static SeriesQ exp_linear(const Q& a, int trunc);

  int trunc() const { return trunc_; }
  // Lowest degree with a nonzero known coefficient, trunc() if none.
  int valuation() const;
  Q coeff(int degree) const;

  SeriesQ operator+(const SeriesQ& o) const;
  SeriesQ operator-(const SeriesQ& o) const;
  SeriesQ operator*(const SeriesQ& o) const;
  SeriesQ operator*(const Q& c) const;
  SeriesQ shifted(int k) const;  // t^k * this
  SeriesQ inverse() const;
  SeriesQ exp() const;
  SeriesQ truncated(int trunc) const;

  // Equal on every degree known to both.
  bool agrees_with(const SeriesQ& o) const;

private:
  SeriesQ(int lo, std::vector<Q> c, int trunc);
  void normalize();

  int lo_ = 0;
  std::vector<Q> c_;
  int trunc_ = 0;
};

}  // namespace hitchin
