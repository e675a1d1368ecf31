#pragma once

#include "hitchin/finite_field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hitchin {

// Polynomial over F_q, coefficients low to high, no trailing zeros.
class FqPoly {
public:
  FqPoly() = default;
  FqPoly(const Fq* f, std::vector<int> c);
  static FqPoly constant(const Fq& f, int c);
  static FqPoly x(const Fq& f);
  static FqPoly monomial(const Fq& f, int c, int degree);

  const Fq& field() const { return *f_; }
  const std::vector<int>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  int lead() const { return c_.empty() ? 0 : c_.back(); }
  int coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  FqPoly monic() const;
  int eval(int x) const;
  // Coefficient-reversed polynomial x^d f(1/x) for d = degree().
  FqPoly reversed() const;

  FqPoly operator+(const FqPoly& o) const;
  FqPoly operator-(const FqPoly& o) const;
  FqPoly operator*(const FqPoly& o) const;
  FqPoly operator-() const;
  FqPoly scaled(int c) const;
  std::pair<FqPoly, FqPoly> divmod(const FqPoly& d) const;
  FqPoly operator/(const FqPoly& d) const { return divmod(d).first; }
  FqPoly operator%(const FqPoly& d) const { return divmod(d).second; }
  FqPoly pow(int e) const;
  bool operator==(const FqPoly& o) const { return c_ == o.c_; }
  bool operator<(const FqPoly& o) const;

  std::string to_string(const std::string& var = "t") const;

private:
  const Fq* f_ = nullptr;
  std::vector<int> c_;
  void trim();
};

FqPoly gcd(FqPoly a, FqPoly b);
// s with s*a = 1 mod m; a must be coprime to m.
FqPoly inverse_mod(const FqPoly& a, const FqPoly& m);

bool is_irreducible(const FqPoly& f);
std::vector<FqPoly> monic_polys(const Fq& f, int degree);
std::vector<FqPoly> monic_irreducibles(const Fq& f, int degree);
// Necklace count (1/d) sum_{e|d} mu(e) q^{d/e}.
long necklace_count(int q, int degree);
// Monic irreducible factors with multiplicity, sorted.
std::vector<std::pair<FqPoly, int>> factor(const FqPoly& f);

// num/den with monic den and gcd 1.
class RatFunc {
public:
  RatFunc() = default;
  RatFunc(FqPoly num, FqPoly den);
  static RatFunc from_poly(const FqPoly& p);
  static RatFunc constant(const Fq& f, int c);

  const FqPoly& num() const { return num_; }
  const FqPoly& den() const { return den_; }
  const Fq& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(int e) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  // f(1/x): the expansion variable at infinity.
  RatFunc at_inverse_variable() const;
  // Valuation at the place of a monic irreducible p; large sentinel for zero.
  int valuation(const FqPoly& p) const;
  int valuation_at_infinity() const;
  std::string to_string(const std::string& var = "t") const;

private:
  FqPoly num_, den_;
};

constexpr int kInfiniteValuation = 1 << 28;

// Parses integers, the variable, + - * / ^ and parentheses; integers are read mod p.
RatFunc parse_ratfunc(const std::string& text, const Fq& f, const std::string& var = "t");

}  // namespace hitchin
