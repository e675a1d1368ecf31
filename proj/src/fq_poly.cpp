#include "hitchin/fq_poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hitchin {

FqPoly::FqPoly(const Fq* f, std::vector<int> c) : f_(f), c_(std::move(c)) { trim(); }

void FqPoly::trim()
{
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

FqPoly FqPoly::constant(const Fq& f, int c) { return FqPoly(&f, {c}); }

FqPoly FqPoly::x(const Fq& f) { return FqPoly(&f, {0, 1}); }

FqPoly FqPoly::monomial(const Fq& f, int c, int degree)
{
  std::vector<int> v(degree + 1, 0);
  v[degree] = c;
  return FqPoly(&f, v);
}

FqPoly FqPoly::monic() const
{
  if (c_.empty())
    return *this;
  return scaled(f_->inv(lead()));
}

int FqPoly::eval(int x) const
{
  int v = 0;
  for (int i = degree(); i >= 0; --i)
    v = f_->add(f_->mul(v, x), c_[i]);
  return v;
}

FqPoly FqPoly::reversed() const
{
  std::vector<int> r(c_.rbegin(), c_.rend());
  return FqPoly(f_, r);
}

FqPoly FqPoly::operator+(const FqPoly& o) const
{
  const Fq* f = f_ ? f_ : o.f_;
  std::vector<int> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return FqPoly(f, r);
}

FqPoly FqPoly::operator-() const
{
  std::vector<int> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f_->neg(c_[i]);
  return FqPoly(f_, r);
}

FqPoly FqPoly::operator-(const FqPoly& o) const { return *this + (-o); }

FqPoly FqPoly::operator*(const FqPoly& o) const
{
  const Fq* f = f_ ? f_ : o.f_;
  if (c_.empty() || o.c_.empty())
    return FqPoly(f, {});
  std::vector<int> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i])
      continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = f->add(r[i + j], f->mul(c_[i], o.c_[j]));
  }
  return FqPoly(f, r);
}

FqPoly FqPoly::scaled(int c) const
{
  std::vector<int> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f_->mul(c, c_[i]);
  return FqPoly(f_, r);
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& d) const
{
  if (d.is_zero())
    throw std::domain_error("FqPoly: division by zero");
  const Fq& f = *d.f_;
  std::vector<int> r = c_;
  int dd = d.degree();
  if (degree() < dd)
    return {FqPoly(&f, {}), *this};
  std::vector<int> quo(degree() - dd + 1, 0);
  int li = f.inv(d.lead());
  for (int k = degree(); k >= dd; --k) {
    int c = f.mul(r[k], li);
    if (!c)
      continue;
    quo[k - dd] = c;
    for (int i = 0; i <= dd; ++i)
      r[k - dd + i] = f.sub(r[k - dd + i], f.mul(c, d.c_[i]));
  }
  return {FqPoly(&f, quo), FqPoly(&f, r)};
}

FqPoly FqPoly::pow(int e) const
{
  FqPoly r = constant(*f_, 1), b = *this;
  while (e > 0) {
    if (e & 1)
      r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool FqPoly::operator<(const FqPoly& o) const
{
  if (degree() != o.degree())
    return degree() < o.degree();
  for (int i = degree(); i >= 0; --i)
    if (c_[i] != o.c_[i])
      return c_[i] < o.c_[i];
  return false;
}

std::string FqPoly::to_string(const std::string& var) const
{
  if (c_.empty())
    return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (!c_[i])
      continue;
    if (!s.empty())
      s += "+";
    std::string c = f_->to_string(c_[i]);
    if (i == 0)
      s += c;
    else {
      if (c_[i] != 1)
        s += c + "*";
      s += var;
      if (i > 1)
        s += "^" + std::to_string(i);
    }
  }
  return s;
}

FqPoly gcd(FqPoly a, FqPoly b)
{
  while (!b.is_zero()) {
    FqPoly r = a % b;
    a = b;
    b = r;
  }
  return a.monic();
}

FqPoly inverse_mod(const FqPoly& a, const FqPoly& m)
{
  const Fq& f = m.field();
  FqPoly r0 = m, r1 = a % m;
  FqPoly s0 = FqPoly::constant(f, 0), s1 = FqPoly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [qt, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    FqPoly s = s0 - qt * s1;
    s0 = s1;
    s1 = s;
  }
  if (r0.degree() != 0)
    throw std::domain_error("inverse_mod: not coprime");
  return (s0.scaled(f.inv(r0.lead()))) % m;
}

std::vector<FqPoly> monic_polys(const Fq& f, int degree)
{
  std::vector<FqPoly> out;
  long count = 1;
  for (int i = 0; i < degree; ++i)
    count *= f.q();
  for (long code = 0; code < count; ++code) {
    std::vector<int> c(degree + 1);
    long x = code;
    for (int i = 0; i < degree; ++i) {
      c[i] = static_cast<int>(x % f.q());
      x /= f.q();
    }
    c[degree] = 1;
    out.emplace_back(&f, c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_irreducible(const FqPoly& p)
{
  if (p.degree() < 1)
    return false;
  for (int d = 1; 2 * d <= p.degree(); ++d)
    for (const auto& g : monic_polys(p.field(), d))
      if ((p % g).is_zero())
        return false;
  return true;
}

std::vector<FqPoly> monic_irreducibles(const Fq& f, int degree)
{
  std::vector<FqPoly> out;
  for (const auto& p : monic_polys(f, degree))
    if (is_irreducible(p))
      out.push_back(p);
  return out;
}

long necklace_count(int q, int degree)
{
  auto mobius = [](int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0)
          return 0;
        m = -m;
      }
    return n > 1 ? -m : m;
  };
  long total = 0;
  for (int e = 1; e <= degree; ++e)
    if (degree % e == 0) {
      long pw = 1;
      for (int i = 0; i < degree / e; ++i)
        pw *= q;
      total += mobius(e) * pw;
    }
  return total / degree;
}

std::vector<std::pair<FqPoly, int>> factor(const FqPoly& f)
{
  if (f.is_zero())
    throw std::invalid_argument("factor: zero polynomial");
  std::vector<std::pair<FqPoly, int>> out;
  FqPoly rest = f.monic();
  for (int d = 1; rest.degree() > 0 && d <= rest.degree(); ++d)
    for (const auto& p : monic_irreducibles(f.field(), d)) {
      int m = 0;
      while (rest.degree() >= p.degree() && (rest % p).is_zero()) {
        rest = rest / p;
        ++m;
      }
      if (m)
        out.emplace_back(p, m);
    }
  return out;
}

RatFunc::RatFunc(FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den))
{
  if (den_.is_zero())
    throw std::domain_error("RatFunc: zero denominator");
  const Fq& f = den_.field();
  if (num_.is_zero()) {
    num_ = FqPoly(&f, {});
    den_ = FqPoly::constant(f, 1);
    return;
  }
  FqPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  int l = f.inv(den_.lead());
  num_ = num_.scaled(l);
  den_ = den_.scaled(l);
}

RatFunc RatFunc::from_poly(const FqPoly& p) { return RatFunc(p, FqPoly::constant(p.field(), 1)); }

RatFunc RatFunc::constant(const Fq& f, int c) { return from_poly(FqPoly::constant(f, c)); }

RatFunc RatFunc::operator+(const RatFunc& o) const { return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::inverse() const
{
  if (is_zero())
    throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(int e) const
{
  if (e < 0)
    return inverse().pow(-e);
  return RatFunc(num_.pow(e), den_.pow(e));
}

RatFunc RatFunc::at_inverse_variable() const
{
  const Fq& f = field();
  if (is_zero())
    return *this;
  // num(1/x)/den(1/x) = x^{deg den - deg num} rev(num)/rev(den).
  int shift = den_.degree() - num_.degree();
  FqPoly n = num_.reversed(), d = den_.reversed();
  if (shift >= 0)
    n = n * FqPoly::monomial(f, 1, shift);
  else
    d = d * FqPoly::monomial(f, 1, -shift);
  return RatFunc(n, d);
}

int RatFunc::valuation(const FqPoly& p) const
{
  if (is_zero())
    return kInfiniteValuation;
  auto count = [&](FqPoly a) {
    int v = 0;
    while (true) {
      auto [qt, r] = a.divmod(p);
      if (!r.is_zero())
        return v;
      a = qt;
      ++v;
    }
  };
  return count(num_) - count(den_);
}

int RatFunc::valuation_at_infinity() const
{
  if (is_zero())
    return kInfiniteValuation;
  return den_.degree() - num_.degree();
}

std::string RatFunc::to_string(const std::string& var) const
{
  if (den_.degree() == 0)
    return num_.to_string(var);
  auto wrap = [&](const FqPoly& p) {
    std::string s = p.to_string(var);
    long terms = std::count_if(p.coeffs().begin(), p.coeffs().end(), [](int c) { return c != 0; });
    bool simple = terms <= 1 && (p.degree() == 0 || p.lead() == 1);
    return simple ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

namespace {

class Parser {
public:
  Parser(const std::string& s, const Fq& f, const std::string& var) : s_(s), f_(f), var_(var) {}

  RatFunc parse()
  {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

private:
  const std::string& s_;
  const Fq& f_;
  std::string var_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const
  {
    throw std::invalid_argument("parse_ratfunc: " + msg + " at position " + std::to_string(pos_) + " in \"" + s_ +
                                "\"");
  }
  void skip()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eat(char c)
  {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer()
  {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected an integer");
    if (pos_ - start > 9)
      fail("integer too long");
    return std::stol(s_.substr(start, pos_ - start));
  }
  RatFunc expr()
  {
    RatFunc r = term();
    while (true) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }
  RatFunc term()
  {
    RatFunc r = power();
    while (true) {
      if (eat('*'))
        r = r * power();
      else if (eat('/')) {
        RatFunc d = power();
        if (d.is_zero())
          fail("division by zero");
        r = r / d;
      } else
        return r;
    }
  }
  RatFunc power()
  {
    RatFunc b = unary();
    if (eat('^')) {
      if (b.is_zero())
        fail("power of zero");
      b = b.pow(static_cast<int>(exponent()));
    }
    return b;
  }
  long exponent()
  {
    if (eat('(')) {
      long e = exponent();
      if (!eat(')'))
        fail("expected ')'");
      return e;
    }
    if (eat('-'))
      return -integer();
    return integer();
  }
  RatFunc unary()
  {
    if (eat('-'))
      return -unary();
    return primary();
  }
  RatFunc primary()
  {
    skip();
    if (eat('(')) {
      RatFunc r = expr();
      if (!eat(')'))
        fail("expected ')'");
      return r;
    }
    if (s_.compare(pos_, var_.size(), var_) == 0) {
      pos_ += var_.size();
      return RatFunc::from_poly(FqPoly::x(f_));
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      return RatFunc::constant(f_, f_.from_int(integer()));
    fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
  }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text, const Fq& f, const std::string& var)
{
  return Parser(text, f, var).parse();
}

}  // namespace hitchin
