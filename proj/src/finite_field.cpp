#include "hitchin/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hitchin {

namespace {

std::vector<int> digits(int a, int p, int k)
{
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p)
{
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
    a = a * p + d[i];
  return a;
}

// Product of polynomials over F_p reduced by the monic modulus x^k + m[k-1] x^{k-1} + ... + m[0].
std::vector<int> polymulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& m, int p)
{
  int k = static_cast<int>(m.size());
  std::vector<int> r(2 * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * k - 1; d >= k; --d) {
    int c = r[d];
    if (!c)
      continue;
    r[d] = 0;
    for (int i = 0; i < k; ++i)
      r[d - k + i] = ((r[d - k + i] - c * m[i]) % p + p) % p;
  }
  r.resize(k);
  return r;
}

bool rootless(const std::vector<int>& m, int p)
{
  // Degrees 2 and 3 are irreducible iff rootless.
  int k = static_cast<int>(m.size());
  for (int x = 0; x < p; ++x) {
    int v = 1;
    for (int i = k - 1; i >= 0; --i)
      v = (v * x + m[i]) % p;
    if (v == 0)
      return false;
  }
  return true;
}

}  // namespace

Fq::Fq(int q) : q_(q), p_(0), k_(0)
{
  for (int p = 2; p <= q; ++p) {
    int k = 0, x = q;
    while (x % p == 0) {
      x /= p;
      ++k;
    }
    if (k > 0) {
      if (x != 1)
        throw std::invalid_argument("Fq: q must be a prime power");
      p_ = p;
      k_ = k;
      break;
    }
  }
  if (q < 2 || q > 9 || p_ == 0)
    throw std::invalid_argument("Fq: q must be a prime power in [2, 9]");

  std::vector<int> modulus(k_, 0);
  if (k_ > 1) {
    bool found = false;
    for (int code = 0; code < q_ && !found; ++code) {
      modulus = digits(code, p_, k_);
      found = rootless(modulus, p_);
    }
    if (!found)
      throw std::logic_error("Fq: no irreducible modulus");
  }
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a, p_, k_);
    std::vector<int> dn(k_);
    for (int i = 0; i < k_; ++i)
      dn[i] = (p_ - da[i]) % p_;
    neg_[a] = undigits(dn, p_);
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b, p_, k_);
      std::vector<int> s(k_);
      for (int i = 0; i < k_; ++i)
        s[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = undigits(s, p_);
      mul_[a * q_ + b] = k_ == 1 ? (a * b) % p_ : undigits(polymulmod(da, db, modulus, p_), p_);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1)
        inv_[a] = b;
}

int Fq::inv(int a) const
{
  if (a == 0)
    throw std::domain_error("Fq: inverse of zero");
  return inv_[a];
}

int Fq::from_int(long n) const
{
  long r = ((n % p_) + p_) % p_;
  return static_cast<int>(r);
}

bool Fq::is_square(int a) const
{
  for (int x = 0; x < q_; ++x)
    if (mul(x, x) == a)
      return true;
  return false;
}

std::string Fq::to_string(int a) const
{
  if (k_ == 1)
    return std::to_string(a);
  return "g" + std::to_string(a);
}

const Fq& field(int q)
{
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Fq>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, std::make_unique<Fq>(q)).first;
  return *it->second;
}

}  // namespace hitchin
