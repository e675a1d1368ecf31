#include "hitchin/rational.hpp"

#include <stdexcept>

namespace hitchin {

Q parse_rational(const std::string& s)
{
  std::string t;
  for (char c : s)
    if (c != ' ')
      t.push_back(c);
  if (t.empty())
    throw std::invalid_argument("empty rational");
  if (t[0] == '+')
    t.erase(0, 1);
  auto slash = t.find('/');
  auto digits = [](const std::string& d, bool sign_ok) {
    if (d.empty())
      return false;
    std::size_t i = (sign_ok && d[0] == '-') ? 1 : 0;
    if (i == d.size())
      return false;
    for (; i < d.size(); ++i)
      if (d[i] < '0' || d[i] > '9')
        return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits(t, true))
      throw std::invalid_argument("malformed rational: " + s);
    return Q(Z(t));
  }
  std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false))
    throw std::invalid_argument("malformed rational: " + s);
  Z d(den);
  if (d == 0)
    throw std::invalid_argument("zero denominator: " + s);
  Q r(Z(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Q& x) { return x.get_str(); }

Z floor_q(const Q& x)
{
  Z r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Z ceil_q(const Q& x)
{
  Z r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

bool is_integer(const Q& x) { return x.get_den() == 1; }

Q dot(const Vec& a, const Vec& b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("dot: size mismatch");
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("sub: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Q& c, const Vec& a)
{
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = c * a[i];
  return r;
}

Vec neg(const Vec& a) { return scale(Q(-1), a); }

bool is_zero(const Vec& a)
{
  for (const auto& x : a)
    if (x != 0)
      return false;
  return true;
}

Q norm2(const Vec& a) { return dot(a, a); }

Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n), Q(0)); }

std::vector<std::string> to_strings(const Vec& v)
{
  std::vector<std::string> r;
  r.reserve(v.size());
  for (const auto& x : v)
    r.push_back(to_string(x));
  return r;
}

Vec parse_vec(const std::vector<std::string>& s)
{
  Vec r;
  r.reserve(s.size());
  for (const auto& x : s)
    r.push_back(parse_rational(x));
  return r;
}

std::string vec_string(const Vec& v)
{
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace hitchin
