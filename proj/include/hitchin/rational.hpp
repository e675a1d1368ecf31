#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hitchin {

using Q = mpq_class;
using Z = mpz_class;
using Vec = std::vector<Q>;

Q parse_rational(const std::string& s);
std::string to_string(const Q& x);

Z floor_q(const Q& x);
Z ceil_q(const Q& x);
bool is_integer(const Q& x);

Q dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Q& c, const Vec& a);
Vec neg(const Vec& a);
bool is_zero(const Vec& a);
Q norm2(const Vec& a);
Vec zero_vec(int n);

std::vector<std::string> to_strings(const Vec& v);
Vec parse_vec(const std::vector<std::string>& s);
std::string vec_string(const Vec& v);

}  // namespace hitchin
