#pragma once

#include <string>
#include <vector>

namespace hitchin {

// F_q for q = p^k <= 9 by lookup tables; elements are 0..q-1 (base-p digits of the polynomial basis).
class Fq {
public:
  explicit Fq(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int k() const { return k_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;
  int from_int(long n) const;
  bool is_square(int a) const;

  std::string to_string(int a) const;
  bool operator==(const Fq& o) const { return q_ == o.q_; }

private:
  int q_, p_, k_;
  std::vector<int> add_, mul_, neg_, inv_;
};

const Fq& field(int q);

}  // namespace hitchin
