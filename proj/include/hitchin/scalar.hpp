#pragma once

#include "hitchin/lattice.hpp"

#include <string>
#include <vector>

namespace hitchin {

struct VolumeFactor {
  LatticeQ lattice;
  int power = 1;
};

// value * prod covol(lattice)^power; covolumes stay symbolic so comparisons are exact.
class NormalizedScalar {
public:
  NormalizedScalar() = default;
  explicit NormalizedScalar(Q value, std::vector<VolumeFactor> factors = {});
  static NormalizedScalar volume_of(const LatticeQ& lattice, int power = 1);

  const Q& value() const { return value_; }
  const std::vector<VolumeFactor>& factors() const { return factors_; }

  // Merges factors spanning the same subspace and drops trivial ones.
  NormalizedScalar canonical() const;
  // Re-expresses each factor through the reference lattice with the same span.
  NormalizedScalar rebased(const std::vector<LatticeQ>& refs) const;
  bool is_rational() const { return canonical().factors_.empty(); }

  NormalizedScalar operator*(const NormalizedScalar& o) const;
  NormalizedScalar operator*(const Q& c) const;
  NormalizedScalar operator+(const NormalizedScalar& o) const;
  // Throws std::domain_error when the two sides carry incomparable factors.
  bool equals(const NormalizedScalar& o) const;

  std::string reference_string() const;
  std::string to_string() const;

private:
  Q value_ = 0;
  std::vector<VolumeFactor> factors_;
};

}  // namespace hitchin
