#pragma once

#include "hitchin/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hitchin {

using ZMat = std::vector<std::vector<Z>>;

// A full-rank lattice inside the Q-span of its basis, in ambient coordinates.
class LatticeQ {
public:
  LatticeQ() = default;
  LatticeQ(int ambient_dim, Mat basis);

  static LatticeQ from_generators(int ambient_dim, const Mat& gens);

  int ambient_dim() const { return ambient_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const Mat& basis() const { return basis_; }

  std::optional<Vec> coordinates(const Vec& v) const;
  bool in_span(const Vec& v) const { return coordinates(v).has_value(); }
  bool contains(const Vec& v) const;
  bool same_span(const LatticeQ& other) const;
  bool contains(const LatticeQ& sub) const;
  bool operator==(const LatticeQ& other) const;

  std::string label;

private:
  int ambient_ = 0;
  Mat basis_;
};

// |det| of the change of basis expressing A's basis in B's basis: covol(A)/covol(B).
Q covolume_ratio(const LatticeQ& a, const LatticeQ& b);

struct SmithResult {
  ZMat d;   // diagonal form
  ZMat u;   // row transform
  ZMat v;   // column transform, u * a * v = d
};

SmithResult smith_normal_form(const ZMat& a);
ZMat hermite_rows(const ZMat& a);

// Representatives of full / sub, sub of finite index in full.
std::vector<Vec> coset_representatives(const LatticeQ& full, const LatticeQ& sub);
Z lattice_index(const LatticeQ& full, const LatticeQ& sub);

}  // namespace hitchin
