#pragma once

#include "hitchin/polytope.hpp"
#include "hitchin/scalar.hpp"
#include "hitchin/series.hpp"

#include <cstdint>
#include <functional>

namespace hitchin {

// floor: fractional coefficients in [0,1). upper: fractional coefficients in (0,1].
enum class IntegerPart { floor, upper };

struct FloorParts {
  Vec integral;
  Vec fractional;
};

FloorParts floor_decompose(const Vec& mu, const Parabolic& p, IntegerPart convention = IntegerPart::floor);

SeriesQ cP_series(const Parabolic& p, const Covector& lambda0, int order);

struct DSeries {
  SeriesQ series;         // prod t*Lambda0(alpha^vee)
  NormalizedScalar scale; // covol(X_*(M_scnx))^{-1}
};
DSeries dP_series(const Parabolic& p, const Covector& lambda0, int order);

// x / (e^x - 1) at x = c t.
SeriesQ bernoulli_factor(const Q& c, int order);

using MemberFn = std::function<SeriesQ(const Parabolic&, const Covector&, int)>;

// Members b_P(t Lambda0) as series; the family value carries prod covol^power from `unit`.
struct GMFamily {
  GroupData group;
  Levi levi;
  std::vector<VolumeFactor> unit;
  MemberFn member;
};

GMFamily product(const GMFamily& a, const GMFamily& b);
GMFamily constant_family(const GroupData& g, const Levi& m, const Q& c);
GMFamily v_family(const PositiveOrthogonalFamily& f);
GMFamily w_family(const Vec& mu, const GroupData& g, const Levi& m, IntegerPart convention = IntegerPart::upper);

// Deterministic generic directions for the Levi (Lambda0(alpha^vee) != 0 on all coroots).
std::vector<Covector> generic_directions(const Levi& m, int count, std::uint64_t seed = 1);
// Lambda0 moved onto the wall Lambda0(alpha^vee) = 0.
Covector wall_direction(const Covector& lambda0, const Vec& coroot);

NormalizedScalar family_limit(const GMFamily& fam, const std::vector<Covector>& directions);
// (L,M)-family value b^Q_M for Q with Levi L containing M.
NormalizedScalar relative_family_limit(const GMFamily& fam, const Parabolic& q, const std::vector<Covector>& directions);

bool wall_agreement(const GMFamily& fam, const Parabolic& p, const Parabolic& pp, const Covector& lambda0);

GMFamily restrict_family(const GMFamily& fam, const Levi& l);
PositiveOrthogonalFamily restrict_family(const PositiveOrthogonalFamily& f, const Levi& l);

enum class Method { direct, limit };

long w_weight(const PositiveOrthogonalFamily& f, const Vec& xi, Method method, int directions = 3);
NormalizedScalar v_weight(const PositiveOrthogonalFamily& f, Method method, int directions = 3);

// Representatives of X_*(M)/X_*(M_scnx); `shifted` moves each by a nonzero element of X_*(M_scnx).
std::vector<Vec> coset_reps(const Levi& m, bool shifted = false);

struct ScalarIdentity {
  NormalizedScalar lhs;
  NormalizedScalar rhs;
  bool holds = false;
};

ScalarIdentity wl_sum_identity(const GroupData& g, const Levi& m, const Levi& l, const Vec& xi,
                               const std::vector<Vec>& reps, int directions = 3);

struct IntegerIdentity {
  Q lhs;
  long rhs = 0;
  bool holds = false;
};

IntegerIdentity reformulation_check(const PositiveOrthogonalFamily& f, const Vec& xi, const std::vector<Vec>& reps,
                                    int directions = 3);

PositiveOrthogonalFamily trivial_family(const GroupData& g, const Levi& m);

}  // namespace hitchin
