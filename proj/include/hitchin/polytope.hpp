#pragma once

#include "hitchin/rootdata.hpp"

#include <map>
#include <memory>
#include <utility>

namespace hitchin {

// Parabolic sets and root bases attached to one Levi, shared by every family over it.
struct LeviGeometry {
  Levi levi;
  std::vector<Parabolic> minimal;       // P(M)
  std::vector<Parabolic> containing;    // F(M)
  std::vector<Parabolic> maximal;       // two-block members of F(M)
  std::map<Parabolic, RootBases> bases; // every member of F(M)
  std::map<Parabolic, std::vector<Parabolic>> below; // Q -> P^Q(M)
  std::vector<Vec> all_coroots;         // Delta_P^vee over P(M), up to sign
};

const LeviGeometry& levi_geometry(const Levi& m);

class PositiveOrthogonalFamily {
public:
  PositiveOrthogonalFamily(GroupData g, Levi m, std::map<Parabolic, Vec> points);

  const GroupData& group() const { return g_; }
  const Levi& levi() const { return m_; }
  const LeviGeometry& geometry() const { return *geo_; }
  const std::map<Parabolic, Vec>& points() const { return points_; }
  const Vec& point(const Parabolic& p) const;
  // Projection of Y_P to a_Q for the first P in P^Q(M); unchecked.
  const Vec& q_point(const Parabolic& q) const;
  // Distinct vertices in Delta_{P0}^vee coordinates, P0 = first member of P(M).
  const std::vector<Vec>& vertex_coordinates() const { return vcoords_; }
  const Parabolic& reference_parabolic() const { return geo_->minimal.front(); }

  PositiveOrthogonalFamily translated(const Vec& shift) const;

private:
  GroupData g_;
  Levi m_;
  const LeviGeometry* geo_;
  std::map<Parabolic, Vec> points_;
  std::map<Parabolic, Vec> qpoints_;
  std::vector<Vec> vcoords_;
};

struct HNResult {
  Vec rho;
  Parabolic q;
  Q dist2;
};

using AdjacencyCoefficients = std::map<std::pair<Parabolic, Parabolic>, Q>;

AdjacencyCoefficients validate_family(const PositiveOrthogonalFamily& f);
Vec family_point_for(const PositiveOrthogonalFamily& f, const Parabolic& q);

enum class ConeKind { obtuse_open, obtuse_closed, acute };
bool cone_member(const Parabolic& p, const Vec& h, ConeKind kind);

enum class CmMode { all_F, only_P, only_maximal };
bool cm_member(const PositiveOrthogonalFamily& f, const Vec& xi, bool closed, CmMode mode);

bool hull_member(const PositiveOrthogonalFamily& f, const Vec& v);
HNResult hn_point(const PositiveOrthogonalFamily& f, const Vec& xi);
int langlands_indicator(const PositiveOrthogonalFamily& f, const Vec& mu, const Covector& lambda0);
Parabolic chamber_partition_check(const GroupData& g, const Vec& v);

// Lambda0(alpha^vee) != 0 for every coroot of every P in P(M).
bool is_generic_direction(const Levi& m, const Covector& lambda0);

}  // namespace hitchin
