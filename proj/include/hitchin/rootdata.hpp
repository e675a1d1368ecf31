#pragma once

#include "hitchin/lattice.hpp"
#include "hitchin/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace hitchin {

// SL(n); the ambient space is the trace-zero hyperplane of Q^n.
struct GroupData {
  int n = 2;
  bool operator==(const GroupData&) const = default;
};

GroupData make_group(int n);
bool in_ambient(const Vec& v, const GroupData& g);
// Subtracts the mean so GL(n) input lands in the trace-zero space.
Vec to_ambient(const Vec& v);

// Index blocks use 0-based indices internally, 1-based in every external format.
using Block = std::vector<int>;

class Levi {
public:
  Levi() = default;
  Levi(int n, std::vector<Block> blocks);
  static Levi torus(int n);
  static Levi whole(int n);

  int n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  int dim() const { return num_blocks() - 1; }
  // True when every block of `coarser` is a union of blocks of this Levi.
  bool refines(const Levi& coarser) const;
  std::string key() const;

  auto operator<=>(const Levi&) const = default;

private:
  int n_ = 0;
  std::vector<Block> blocks_;
};

class Parabolic {
public:
  Parabolic() = default;
  Parabolic(int n, std::vector<Block> order);
  static Parabolic from_key(const std::string& key, int n);
  static Parabolic whole(int n);

  int n() const { return n_; }
  const std::vector<Block>& blocks() const { return order_; }
  int num_blocks() const { return static_cast<int>(order_.size()); }
  int dim() const { return num_blocks() - 1; }
  Levi levi() const;
  bool is_whole() const { return order_.size() == 1; }
  // P <= Q: Q's blocks are unions of consecutive runs of P's blocks, in order.
  bool contained_in(const Parabolic& q) const;
  std::string key() const;

  auto operator<=>(const Parabolic&) const = default;

private:
  int n_ = 0;
  std::vector<Block> order_;
};

// Linear form on the ambient space, stored by its Riesz representative.
struct Covector {
  Vec rep;
  Q operator()(const Vec& v) const { return dot(rep, v); }
  bool operator==(const Covector&) const = default;
};

struct RootBases {
  std::vector<Covector> roots;     // Delta_P
  Mat coroots;                     // Delta_P^vee
  std::vector<Covector> weights;   // hat Delta_P, dual to coroots
};

RootBases root_bases(const Parabolic& p);

std::vector<Levi> enumerate_levis(const GroupData& g);

struct ParabolicSets {
  std::vector<Parabolic> minimal;    // P(M) or P^Q(M)
  std::vector<Parabolic> containing; // F(M) or F^Q(M)
};
ParabolicSets parabolics_over(const Levi& m, const std::optional<Parabolic>& q = std::nullopt);
std::vector<Parabolic> minimal_parabolics(const Levi& m);
std::vector<Parabolic> parabolics_containing(const Levi& m);
// Two-block members of F(M).
std::vector<Parabolic> maximal_parabolics(const Levi& m);
std::vector<Levi> levis_containing(const Levi& m);

enum class Part { onto_aP, onto_aTP };
Vec project(const Vec& v, const Parabolic& p, Part part);
Vec project_levi(const Vec& v, const Levi& m);
bool in_a_levi(const Vec& v, const Levi& m);

// Coordinates of v in Delta_P^vee; v must lie in a_P.
std::optional<Vec> coroot_coordinates(const Vec& v, const Parabolic& p);

std::optional<Vec> adjacency_coroot(const Parabolic& p, const Parabolic& pp);
// Chambers sharing a wall: the orders differ by swapping two consecutive blocks.
bool adjacent(const Parabolic& p, const Parabolic& pp);

enum class LatticeKind { full, scnx };
LatticeQ cochar_lattice(const Levi& m, LatticeKind kind);

bool is_general_position(const Vec& xi, const GroupData& g);
// Subset-sum criterion: sum over I of xi_i is never an integer for proper I.
bool general_position_by_subsets(const Vec& xi);

// Set partitions of {0..k-1} as restricted growth strings.
std::vector<std::vector<int>> set_partitions(int k);

}  // namespace hitchin
