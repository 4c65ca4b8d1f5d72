#pragma once

#include <span>
#include <vector>

#include "simapprox/numeric.hpp"

namespace simapprox {

/// A translation direction e^{2 pi i theta}, theta in turns.
class Direction {
 public:
  explicit Direction(Real theta);

  const Real& theta() const { return theta_; }
  const Complex& unit() const { return unit_; }

 private:
  Real theta_;
  Complex unit_;
};

/// Ordered, pairwise-distinct directions. Index j (0-based) plays the role of
/// the (j+1)-th direction of the prefix T_n.
class DirectionSet {
 public:
  DirectionSet() = default;
  explicit DirectionSet(std::vector<Direction> dirs);
  static DirectionSet from_turns(std::span<const double> thetas);

  size_t size() const { return dirs_.size(); }
  const Direction& operator[](size_t j) const { return dirs_[j]; }
  const std::vector<Direction>& all() const { return dirs_; }
  DirectionSet prefix(size_t n) const;

 private:
  std::vector<Direction> dirs_;
};

struct Disc {
  Complex center;
  Real radius;

  Disc(Complex c, Real r);
};

struct TranslationFrame {
  Real v1;
  Complex m;
  DirectionSet dirs;
};

Complex unit_direction(const Real& theta);

/// min over pairs of 2|sin(pi (theta_a - theta_b))|.
Real min_pair_gap(const DirectionSet& dirs);
/// Same quantity through |e^{2 pi i (theta_a - theta_b)} - 1|.
Real min_pair_gap_direct(const DirectionSet& dirs);

/// max(2 v1, 2 v1 / gap): any |m| strictly above it separates the frame discs.
Real separation_threshold(const Real& v1, const Real& gap);

/// D(0, v1) followed by D(m e^{2 pi i theta_j}, v1) in direction order.
std::vector<Disc> frame_discs(const TranslationFrame& frame);

/// Closed discs: tangency counts as intersecting.
bool discs_pairwise_disjoint(std::span<const Disc> discs);

}  // namespace simapprox
