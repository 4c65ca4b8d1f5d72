#include "simapprox/geometry.hpp"

#include <algorithm>
#include <limits>

#include "simapprox/errors.hpp"

namespace simapprox {

namespace {

void require_pairs(const DirectionSet& dirs) {
  if (dirs.size() < 2) throw Error(ErrorCode::Domain, "direction gap needs at least two directions");
}

}  // namespace

Complex unit_direction(const Real& theta) {
  if (theta < 0 || theta >= 1) {
    throw Error(ErrorCode::Domain, "direction " + to_decimal(theta) + " outside [0, 1)");
  }
  return polar_unit(theta);
}

Direction::Direction(Real theta) : theta_(std::move(theta)), unit_(unit_direction(theta_)) {}

DirectionSet::DirectionSet(std::vector<Direction> dirs) : dirs_(std::move(dirs)) {
  for (size_t a = 0; a < dirs_.size(); ++a) {
    for (size_t b = a + 1; b < dirs_.size(); ++b) {
      if (dirs_[a].theta() == dirs_[b].theta()) {
        throw Error(ErrorCode::Domain, "duplicate direction " + to_decimal(dirs_[a].theta()));
      }
    }
  }
}

DirectionSet DirectionSet::from_turns(std::span<const double> thetas) {
  std::vector<Direction> dirs;
  dirs.reserve(thetas.size());
  for (double t : thetas) dirs.emplace_back(Real(t));
  return DirectionSet(std::move(dirs));
}

DirectionSet DirectionSet::prefix(size_t n) const {
  if (n > dirs_.size()) throw Error(ErrorCode::IndexOutOfRange, "direction prefix longer than set");
  return DirectionSet(std::vector<Direction>(dirs_.begin(), dirs_.begin() + static_cast<long>(n)));
}

Disc::Disc(Complex c, Real r) : center(std::move(c)), radius(std::move(r)) {
  if (!(radius > 0)) throw Error(ErrorCode::Domain, "disc radius must be positive");
}

Real min_pair_gap(const DirectionSet& dirs) {
  require_pairs(dirs);
  Real best = std::numeric_limits<double>::infinity();
  const Real half_turn = pi();
  for (size_t a = 0; a < dirs.size(); ++a) {
    for (size_t b = a + 1; b < dirs.size(); ++b) {
      Real gap = 2 * boost::multiprecision::abs(sin(half_turn * (dirs[a].theta() - dirs[b].theta())));
      if (gap < best) best = gap;
    }
  }
  return best;
}

Real min_pair_gap_direct(const DirectionSet& dirs) {
  require_pairs(dirs);
  Real best = std::numeric_limits<double>::infinity();
  for (size_t a = 0; a < dirs.size(); ++a) {
    for (size_t b = a + 1; b < dirs.size(); ++b) {
      Real gap = abs(dirs[a].unit() * conj(dirs[b].unit()) - Complex(1.0));
      if (gap < best) best = gap;
    }
  }
  return best;
}

Real separation_threshold(const Real& v1, const Real& gap) {
  if (!(v1 > 0) || !(gap > 0)) throw Error(ErrorCode::Domain, "separation threshold needs positive inputs");
  const Real base = 2 * v1;
  const Real spread = base / gap;
  return base > spread ? base : spread;
}

std::vector<Disc> frame_discs(const TranslationFrame& frame) {
  std::vector<Disc> discs;
  discs.reserve(frame.dirs.size() + 1);
  discs.emplace_back(Complex(0.0), frame.v1);
  for (const auto& d : frame.dirs.all()) discs.emplace_back(frame.m * d.unit(), frame.v1);
  return discs;
}

bool discs_pairwise_disjoint(std::span<const Disc> discs) {
  for (size_t i = 0; i < discs.size(); ++i) {
    for (size_t j = i + 1; j < discs.size(); ++j) {
      if (!(abs(discs[i].center - discs[j].center) > discs[i].radius + discs[j].radius)) return false;
    }
  }
  return true;
}

}  // namespace simapprox
