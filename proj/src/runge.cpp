#include "simapprox/runge.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <complex>
#include <limits>

#include "simapprox/errors.hpp"

namespace simapprox {

namespace {

// A jet that reproduces with fewer correct digits than this is reported as
// ill-conditioned; the caller answers by increasing separation.
constexpr double kMinCorrectDigits = 20.0;

std::vector<Disc> discs_of(const std::vector<Piece>& pieces) {
  std::vector<Disc> out;
  out.reserve(pieces.size());
  for (const auto& p : pieces) out.push_back(p.disc);
  return out;
}

struct Recentered {
  Poly q;
  std::vector<Poly> local;  // q recentered at each piece center
  double digits_lost = 0.0;
};

// Divided differences over the node list (c_0 x d_0, c_1 x d_1, ...), then
// expansion of the Newton form into monomials.
Poly newton_interpolate(const Patchwork& patch, std::span<const int> orders) {
  const auto& pieces = patch.pieces();
  std::vector<size_t> owner;
  for (size_t j = 0; j < pieces.size(); ++j) {
    owner.insert(owner.end(), static_cast<size_t>(orders[j]), j);
  }
  const size_t total = owner.size();

  std::vector<Complex> level(total);
  for (size_t i = 0; i < total; ++i) level[i] = pieces[owner[i]].local_target.coeff(0);
  std::vector<Complex> newton;
  newton.reserve(total);
  newton.push_back(level[0]);
  for (size_t span = 1; span < total; ++span) {
    for (size_t i = 0; i + span < total; ++i) {
      const size_t a = owner[i];
      const size_t b = owner[i + span];
      if (a == b) {
        level[i] = pieces[a].local_target.coeff(span);
      } else {
        level[i] = (level[i + 1] - level[i]) / (pieces[b].disc.center - pieces[a].disc.center);
      }
    }
    newton.push_back(level[0]);
  }

  // Q = a_{M-1}; Q <- Q (z - z_k) + a_k.
  std::vector<Complex> q(total);
  size_t len = 0;
  for (size_t k = total; k-- > 0;) {
    const Complex& node = pieces[owner[k]].disc.center;
    if (len > 0) {
      for (size_t i = len; i >= 1; --i) q[i] = q[i - 1] - node * q[i];
      q[0] = -(node * q[0]);
    }
    q[0] += newton[k];
    ++len;
  }
  return Poly(std::move(q));
}

Recentered interpolate_checked(const Patchwork& patch, std::span<const int> orders) {
  const auto& pieces = patch.pieces();
  if (orders.size() != pieces.size()) {
    throw Error(ErrorCode::Domain, "hermite_crt needs one order per piece");
  }
  for (int d : orders) {
    if (d < 1) throw Error(ErrorCode::Domain, "interpolation orders must be >= 1");
  }
  for (size_t a = 0; a < pieces.size(); ++a) {
    for (size_t b = a + 1; b < pieces.size(); ++b) {
      if (pieces[a].disc.center == pieces[b].disc.center) {
        throw Error(ErrorCode::OverlappingDiscs, "two pieces share a center");
      }
    }
  }

  Recentered out;
  out.q = newton_interpolate(patch, orders);
  out.local.reserve(pieces.size());
  double worst = 0.0;
  for (size_t j = 0; j < pieces.size(); ++j) {
    Poly local = shift_argument(out.q, pieces[j].disc.center);
    const Real& r = pieces[j].disc.radius;
    Real mismatch = 0;
    Real scale = 1;
    Real rk = 1;
    for (int k = 0; k < orders[j]; ++k) {
      const auto idx = static_cast<size_t>(k);
      const Complex want = pieces[j].local_target.coeff(idx);
      mismatch = std::max(mismatch, abs(local.coeff(idx) - want) * rk);
      scale += abs(want) * rk;
      rk *= r;
    }
    if (mismatch > 0) {
      worst = std::max(worst, static_cast<double>(kWorkingDigits) + to_double(log10(mismatch / scale)));
    }
    out.local.push_back(std::move(local));
  }
  out.digits_lost = std::max(0.0, worst);
  if (static_cast<double>(kWorkingDigits) - out.digits_lost < kMinCorrectDigits) {
    std::ostringstream msg;
    msg << "jet interpolation lost " << out.digits_lost << " of " << kWorkingDigits << " digits";
    throw Error(ErrorCode::ConditioningFailure, msg.str());
  }
  return out;
}

std::vector<double> bounds_from_local(const Patchwork& patch, const std::vector<Poly>& local) {
  std::vector<double> out;
  out.reserve(local.size());
  for (size_t j = 0; j < local.size(); ++j) {
    const Poly diff = sub(local[j], patch.pieces()[j].local_target);
    out.push_back(local_sup_bound(diff.coeffs(), patch.pieces()[j].disc.radius));
  }
  return out;
}

Poly newton_to_monomial(const std::vector<Complex>& newton, const std::vector<Complex>& nodes) {
  std::vector<Complex> q(newton.size());
  size_t len = 0;
  for (size_t k = newton.size(); k-- > 0;) {
    const Complex& node = nodes[k];
    if (len > 0) {
      for (size_t i = len; i >= 1; --i) q[i] = q[i - 1] - node * q[i];
      q[0] = -(node * q[0]);
    }
    q[0] += newton[k];
    ++len;
  }
  return Poly(std::move(q));
}

std::vector<Complex> target_values(const Patchwork& patch, const LejaNodes& nodes, std::vector<Complex>& z) {
  std::vector<Complex> f;
  z.clear();
  for (size_t p = 0; p < nodes.points.size(); ++p) {
    const auto& piece = patch.pieces()[nodes.owner[p]];
    z.emplace_back(nodes.points[p]);
    f.push_back(eval(piece.local_target, z.back() - piece.disc.center));
  }
  return f;
}

// Largest log(bound / tol) over the pieces.
double worst_excess(const std::vector<double>& bounds, std::span<const double> tols) {
  double worst = -std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < bounds.size(); ++j) worst = std::max(worst, std::log(bounds[j]) - std::log(tols[j]));
  return worst;
}

bool all_below(const std::vector<double>& bounds, std::span<const double> tols) {
  for (size_t j = 0; j < bounds.size(); ++j) {
    if (!(bounds[j] < tols[j])) return false;
  }
  return true;
}

ApproxResult approximate_leja(const Patchwork& patch, std::span<const double> tols, const ApproxOptions& options) {
  const auto& pieces = patch.pieces();
  size_t count = static_cast<size_t>(options.initial_order) * pieces.size();
  double last_max = std::numeric_limits<double>::infinity();
  double prev_log = 0.0;
  size_t prev_count = 0;
  for (int round = 1;; ++round) {
    if (count > static_cast<size_t>(options.order_cap)) {
      std::ostringstream msg;
      msg << "order cap " << options.order_cap << " reached with certified max bound " << last_max
          << " (tolerance exceeded by a factor " << std::exp(prev_log) << ")";
      throw OrderCapExceeded(last_max, msg.str());
    }
    const LejaNodes nodes = leja_nodes(patch, count, options.candidates_per_disc);
    Poly q = leja_interpolant(patch, nodes);

    // Reproduction check at the nodes.
    std::vector<Complex> z;
    const std::vector<Complex> f = target_values(patch, nodes, z);
    Real scale = 0, mismatch = 0;
    for (size_t p = 0; p < z.size(); ++p) {
      scale = std::max(scale, abs(f[p]));
      mismatch = std::max(mismatch, abs(eval(q, z[p]) - f[p]));
    }
    double lost = 0.0;
    if (mismatch > 0 && scale > 0) {
      lost = std::max(0.0, static_cast<double>(kWorkingDigits) + to_double(log10(mismatch / scale)));
    }
    if (static_cast<double>(kWorkingDigits) - lost < kMinCorrectDigits) {
      std::ostringstream msg;
      msg << "interpolation lost " << lost << " of " << kWorkingDigits << " digits";
      throw Error(ErrorCode::ConditioningFailure, msg.str());
    }

    std::vector<double> bounds = certified_error(q, patch);
    last_max = *std::max_element(bounds.begin(), bounds.end());
    if (all_below(bounds, tols)) {
      ApproxResult result;
      result.q = std::move(q);
      result.per_disc_bound = std::move(bounds);
      result.orders.assign(pieces.size(), 0);
      for (size_t o : nodes.owner) ++result.orders[o];
      result.initial_order = options.initial_order;
      result.rounds = round;
      result.digits_lost = lost;
      return result;
    }
    // Next count: extrapolate the observed geometric decay, growing by at
    // least a quarter and at most doubling.
    const double now_log = worst_excess(bounds, tols);
    size_t next = count + std::max<size_t>(4, count / 4);
    if (prev_count > 0 && now_log < prev_log) {
      const double rate = (prev_log - now_log) / static_cast<double>(count - prev_count);
      const double want = static_cast<double>(count) + 1.1 * now_log / rate + 4.0;
      next = std::max(next, static_cast<size_t>(std::min(want, 2.0 * static_cast<double>(count))));
    } else {
      next = std::max(next, count * 3 / 2);
    }
    prev_log = now_log;
    prev_count = count;
    if (count < static_cast<size_t>(options.order_cap) && next > static_cast<size_t>(options.order_cap)) {
      next = static_cast<size_t>(options.order_cap);
    }
    count = next;
  }
}

}  // namespace

LejaNodes leja_nodes(const Patchwork& patch, size_t count, int per_disc) {
  if (per_disc < 1) throw Error(ErrorCode::Domain, "need at least one candidate per disc");
  std::vector<std::complex<double>> cand;
  std::vector<size_t> owner;
  for (size_t j = 0; j < patch.size(); ++j) {
    const auto c = to_double(patch.pieces()[j].disc.center);
    const double r = to_double(patch.pieces()[j].disc.radius);
    for (int p = 0; p < per_disc; ++p) {
      cand.push_back(c + std::polar(r, 2.0 * M_PI * p / per_disc));
      owner.push_back(j);
    }
  }
  if (count > cand.size()) {
    throw Error(ErrorCode::Domain, "more Leja points requested than candidates available");
  }
  LejaNodes out;
  std::vector<double> score(cand.size(), 0.0);
  size_t pick = 0;
  for (size_t i = 1; i < cand.size(); ++i) {
    if (std::abs(cand[i]) > std::abs(cand[pick])) pick = i;
  }
  for (size_t step = 0; step < count; ++step) {
    if (step > 0) {
      pick = cand.size();
      for (size_t i = 0; i < cand.size(); ++i) {
        if (std::isinf(score[i]) && score[i] < 0) continue;
        if (pick == cand.size() || score[i] > score[pick]) pick = i;
      }
    }
    out.points.push_back(cand[pick]);
    out.owner.push_back(owner[pick]);
    for (size_t i = 0; i < cand.size(); ++i) score[i] += std::log(std::abs(cand[i] - cand[pick]));
  }
  return out;
}

Poly leja_interpolant(const Patchwork& patch, const LejaNodes& nodes) {
  if (nodes.points.empty()) return {};
  std::vector<Complex> z;
  std::vector<Complex> level = target_values(patch, nodes, z);
  std::vector<Complex> newton;
  newton.reserve(z.size());
  newton.push_back(level[0]);
  for (size_t span = 1; span < z.size(); ++span) {
    for (size_t i = 0; i + span < z.size(); ++i) {
      level[i] = (level[i + 1] - level[i]) / (z[i + span] - z[i]);
    }
    newton.push_back(level[0]);
  }
  return newton_to_monomial(newton, z);
}

Patchwork::Patchwork(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw Error(ErrorCode::Domain, "a patchwork needs at least one piece");
  if (!discs_pairwise_disjoint(discs_of(pieces_))) {
    throw Error(ErrorCode::OverlappingDiscs, "patchwork discs are not pairwise disjoint");
  }
}

Patchwork build_patchwork(const Poly& h, const Poly& g, const TranslationFrame& frame) {
  const auto discs = frame_discs(frame);
  std::vector<Piece> pieces;
  pieces.reserve(discs.size());
  pieces.push_back({discs[0], h});
  for (size_t j = 1; j < discs.size(); ++j) pieces.push_back({discs[j], g});
  return Patchwork(std::move(pieces));
}

Poly hermite_crt(const Patchwork& patch, std::span<const int> orders) {
  return interpolate_checked(patch, orders).q;
}

std::vector<double> certified_error(const Poly& q, const Patchwork& patch) {
  std::vector<Poly> local;
  local.reserve(patch.size());
  for (const auto& piece : patch.pieces()) local.push_back(shift_argument(q, piece.disc.center));
  return bounds_from_local(patch, local);
}

double ApproxResult::max_bound() const {
  return per_disc_bound.empty() ? 0.0 : *std::max_element(per_disc_bound.begin(), per_disc_bound.end());
}

ApproxResult approximate(const Patchwork& patch, double tol, const ApproxOptions& options) {
  const std::vector<double> tols(patch.size(), tol);
  return approximate(patch, tols, options);
}

ApproxResult approximate(const Patchwork& patch, std::span<const double> tols, const ApproxOptions& options) {
  if (tols.size() != patch.size()) throw Error(ErrorCode::Domain, "need one tolerance per piece");
  for (double t : tols) {
    if (!(t > 0)) throw Error(ErrorCode::Domain, "approximation tolerance must be positive");
  }
  if (options.initial_order < 1) throw Error(ErrorCode::Domain, "initial order must be >= 1");
  if (options.nodes == Nodes::BoundaryLeja) return approximate_leja(patch, tols, options);

  std::vector<int> orders(patch.size(), options.initial_order);
  double last_max = std::numeric_limits<double>::infinity();
  for (int round = 1;; ++round) {
    const int total = std::accumulate(orders.begin(), orders.end(), 0);
    if (total > options.order_cap) {
      std::ostringstream msg;
      msg << "order cap " << options.order_cap << " reached with certified max bound " << last_max
          << " above tolerance";
      throw OrderCapExceeded(last_max, msg.str());
    }
    Recentered fit = interpolate_checked(patch, orders);
    std::vector<double> bounds = bounds_from_local(patch, fit.local);
    last_max = *std::max_element(bounds.begin(), bounds.end());
    if (all_below(bounds, tols)) {
      ApproxResult result;
      result.q = std::move(fit.q);
      result.per_disc_bound = std::move(bounds);
      result.orders = std::move(orders);
      result.initial_order = options.initial_order;
      result.rounds = round;
      result.digits_lost = fit.digits_lost;
      return result;
    }
    for (size_t j = 0; j < orders.size(); ++j) {
      if (options.escalation == Escalation::Uniform || !(bounds[j] < tols[j])) orders[j] *= 2;
    }
  }
}

}  // namespace simapprox
