#include "simapprox/builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "simapprox/errors.hpp"

namespace simapprox {

void validate(const Window& w) {
  if (w.v < 1 || w.N < 1 || w.k < 1 || w.n < 2) {
    std::ostringstream msg;
    msg << "invalid window (v=" << w.v << ", N=" << w.N << ", k=" << w.k << ", n=" << w.n
        << "): need v, N, k >= 1 and n >= 2";
    throw Error(ErrorCode::Domain, msg.str());
  }
}

Complex magnitude_at(const MagnitudeSequence& seq, long s) {
  if (s < 1) throw Error(ErrorCode::IndexOutOfRange, "magnitude index must be >= 1");
  const Real index(s);
  return std::visit(
      [&](const auto& gen) -> Complex {
        using G = std::decay_t<decltype(gen)>;
        if constexpr (std::is_same_v<G, magnitude::Naturals>) {
          return Complex(index);
        } else if constexpr (std::is_same_v<G, magnitude::Arithmetic>) {
          return Complex(gen.a + gen.b * index);
        } else if constexpr (std::is_same_v<G, magnitude::Power>) {
          return Complex(Real(pow(index, gen.p)));
        } else if constexpr (std::is_same_v<G, magnitude::Spiral>) {
          return {index * cos(index), index * sin(index)};
        } else {
          if (static_cast<size_t>(s) > gen.values.size()) {
            throw Error(ErrorCode::IndexOutOfRange, "magnitude index " + std::to_string(s) +
                                                        " beyond explicit list of " +
                                                        std::to_string(gen.values.size()));
          }
          return gen.values[static_cast<size_t>(s - 1)];
        }
      },
      seq.generator);
}

long scan_witness(const MagnitudeSequence& seq, const Real& threshold, long start, long scan_cap) {
  if (threshold < 0) throw Error(ErrorCode::Domain, "scan threshold must be nonnegative");
  if (start < 1) throw Error(ErrorCode::Domain, "scan start must be >= 1");
  const auto* list = std::get_if<magnitude::Explicit>(&seq.generator);
  for (long s = start; s - start < scan_cap; ++s) {
    if (list && static_cast<size_t>(s) > list->values.size()) break;
    if (abs(magnitude_at(seq, s)) > threshold) return s;
  }
  throw Error(ErrorCode::ScanExhausted,
              "no magnitude above " + to_decimal(threshold) + " from index " + std::to_string(start));
}

std::vector<Disc> Certificate::discs(const DirectionSet& dirs) const {
  std::vector<Disc> out;
  out.reserve(static_cast<size_t>(window.n));
  for (int j = 0; j < window.n; ++j) {
    out.emplace_back(m_value * dirs[static_cast<size_t>(j)].unit(), Real(window.v));
  }
  return out;
}

Poly SeriesFunction::partial_sum() const {
  Poly total;
  for (const auto& q : increments) total = add(total, q);
  return total;
}

namespace {

struct Attempt {
  long witness = 0;
  Complex m;
  Real threshold;
  ApproxResult result;
  size_t first_new_piece = 0;
  std::vector<Disc> reserve;
};

// Residual form: the increment must vanish on the base disc and on every
// earlier certified disc, and must carry g - h on the new translated discs.
Patchwork residual_patchwork(const Poly& h, const Poly& g, const SeriesFunction& series,
                             const DirectionSet& dirs, const Real& base_radius,
                             const std::vector<Disc>& reserve, const std::vector<Disc>& fresh) {
  std::vector<Piece> pieces;
  pieces.push_back({Disc(Complex(0.0), base_radius), Poly{}});
  for (const auto& cert : series.certificates) {
    for (auto& d : cert.discs(dirs)) pieces.push_back({std::move(d), Poly{}});
  }
  for (const auto& d : reserve) pieces.push_back({d, Poly{}});
  for (const auto& d : fresh) pieces.push_back({d, sub(g, shift_argument(h, d.center))});
  return Patchwork(std::move(pieces));
}

// Every new disc keeps center distance >= clearance * (r_a + r_b) from every
// existing piece and from the other new discs.
bool clear_of(const std::vector<Disc>& existing, const std::vector<Disc>& fresh, double clearance) {
  const Real factor(clearance);
  auto apart = [&](const Disc& a, const Disc& b) {
    return abs(a.center - b.center) > factor * (a.radius + b.radius);
  };
  for (size_t i = 0; i < fresh.size(); ++i) {
    for (const auto& e : existing) {
      if (!apart(fresh[i], e)) return false;
    }
    for (size_t j = i + 1; j < fresh.size(); ++j) {
      if (!apart(fresh[i], fresh[j])) return false;
    }
  }
  return true;
}

}  // namespace

SeriesFunction fix_window(SeriesFunction series, const Window& w, const MagnitudeSequence& seq,
                          const TargetLibrary& targets, const DirectionSet& dirs,
                          const BuildOptions& options) {
  validate(w);
  if (static_cast<size_t>(w.n) > dirs.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "window uses " + std::to_string(w.n) + " directions but only " +
                                                std::to_string(dirs.size()) + " are configured");
  }
  if (static_cast<size_t>(w.k) > targets.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "window target " + std::to_string(w.k) +
                                                " outside library of " + std::to_string(targets.size()));
  }
  const size_t step = series.increments.size() + 1;
  const Poly h = series.partial_sum();
  const Poly& g = targets[static_cast<size_t>(w.k - 1)];

  const Real v1 = options.placement == Placement::Outside
                      ? std::max(Real(w.v), Real(ceil(series.protect_radius)))
                      : Real(w.v);
  const Real base_radius = std::max(series.base_radius, Real(w.v));

  double slack_min = std::numeric_limits<double>::infinity();
  for (const auto& c : series.certificates) slack_min = std::min(slack_min, c.slack);
  const double eps = std::min(std::ldexp(1.0, -static_cast<int>(step)), slack_min / 2);
  if (!(eps > 0)) throw Error(ErrorCode::SlackDepleted, "tail cap would be non-positive");
  const double tol = std::min(eps, 1.0 / (2.0 * w.N));

  const DirectionSet used = dirs.prefix(static_cast<size_t>(w.n));
  Real threshold = separation_threshold(v1, min_pair_gap(used));

  ApproxOptions approx = options.approx;
  approx.order_cap = options.order_cap;

  std::vector<Disc> existing{Disc(Complex(0.0), base_radius)};
  for (const auto& c : series.certificates) {
    for (auto& d : c.discs(dirs)) existing.push_back(std::move(d));
  }

  // Slots are laid out once, before anything is certified; a slot the base
  // disc has grown into is dropped.
  std::vector<Disc> reserve;
  if (series.increments.empty()) {
    for (int i = 0; i < options.reserve_slots; ++i) {
      const Real mag(options.reserve_start + i * options.reserve_spacing);
      for (const auto& d : dirs.all()) reserve.emplace_back(mag * d.unit(), Real(options.reserve_radius));
    }
  } else {
    reserve = series.reserve;
  }
  std::erase_if(reserve, [&](const Disc& d) { return abs(d.center) - d.radius <= base_radius; });
  Real reach = 0;
  for (const auto& d : reserve) reach = std::max(reach, abs(d.center) + d.radius);

  std::optional<Attempt> found;
  std::string last_failure;
  for (int escalation = 0; escalation <= options.escalation_cap && !found; ++escalation) {
    Attempt attempt;
    attempt.threshold = threshold;
    std::vector<Disc> fresh;
    for (long start = 1;;) {
      attempt.witness = scan_witness(seq, threshold, start, options.scan_cap);
      attempt.m = magnitude_at(seq, attempt.witness);
      fresh.clear();
      for (const auto& d : used.all()) fresh.emplace_back(attempt.m * d.unit(), Real(w.v));
      start = attempt.witness + 1;
      if (abs(attempt.m) <= reach) {
        // Inside the slot range only a witness whose discs all sit in slots is taken.
        std::vector<bool> taken(reserve.size(), false);
        bool fits = true;
        for (const auto& f : fresh) {
          size_t hit = reserve.size();
          for (size_t i = 0; i < reserve.size() && hit == reserve.size(); ++i) {
            if (!taken[i] && abs(f.center - reserve[i].center) + Real(options.reserve_margin) * f.radius <=
                                  reserve[i].radius) {
              hit = i;
            }
          }
          if (hit == reserve.size()) {
            fits = false;
            break;
          }
          taken[hit] = true;
        }
        if (!fits) continue;
        // Slots at the magnitude just used can no longer host a whole window.
        attempt.reserve.clear();
        for (size_t i = 0; i < reserve.size(); ++i) {
          if (!taken[i] && abs(abs(reserve[i].center) - abs(attempt.m)) >= reserve[i].radius) {
            attempt.reserve.push_back(reserve[i]);
          }
        }
      } else {
        attempt.reserve = reserve;
      }
      std::vector<Disc> others = existing;
      others.insert(others.end(), attempt.reserve.begin(), attempt.reserve.end());
      if (clear_of(others, fresh, options.clearance)) break;
    }
    const Patchwork patch = residual_patchwork(h, g, series, dirs, base_radius, attempt.reserve, fresh);
    attempt.first_new_piece = patch.size() - fresh.size();
    try {
      std::vector<double> tols(patch.size(), tol);
      for (size_t i = 0; i < attempt.reserve.size(); ++i) tols[attempt.first_new_piece - 1 - i] = options.reserve_tolerance;
      attempt.result = approximate(patch, tols, approx);
      found = std::move(attempt);
    } catch (const OrderCapExceeded& e) {
      last_failure = e.what();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConditioningFailure) throw;
      last_failure = e.what();
    }
    threshold *= 2;
  }
  if (!found) {
    std::ostringstream msg;
    msg << "window (v=" << w.v << ", N=" << w.N << ", k=" << w.k << ", n=" << w.n << ") failed after "
        << options.escalation_cap << " magnitude escalations: " << last_failure;
    throw OrderCapExceeded(found ? 0.0 : std::numeric_limits<double>::infinity(), msg.str());
  }

  const auto& bounds = found->result.per_disc_bound;
  // Piece 0 is the base disc; earlier certificates follow in ledger order.
  size_t piece = 1;
  for (auto& cert : series.certificates) {
    double charge = 0.0;
    for (int j = 0; j < cert.window.n; ++j) charge = std::max(charge, bounds[piece++]);
    if (charge > cert.slack) throw Error(ErrorCode::SlackDepleted, "increment exceeds a certificate's slack");
    cert.slack -= charge;
    cert.deductions.push_back(charge);
  }

  Certificate cert;
  cert.window = w;
  cert.witness_s = found->witness;
  cert.m_value = found->m;
  cert.v1 = v1;
  cert.threshold = found->threshold;
  cert.created_bound = *std::max_element(bounds.begin() + static_cast<long>(found->first_new_piece), bounds.end());
  cert.initial_slack = 1.0 / (2.0 * w.N);
  cert.slack = cert.initial_slack;

  series.increments.push_back(found->result.q);
  series.tail_caps.push_back(eps);
  series.orders.push_back(found->result.orders);
  series.protect_radius = std::max(series.protect_radius, Real(abs(found->m) + w.v));
  series.base_radius = base_radius;
  series.reserve = std::move(found->reserve);
  series.certificates.push_back(std::move(cert));
  return series;
}

SeriesFunction build(std::span<const Window> schedule, const MagnitudeSequence& seq,
                     const TargetLibrary& targets, const DirectionSet& dirs,
                     const BuildOptions& options) {
  SeriesFunction series;
  for (const auto& w : schedule) series = fix_window(std::move(series), w, seq, targets, dirs, options);
  return series;
}

Complex evaluate_series(const SeriesFunction& series, const Complex& z) {
  Complex total;
  for (const auto& q : series.increments) total += eval(q, z);
  return total;
}

VerifyResult verify_certificate(const Poly& f, const Certificate& cert, const DirectionSet& dirs,
                                const TargetLibrary& targets, int grid) {
  if (grid < 2) throw Error(ErrorCode::Domain, "verification grid needs at least 2 points per axis");
  if (static_cast<size_t>(cert.window.k) > targets.size() || cert.window.k < 1) {
    throw Error(ErrorCode::IndexOutOfRange, "certificate target outside library");
  }
  if (static_cast<size_t>(cert.window.n) > dirs.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "certificate uses more directions than configured");
  }
  const Poly& target = targets[static_cast<size_t>(cert.window.k - 1)];
  const double v = cert.window.v;
  VerifyResult out;
  for (int j = 0; j < cert.window.n; ++j) {
    const Complex center = cert.m_value * dirs[static_cast<size_t>(j)].unit();
    // f(w + c) - p_k(w) in the local coordinate, then sampled in binary64.
    const auto local = local_double_coeffs(sub(shift_argument(f, center), target), Complex(0.0));
    const double worst = sup_sample_mesh(local, v, grid);
    out.per_direction.push_back(worst);
    out.measured = std::max(out.measured, worst);
  }
  out.pass = out.measured < 1.0 / cert.window.N;
  return out;
}

VerifyResult verify_certificate(const SeriesFunction& series, const Certificate& cert,
                                const DirectionSet& dirs, const TargetLibrary& targets, int grid) {
  return verify_certificate(series.partial_sum(), cert, dirs, targets, grid);
}

std::vector<Window> canonical_schedule(size_t count, int max_n, int max_k) {
  std::vector<Window> out;
  if (count == 0) return out;
  if (max_n < 2 || max_k < 1) throw Error(ErrorCode::Domain, "canonical schedule needs n >= 2 and k >= 1 available");
  for (int total = 5; out.size() < count; ++total) {
    for (int v = 1; v <= total && out.size() < count; ++v) {
      for (int N = 1; v + N <= total && out.size() < count; ++N) {
        for (int k = 1; k <= max_k && v + N + k <= total && out.size() < count; ++k) {
          const int n = total - v - N - k;
          if (n >= 2 && n <= max_n) out.push_back({v, N, k, n});
        }
      }
    }
  }
  return out;
}

}  // namespace simapprox
