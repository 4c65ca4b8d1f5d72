#include "simapprox/extraction.hpp"

#include <limits>
#include <numeric>

#include "simapprox/errors.hpp"

namespace simapprox {

namespace {

const Certificate* find_window(const SeriesFunction& series, const Window& want) {
  for (const auto& c : series.certificates) {
    if (c.window == want) return &c;
  }
  return nullptr;
}

void check_horizon(int horizon) {
  if (horizon < 2) throw Error(ErrorCode::Domain, "extraction horizon must be >= 2");
}

}  // namespace

double ledger_bound(const Certificate& cert) {
  return std::accumulate(cert.deductions.begin(), cert.deductions.end(), cert.created_bound);
}

ExtractionResult extract_common_indices(const SeriesFunction& series, const TargetLibrary& targets,
                                        const Poly& g, int horizon, const DirectionSet& dirs) {
  check_horizon(horizon);
  if (static_cast<size_t>(horizon) > dirs.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "horizon " + std::to_string(horizon) + " needs that many directions");
  }
  ExtractionResult out;
  out.g = g;
  for (int n = 2; n <= horizon; ++n) {
    const Disc level(Complex(0.0), Real(n));
    const double half = 1.0 / (2.0 * n);
    int pick = 0;
    double distance = 0.0;
    for (size_t k = 0; k < targets.size() && pick == 0; ++k) {
      const double d = sup_bound_on_disc(sub(g, targets[k]), level);
      if (d < half) {
        pick = static_cast<int>(k) + 1;
        distance = d;
      }
    }
    if (pick == 0) throw NoCloseTarget(n);
    const Certificate* cert = find_window(series, {n, 2 * n, pick, n});
    if (!cert) throw MissingWindow(n, pick);

    ExtractionEntry e;
    e.n = n;
    e.s = cert->witness_s;
    e.k = pick;
    e.m_value = cert->m_value;
    e.window_bound = ledger_bound(*cert);
    e.target_distance = distance;
    e.certified = e.window_bound + distance;
    out.entries.push_back(e);
  }
  return out;
}

ExtractionResult extract_asserted(const SeriesFunction& series, int k, double distance, int horizon) {
  check_horizon(horizon);
  if (!(distance >= 0)) throw Error(ErrorCode::Domain, "asserted distance must be nonnegative");
  ExtractionResult out;
  for (int n = 2; n <= horizon; ++n) {
    if (!(distance < 1.0 / (2.0 * n))) throw NoCloseTarget(n);
    const Certificate* cert = find_window(series, {n, 2 * n, k, n});
    if (!cert) throw MissingWindow(n, k);
    ExtractionEntry e;
    e.n = n;
    e.s = cert->witness_s;
    e.k = k;
    e.m_value = cert->m_value;
    e.window_bound = ledger_bound(*cert);
    e.target_distance = distance;
    e.certified = e.window_bound + distance;
    e.asserted = true;
    out.entries.push_back(e);
  }
  return out;
}

double remeasure(const Poly& f, const ExtractionEntry& entry, const Poly& g, const DirectionSet& dirs, int grid) {
  double worst = 0.0;
  for (int j = 0; j < entry.n; ++j) {
    const Complex center = entry.m_value * dirs[static_cast<size_t>(j)].unit();
    const auto local = local_double_coeffs(sub(shift_argument(f, center), g), Complex(0.0));
    worst = std::max(worst, sup_sample_mesh(local, entry.n, grid));
  }
  return worst;
}

ProbeResult density_probe(const Poly& f, const Direction& a, const MagnitudeSequence& seq, const Poly& g,
                          int v, long s_max) {
  if (s_max < 1) throw Error(ErrorCode::Domain, "density_probe needs s_max >= 1");
  if (v < 1) throw Error(ErrorCode::Domain, "density_probe needs v >= 1");
  long last = s_max;
  if (const auto* list = std::get_if<magnitude::Explicit>(&seq.generator)) {
    last = std::min<long>(last, static_cast<long>(list->values.size()));
  }
  ProbeResult best{0, std::numeric_limits<double>::infinity()};
  for (long s = 1; s <= last; ++s) {
    const Complex center = magnitude_at(seq, s) * a.unit();
    const auto local = local_double_coeffs(sub(shift_argument(f, center), g), Complex(0.0));
    const double sup = sup_sample_mesh(local, v, 101);
    if (sup < best.best_sup) best = {s, sup};
  }
  return best;
}

}  // namespace simapprox
