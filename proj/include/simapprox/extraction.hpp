#pragma once

#include <vector>

#include "simapprox/builder.hpp"

namespace simapprox {

struct ExtractionEntry {
  int n = 2;
  long s = 0;  // shared witness for every direction j < n
  int k = 1;
  Complex m_value;
  double window_bound = 0.0;     // ledger: created bound plus later deductions
  double target_distance = 0.0;  // certified sup of |g - p_k| on D(0, n)
  double certified = 0.0;        // the sum, < 1/n
  bool asserted = false;         // distance supplied by the caller, not certified
};

struct ExtractionResult {
  std::vector<ExtractionEntry> entries;
  Poly g;
};

/// For n = 2..horizon: the smallest k with sup_{D(0,n)} |g - p_k| < 1/(2n)
/// (certified), and the ledger's certificate for the window (n, 2n, k, n).
/// Throws NoCloseTarget or MissingWindow.
ExtractionResult extract_common_indices(const SeriesFunction& series, const TargetLibrary& targets,
                                        const Poly& g, int horizon, const DirectionSet& dirs);

/// Escape hatch for a g that is not a polynomial: the caller asserts
/// sup_{D(0,n)} |g - p_k| <= distance at every level. Entries are flagged.
ExtractionResult extract_asserted(const SeriesFunction& series, int k, double distance, int horizon);

/// Ledger bound for a certificate: created bound plus every later deduction.
double ledger_bound(const Certificate& cert);

/// Grid re-measurement of sup_{|z|<=n} |f(z + m_s e^{2 pi i theta_j}) - g(z)|
/// over j < n, for one extraction entry.
double remeasure(const Poly& f, const ExtractionEntry& entry, const Poly& g, const DirectionSet& dirs,
                 int grid);

struct ProbeResult {
  long best_s = 0;
  double best_sup = 0.0;
};

/// Scans s = 1..s_max and returns the s minimising the sampled sup over
/// D(0, v) of |f(z + m_s unit(a)) - g(z)| (101 x 101 mesh). Smallest s wins
/// ties. Explicit lists stop at their end.
ProbeResult density_probe(const Poly& f, const Direction& a, const MagnitudeSequence& seq, const Poly& g,
                          int v, long s_max);

}  // namespace simapprox
