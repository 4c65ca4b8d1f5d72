#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "simapprox/geometry.hpp"
#include "simapprox/poly.hpp"
#include "simapprox/runge.hpp"

namespace simapprox {

/// V_{p_k}(m_s, v, N, n): translates in the first n directions stay within
/// 1/N of p_k on D(0, v).
struct Window {
  int v = 1;
  int N = 1;
  int k = 1;  // 1-based index into the target library
  int n = 2;

  friend bool operator==(const Window&, const Window&) = default;
};

void validate(const Window& w);

namespace magnitude {
struct Naturals {};
struct Arithmetic {
  Real a;
  Real b;
};
struct Power {
  Real p;
};
struct Spiral {};
struct Explicit {
  std::vector<Complex> values;
};
}  // namespace magnitude

/// The sequence (m_s), s = 1, 2, ...
struct MagnitudeSequence {
  std::variant<magnitude::Naturals, magnitude::Arithmetic, magnitude::Power, magnitude::Spiral,
               magnitude::Explicit>
      generator;

  static MagnitudeSequence naturals() { return {magnitude::Naturals{}}; }
  static MagnitudeSequence arithmetic(Real a, Real b) { return {magnitude::Arithmetic{std::move(a), std::move(b)}}; }
  static MagnitudeSequence power(Real p) { return {magnitude::Power{std::move(p)}}; }
  static MagnitudeSequence spiral() { return {magnitude::Spiral{}}; }
  static MagnitudeSequence explicit_list(std::vector<Complex> values) {
    return {magnitude::Explicit{std::move(values)}};
  }
};

Complex magnitude_at(const MagnitudeSequence& seq, long s);

/// Smallest s >= start with |m_s| > threshold, looking at most scan_cap indices.
long scan_witness(const MagnitudeSequence& seq, const Real& threshold, long start, long scan_cap);

using TargetLibrary = std::vector<Poly>;

struct Certificate {
  Window window;
  long witness_s = 0;
  Complex m_value;
  Real v1;         // radius fed to the separation threshold
  Real threshold;  // the legal bound |m_value| had to beat
  double created_bound = 0.0;
  double initial_slack = 0.0;  // 1/(2N)
  double slack = 0.0;
  std::vector<double> deductions;  // one per later step

  /// Discs D(m e^{2 pi i theta_j}, v), j < n.
  std::vector<Disc> discs(const DirectionSet& dirs) const;
};

/// Ordered polynomial increments plus the certificate ledger.
struct SeriesFunction {
  std::vector<Poly> increments;
  std::vector<Certificate> certificates;
  Real protect_radius = 0;
  Real base_radius = 0;
  std::vector<double> tail_caps;
  std::vector<std::vector<int>> orders;  // interpolation orders per step
  std::vector<Disc> reserve;  // slots kept near zero for later windows

  Poly partial_sum() const;
};

enum class Placement {
  Outside,      // new discs beyond everything certified (threshold from the protection radius)
  Interleaved,  // threshold from the window radius, new discs kept clear of existing pieces
};

struct BuildOptions {
  Placement placement = Placement::Interleaved;
  double clearance = 1.5;
  int order_cap = 256;
  long scan_cap = 1000000;
  int escalation_cap = 8;
  ApproxOptions approx{};
  // Reserve slots, laid out at the first step along every configured direction
  // at magnitudes reserve_start + i * reserve_spacing.
  int reserve_slots = 8;
  double reserve_start = 12.0;
  double reserve_spacing = 24.0;
  double reserve_radius = 6.0;
  double reserve_margin = 1.5;  // a window disc D(c, v) fits a slot if |c - slot| + margin v <= slot radius
  double reserve_tolerance = 0.25;  // slots only need the series to stay bounded
};

/// One constructive step. Picks a legal witness and interpolates an increment
/// that stays near zero on the base disc, on every earlier certified disc and
/// on the reserve slots, and carries p_k minus the partial sum on the new
/// translated discs. The increment's bounds are charged against every earlier
/// certificate's slack before the new certificate is appended.
SeriesFunction fix_window(SeriesFunction series, const Window& w, const MagnitudeSequence& seq,
                          const TargetLibrary& targets, const DirectionSet& dirs,
                          const BuildOptions& options = {});

SeriesFunction build(std::span<const Window> schedule, const MagnitudeSequence& seq,
                     const TargetLibrary& targets, const DirectionSet& dirs,
                     const BuildOptions& options = {});

Complex evaluate_series(const SeriesFunction& series, const Complex& z);

struct VerifyResult {
  bool pass = false;
  double measured = 0.0;
  std::vector<double> per_direction;
};

/// Samples |f(z + m e^{2 pi i theta_j}) - p_k(z)| on D(0, v) (grid x grid mesh
/// plus the boundary circle) for each j < n; passes iff every value < 1/N.
VerifyResult verify_certificate(const SeriesFunction& series, const Certificate& cert,
                                const DirectionSet& dirs, const TargetLibrary& targets, int grid);

/// Same check against an explicit function.
VerifyResult verify_certificate(const Poly& f, const Certificate& cert, const DirectionSet& dirs,
                                const TargetLibrary& targets, int grid);

/// First `count` windows of the diagonal enumeration by increasing v+N+k+n,
/// ties broken lexicographically, with 2 <= n <= max_n and k <= max_k.
std::vector<Window> canonical_schedule(size_t count, int max_n, int max_k);

}  // namespace simapprox
