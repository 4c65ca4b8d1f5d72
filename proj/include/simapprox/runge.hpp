#pragma once

#include <complex>
#include <span>
#include <vector>

#include "simapprox/geometry.hpp"
#include "simapprox/poly.hpp"

namespace simapprox {

/// One disc of the compact set L and the polynomial the approximant must
/// follow there, written in the local coordinate w = z - disc.center.
struct Piece {
  Disc disc;
  Poly local_target;
};

/// Piecewise target on pairwise disjoint closed discs.
class Patchwork {
 public:
  explicit Patchwork(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  size_t size() const { return pieces_.size(); }

 private:
  std::vector<Piece> pieces_;
};

/// Base disc D(0, v1) carries h; the j-th translated disc carries g, which in
/// its local coordinate is g itself.
Patchwork build_patchwork(const Poly& h, const Poly& g, const TranslationFrame& frame);

/// The unique polynomial of degree < sum(orders) whose Taylor jet of length
/// orders[j] at each center matches the local target's. Built by confluent
/// divided differences in Newton form.
Poly hermite_crt(const Patchwork& patch, std::span<const int> orders);

/// Per-piece certified sup bounds of q minus the local target.
std::vector<double> certified_error(const Poly& q, const Patchwork& patch);

enum class Escalation {
  Uniform,        // double every order while any piece fails
  FailingPieces,  // double only the orders of pieces at or above tolerance
};

enum class Nodes {
  CenterJets,    // Taylor jets at the disc centers (hermite_crt)
  BoundaryLeja,  // values at discrete Leja points on the disc boundaries
};

struct ApproxOptions {
  int initial_order = 4;
  int order_cap = 256;  // bound on the total degree sum(orders)
  Escalation escalation = Escalation::FailingPieces;
  Nodes nodes = Nodes::BoundaryLeja;
  int candidates_per_disc = 128;  // boundary samples the Leja points are drawn from
};

/// First `count` points of the discrete Leja sequence drawn from
/// `per_disc` equispaced points on every disc boundary, with the piece each
/// point belongs to. Starts from the candidate of largest modulus.
struct LejaNodes {
  std::vector<std::complex<double>> points;
  std::vector<size_t> owner;
};
LejaNodes leja_nodes(const Patchwork& patch, size_t count, int per_disc);

/// Newton interpolant of the piecewise target at the given nodes.
Poly leja_interpolant(const Patchwork& patch, const LejaNodes& nodes);

struct ApproxResult {
  Poly q;
  std::vector<double> per_disc_bound;
  std::vector<int> orders;
  int initial_order = 4;
  int rounds = 0;
  /// Largest scaled jet mismatch seen, as decimal digits lost from the
  /// working precision.
  double digits_lost = 0.0;

  double max_bound() const;
};

/// Raise orders (center jets) or the node count (Leja) until every certified
/// per-piece bound is below tol. For Leja nodes, orders[j] counts the nodes
/// on piece j.
/// Throws OrderCapExceeded, or Error(ConditioningFailure).
ApproxResult approximate(const Patchwork& patch, double tol, const ApproxOptions& options = {});

/// Same with a separate tolerance for every piece.
ApproxResult approximate(const Patchwork& patch, std::span<const double> tols, const ApproxOptions& options = {});

}  // namespace simapprox
