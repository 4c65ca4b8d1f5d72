#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "simapprox/geometry.hpp"
#include "simapprox/numeric.hpp"

namespace simapprox {

/// Complex polynomial c_0 + c_1 z + ... + c_d z^d. Trailing exact zeros are
/// trimmed, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Complex> coeffs);
  Poly(std::initializer_list<std::complex<double>> coeffs);
  static Poly from_double(const std::vector<std::complex<double>>& coeffs);
  static Poly monomial(size_t k, Complex c = Complex(1.0));

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Complex coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Complex(); }
  std::vector<std::complex<double>> to_double() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

Complex eval(const Poly& p, const Complex& z);
Poly add(const Poly& p, const Poly& q);
Poly sub(const Poly& p, const Poly& q);
Poly scale(const Poly& p, const Complex& a);
Poly mul(const Poly& p, const Poly& q);

/// q(z) = p(z + a).
Poly shift_argument(const Poly& p, const Complex& a);

/// Sum_k |b_k| r^k for the coefficients b of p recentered at d.center,
/// inflated by kBoundSafety. A rigorous upper bound for sup_{z in d} |p(z)|.
double sup_bound_on_disc(const Poly& p, const Disc& d);
/// Same bound for a polynomial already expressed in the disc's local coordinate.
double local_sup_bound(std::span<const Complex> local_coeffs, const Real& radius);

inline constexpr double kBoundSafety = 1.0 + 1e-9;

/// max |p| over n equispaced points on the boundary circle of d.
double sup_sample_on_disc(const Poly& p, const Disc& d, int n);

struct TaylorSplit {
  std::vector<Complex> jet;  // d Taylor coefficients at c
  Poly quotient;
};

/// p(z) = sum_{k<d} jet_k (z-c)^k + (z-c)^d quotient(z).
TaylorSplit taylor_split(const Poly& p, const Complex& c, int d);

/// Coefficients of a polynomial recentered at a disc center, rounded to binary64.
/// On a small disc these are well scaled even when the global ones are not.
std::vector<std::complex<double>> local_double_coeffs(const Poly& p, const Complex& center);

std::complex<double> horner(std::span<const std::complex<double>> coeffs, std::complex<double> w);

/// max |p(w)| over the grid x grid mesh of [-v, v]^2 clipped to |w| <= v,
/// plus 4 grid points on the circle |w| = v. p is given by local coefficients.
double sup_sample_mesh(std::span<const std::complex<double>> local, double v, int grid);

}  // namespace simapprox
