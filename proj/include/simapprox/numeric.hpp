#pragma once

#include <complex>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

namespace simapprox {

// Working precision in decimal digits. Far translates of a partial sum are
// evaluated at points where the monomial coefficients carry hundreds of
// orders of magnitude of cancellation, so binary64 is not enough.
#ifndef SIMAPPROX_WORKING_DIGITS
#define SIMAPPROX_WORKING_DIGITS 300
#endif
inline constexpr unsigned kWorkingDigits = SIMAPPROX_WORKING_DIGITS;

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<kWorkingDigits>,
    boost::multiprecision::et_off>;

/// Complex number over the working-precision real type.
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r) : re(r) {}  // NOLINT(google-explicit-constructor)
  Complex(double r, double i) : re(r), im(i) {}
  explicit Complex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  bool is_zero() const { return re == 0 && im == 0; }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const Real& s) { return a *= s; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Complex conj(const Complex& z);
Complex polar_unit(const Real& turns);  // e^{2 pi i turns}

std::complex<double> to_double(const Complex& z);
double to_double(const Real& x);
/// Nearest binary64 at or above x (used when handing certified bounds out).
double to_double_up(const Real& x);

Real pi();

/// Round-trip decimal text for a working-precision real.
std::string to_decimal(const Real& x);
/// Parses a decimal (or "p/q" rational) string. Throws std::invalid_argument.
Real parse_real(const std::string& text);

}  // namespace simapprox
