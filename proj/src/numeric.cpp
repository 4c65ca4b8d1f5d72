#include "simapprox/numeric.hpp"

#include <mpfr.h>

#include <regex>
#include <stdexcept>

namespace simapprox {

Complex& Complex::operator/=(const Complex& o) {
  const Real den = o.re * o.re + o.im * o.im;
  if (den == 0) throw std::domain_error("complex division by zero");
  Real r = (re * o.re + im * o.im) / den;
  im = (im * o.re - re * o.im) / den;
  re = std::move(r);
  return *this;
}

Real abs(const Complex& z) { return sqrt(z.re * z.re + z.im * z.im); }

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real pi() { return boost::multiprecision::default_ops::get_constant_pi<Real::backend_type>(); }

Complex polar_unit(const Real& turns) {
  // Exact values on the quarter lattice keep axis-aligned frames exact.
  if (turns == 0) return {Real(1), Real(0)};
  if (turns * 4 == 1) return {Real(0), Real(1)};
  if (turns * 2 == 1) return {Real(-1), Real(0)};
  if (turns * 4 == 3) return {Real(0), Real(-1)};
  const Real angle = 2 * pi() * turns;
  return {cos(angle), sin(angle)};
}

double to_double(const Real& x) { return mpfr_get_d(x.backend().data(), MPFR_RNDN); }

double to_double_up(const Real& x) { return mpfr_get_d(x.backend().data(), MPFR_RNDU); }

std::complex<double> to_double(const Complex& z) { return {to_double(z.re), to_double(z.im)}; }

std::string to_decimal(const Real& x) {
  if (x == 0) return "0";
  mpfr_exp_t exp10 = 0;
  // n = 0 asks MPFR for enough digits to read the value back exactly.
  char* raw = mpfr_get_str(nullptr, &exp10, 10, 0, x.backend().data(), MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (!digits.empty() && digits.front() == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  // Value is 0.<digits> * 10^exp10. Use plain notation when it stays short.
  const long e = static_cast<long>(exp10);
  const long n = static_cast<long>(digits.size());
  if (e > 0 && e <= 21) {
    if (n <= e) return sign + digits + std::string(static_cast<size_t>(e - n), '0');
    return sign + digits.substr(0, static_cast<size_t>(e)) + "." + digits.substr(static_cast<size_t>(e));
  }
  if (e <= 0 && e > -6) {
    return sign + "0." + std::string(static_cast<size_t>(-e), '0') + digits;
  }
  std::string mantissa = digits.substr(0, 1);
  if (n > 1) mantissa += "." + digits.substr(1);
  return sign + mantissa + "e" + std::to_string(e - 1);
}

Real parse_real(const std::string& text) {
  static const std::regex decimal(R"(\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*)");
  static const std::regex rational(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
  std::smatch match;
  if (std::regex_match(text, match, rational)) {
    const Real den(match[2].str());
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Real(match[1].str()) / den;
  }
  if (std::regex_match(text, decimal)) {
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    if (!trimmed.empty() && trimmed.front() == '+') trimmed.erase(0, 1);
    return Real(trimmed);
  }
  throw std::invalid_argument("not a number: '" + text + "'");
}

}  // namespace simapprox
