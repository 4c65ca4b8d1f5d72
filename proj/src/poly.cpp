#include "simapprox/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "simapprox/errors.hpp"

namespace simapprox {

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<std::complex<double>> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly Poly::from_double(const std::vector<std::complex<double>>& coeffs) {
  std::vector<Complex> out;
  out.reserve(coeffs.size());
  for (auto c : coeffs) out.emplace_back(c);
  return Poly(std::move(out));
}

Poly Poly::monomial(size_t k, Complex c) {
  std::vector<Complex> out(k + 1);
  out[k] = std::move(c);
  return Poly(std::move(out));
}

std::vector<std::complex<double>> Poly::to_double() const {
  std::vector<std::complex<double>> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(simapprox::to_double(c));
  return out;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Complex eval(const Poly& p, const Complex& z) {
  Complex acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Poly add(const Poly& p, const Poly& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Complex> out(std::max(a.size(), b.size()));
  for (size_t k = 0; k < out.size(); ++k) {
    if (k < a.size()) out[k] += a[k];
    if (k < b.size()) out[k] += b[k];
  }
  return Poly(std::move(out));
}

Poly sub(const Poly& p, const Poly& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Complex> out(std::max(a.size(), b.size()));
  for (size_t k = 0; k < out.size(); ++k) {
    if (k < a.size()) out[k] += a[k];
    if (k < b.size()) out[k] -= b[k];
  }
  return Poly(std::move(out));
}

Poly scale(const Poly& p, const Complex& a) {
  std::vector<Complex> out = p.coeffs();
  for (auto& c : out) c *= a;
  return Poly(std::move(out));
}

Poly mul(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Complex> out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return Poly(std::move(out));
}

Poly shift_argument(const Poly& p, const Complex& a) {
  if (a.is_zero() || p.degree() < 1) return p;
  // Scale to a unit shift so the O(d^2) sweep is additions only:
  // with u_k = c_k a^k, p(z + a) = sum_k (u shifted by 1)_k (z/a)^k.
  const size_t n = p.coeffs().size();
  std::vector<Complex> u(p.coeffs());
  Complex power(1.0);
  for (size_t k = 1; k < n; ++k) {
    power *= a;
    u[k] *= power;
  }
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t k = n - 1; k-- > i;) u[k] += u[k + 1];
  }
  const Complex inv = Complex(1.0) / a;
  power = Complex(1.0);
  for (size_t k = 1; k < n; ++k) {
    power *= inv;
    u[k] *= power;
  }
  return Poly(std::move(u));
}

double local_sup_bound(std::span<const Complex> local_coeffs, const Real& radius) {
  Real total = 0;
  Real rk = 1;
  for (const auto& b : local_coeffs) {
    total += abs(b) * rk;
    rk *= radius;
  }
  return to_double_up(total * Real(kBoundSafety));
}

double sup_bound_on_disc(const Poly& p, const Disc& d) {
  const Poly local = shift_argument(p, d.center);
  return local_sup_bound(local.coeffs(), d.radius);
}

std::vector<std::complex<double>> local_double_coeffs(const Poly& p, const Complex& center) {
  return shift_argument(p, center).to_double();
}

std::complex<double> horner(std::span<const std::complex<double>> coeffs, std::complex<double> w) {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * w + *it;
  return acc;
}

double sup_sample_on_disc(const Poly& p, const Disc& d, int n) {
  if (n < 1) throw Error(ErrorCode::Domain, "boundary sampling needs n >= 1");
  if (p.is_zero()) return 0.0;
  const auto local = local_double_coeffs(p, d.center);
  const double r = to_double(d.radius);
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    const std::complex<double> w = std::polar(r, 2.0 * M_PI * i / n);
    best = std::max(best, std::abs(horner(local, w)));
  }
  return best;
}

double sup_sample_mesh(std::span<const std::complex<double>> local, double v, int grid) {
  if (grid < 2) throw Error(ErrorCode::Domain, "sampling mesh needs at least 2 points per axis");
  double worst = 0.0;
  const int ring = 4 * grid;
  for (int i = 0; i < ring; ++i) {
    worst = std::max(worst, std::abs(horner(local, std::polar(v, 2.0 * M_PI * i / ring))));
  }
  for (int a = 0; a < grid; ++a) {
    for (int b = 0; b < grid; ++b) {
      const std::complex<double> w{-v + 2.0 * v * a / (grid - 1), -v + 2.0 * v * b / (grid - 1)};
      if (std::abs(w) > v) continue;
      worst = std::max(worst, std::abs(horner(local, w)));
    }
  }
  return worst;
}

TaylorSplit taylor_split(const Poly& p, const Complex& c, int d) {
  if (d < 1) throw Error(ErrorCode::Domain, "taylor_split needs d >= 1");
  TaylorSplit out;
  out.jet.reserve(static_cast<size_t>(d));
  std::vector<Complex> cur = p.coeffs();
  for (int step = 0; step < d; ++step) {
    if (cur.empty()) {
      out.jet.emplace_back();
      continue;
    }
    // Synthetic division by (z - c): remainder is cur(c).
    std::vector<Complex> quot(cur.size() - 1);
    Complex carry;
    for (size_t k = cur.size(); k-- > 0;) {
      carry *= c;
      carry += cur[k];
      if (k > 0) quot[k - 1] = carry;
    }
    out.jet.push_back(carry);
    cur = std::move(quot);
  }
  out.quotient = Poly(std::move(cur));
  return out;
}

}  // namespace simapprox
