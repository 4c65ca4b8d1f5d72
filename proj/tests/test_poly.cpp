#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "simapprox/poly.hpp"

using namespace simapprox;
using cd = std::complex<double>;

namespace {

cd dz(const Complex& z) { return to_double(z); }

Poly random_poly(std::mt19937_64& rng, int degree) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<cd> c;
  for (int k = 0; k <= degree; ++k) c.emplace_back(n(rng), n(rng));
  return Poly::from_double(c);
}

double max_rel_diff(const Poly& a, const Poly& b) {
  double scale = 0, diff = 0;
  const size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  for (size_t k = 0; k < n; ++k) {
    scale = std::max(scale, std::abs(dz(a.coeff(k))));
    diff = std::max(diff, std::abs(dz(a.coeff(k) - b.coeff(k))));
  }
  return scale == 0 ? diff : diff / scale;
}

}  // namespace

TEST_CASE("eval examples") {
  CHECK(dz(eval(Poly{1, 0, 1}, Complex(0.0, 2.0))) == cd(-3, 0));
  CHECK(dz(eval(Poly{}, Complex(5.0, 1.0))) == cd(0, 0));
  CHECK(dz(eval(Poly{1, 1}, Complex(1.0))) == cd(2, 0));
}

TEST_CASE("coefficientwise arithmetic trims") {
  CHECK(add(Poly{0, 1}, Poly{1}) == Poly{1, 1});
  std::mt19937_64 rng(3);
  const Poly p = random_poly(rng, 12);
  CHECK(sub(p, p).is_zero());
  CHECK(scale(Poly{0, 0, 1}, Complex(0.0)).is_zero());
  CHECK(Poly{1, 0, 0}.degree() == 0);
  CHECK(Poly{}.degree() == -1);
}

TEST_CASE("shift_argument examples") {
  CHECK(shift_argument(Poly{0, 1}, Complex(3.0)) == Poly{3, 1});
  CHECK(shift_argument(Poly{0, 0, 1}, Complex(1.0)) == Poly{1, 2, 1});
  std::mt19937_64 rng(4);
  const Poly p = random_poly(rng, 9);
  CHECK(shift_argument(p, Complex(0.0)) == p);
}

TEST_CASE("shift round trip") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly p = random_poly(rng, static_cast<int>(rng() % 41));
    Complex a(u(rng), u(rng));
    if (to_double(abs(a)) > 100) a = a * Real(0.5);
    CHECK(max_rel_diff(shift_argument(shift_argument(p, a), -a), p) < 1e-9);
  }
}

TEST_CASE("sup_bound_on_disc examples") {
  CHECK(sup_bound_on_disc(Poly{1, 0, 1}, Disc(Complex(0.0), Real(2))) == doctest::Approx(5).epsilon(1e-8));
  CHECK(sup_bound_on_disc(Poly{0, 1}, Disc(Complex(3.0), Real(1))) == doctest::Approx(4).epsilon(1e-8));
  CHECK(sup_bound_on_disc(Poly{-3, 1}, Disc(Complex(3.0), Real(1))) == doctest::Approx(1).epsilon(1e-8));
  CHECK(sup_bound_on_disc(Poly{1, 0, 1}, Disc(Complex(0.0), Real(2))) >= 5.0);
}

TEST_CASE("sup_sample_on_disc examples") {
  CHECK(sup_sample_on_disc(Poly{0, 1}, Disc(Complex(0.0), Real(1)), 4) == doctest::Approx(1));
  CHECK(sup_sample_on_disc(Poly{}, Disc(Complex(2.0), Real(3)), 7) == 0);
  const double s = sup_sample_on_disc(Poly{1, 0, 1}, Disc(Complex(0.0), Real(2)), 512);
  CHECK(s >= 4.999);
  CHECK(s <= 5.0 + 1e-12);
}

TEST_CASE("bound sandwich") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int deg = static_cast<int>(rng() % 15);
    const Poly p = random_poly(rng, deg);
    const Disc disc(Complex(u(rng), u(rng)), Real(0.1 + std::abs(u(rng)) / 4));
    const double lo = sup_sample_on_disc(p, disc, 1024);
    const double hi = sup_bound_on_disc(p, disc);
    CHECK(lo <= hi);
    CHECK(hi <= (deg + 1) * lo * kBoundSafety * (1 + 1e-12));
  }
}

TEST_CASE("taylor_split examples") {
  auto s = taylor_split(Poly{0, 0, 1}, Complex(0.0), 1);
  REQUIRE(s.jet.size() == 1);
  CHECK(s.jet[0].is_zero());
  CHECK(s.quotient == Poly{0, 1});

  s = taylor_split(Poly{0, 0, 1}, Complex(1.0), 2);
  CHECK(dz(s.jet[0]) == cd(1, 0));
  CHECK(dz(s.jet[1]) == cd(2, 0));
  CHECK(s.quotient == Poly{1});

  s = taylor_split(Poly{1, 2, 3}, Complex(2.0), 5);
  CHECK(s.jet.size() == 5);
  CHECK(s.quotient.is_zero());
  CHECK(dz(s.jet[0]) == cd(17, 0));
}

TEST_CASE("taylor reconstruction") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly p = random_poly(rng, static_cast<int>(rng() % 20));
    const Complex c(u(rng), u(rng));
    const int d = 1 + static_cast<int>(rng() % 12);
    const auto s = taylor_split(p, c, d);
    const Poly jet = shift_argument(Poly(s.jet), -c);
    const Poly rest = mul(shift_argument(Poly::monomial(static_cast<size_t>(d)), -c), s.quotient);
    CHECK(max_rel_diff(add(jet, rest), p) < 1e-9);
  }
}

TEST_CASE("eval against a power sum") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly p = random_poly(rng, static_cast<int>(rng() % 25));
    const cd z(u(rng), u(rng));
    cd naive = 0, power = 1;
    double magnitude = 0;
    for (const auto& c : p.to_double()) {
      naive += c * power;
      magnitude += std::abs(c * power);
      power *= z;
    }
    const cd got = dz(eval(p, Complex(z)));
    CHECK(std::abs(got - naive) <= 1e-10 * std::max(1.0, magnitude));
  }
}

TEST_CASE("local coefficients reproduce far values") {
  const Poly p = Poly{0, 0, 0, 1};
  const auto local = local_double_coeffs(p, Complex(100.0));
  CHECK(std::abs(horner(local, {1, 0}) - cd(101.0 * 101 * 101, 0)) < 1e-6);
  CHECK(sup_sample_mesh(local, 1.0, 11) == doctest::Approx(101.0 * 101 * 101));
  CHECK_THROWS(sup_sample_mesh(local, 1.0, 1));
}
