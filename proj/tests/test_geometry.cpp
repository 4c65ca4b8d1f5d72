#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "simapprox/errors.hpp"
#include "simapprox/geometry.hpp"

using namespace simapprox;

namespace {

double d(const Real& x) { return to_double(x); }

DirectionSet turns(std::initializer_list<double> t) {
  std::vector<double> v(t);
  return DirectionSet::from_turns(v);
}

}  // namespace

TEST_CASE("unit_direction on the quarter turns") {
  auto one = to_double(unit_direction(Real(0)));
  CHECK(one.real() == doctest::Approx(1));
  CHECK(one.imag() == doctest::Approx(0));
  auto i = to_double(unit_direction(Real(0.25)));
  CHECK(i.real() == doctest::Approx(0).epsilon(1e-15));
  CHECK(i.imag() == doctest::Approx(1));
  auto minus = to_double(unit_direction(Real(0.5)));
  CHECK(minus.real() == doctest::Approx(-1));
  CHECK(std::abs(minus.imag()) < 1e-15);
  CHECK_THROWS_AS(unit_direction(Real(1)), Error);
  CHECK_THROWS_AS(unit_direction(Real(-0.1)), Error);
}

TEST_CASE("min_pair_gap examples") {
  CHECK(d(min_pair_gap(turns({0, 0.5}))) == doctest::Approx(2));
  CHECK(d(min_pair_gap(turns({0, 0.25}))) == doctest::Approx(std::sqrt(2.0)));
  const DirectionSet thirds({Direction(Real(0)), Direction(parse_real("1/3")), Direction(parse_real("2/3"))});
  CHECK(d(min_pair_gap(thirds)) == doctest::Approx(std::sqrt(3.0)));
  CHECK_THROWS_AS(min_pair_gap(turns({0.1})), Error);
  CHECK_THROWS_AS(turns({0.1, 0.1}), Error);
}

TEST_CASE("gap formulas agree") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> t;
    const int n = 2 + trial % 5;
    for (int j = 0; j < n; ++j) t.push_back(u(rng));
    const auto dirs = DirectionSet::from_turns(t);
    double brute = 1e300;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) brute = std::min(brute, 2 * std::abs(std::sin(M_PI * (t[a] - t[b]))));
    }
    CHECK(std::abs(d(min_pair_gap(dirs)) - brute) < 1e-12);
    CHECK(std::abs(d(min_pair_gap(dirs) - min_pair_gap_direct(dirs))) < 1e-12);
  }
}

TEST_CASE("separation_threshold examples") {
  CHECK(d(separation_threshold(Real(3), Real(2))) == doctest::Approx(6));
  CHECK(d(separation_threshold(Real(3), sqrt(Real(2)))) == doctest::Approx(6));
  CHECK(d(separation_threshold(Real(1), Real(0.5))) == doctest::Approx(4));
  CHECK_THROWS_AS(separation_threshold(Real(0), Real(1)), Error);
  CHECK_THROWS_AS(separation_threshold(Real(1), Real(-1)), Error);
}

TEST_CASE("frame_discs layout") {
  auto discs = frame_discs({Real(1), Complex(10.0), turns({0})});
  REQUIRE(discs.size() == 2);
  CHECK(d(discs[1].center.re) == doctest::Approx(10));
  CHECK(d(discs[1].radius) == 1);

  discs = frame_discs({Real(3), Complex(7.0), turns({0, 0.25})});
  REQUIRE(discs.size() == 3);
  CHECK(d(discs[0].center.re) == 0);
  CHECK(d(discs[2].center.im) == doctest::Approx(7));
  CHECK(std::abs(d(discs[2].center.re)) < 1e-12);
  CHECK(discs_pairwise_disjoint(discs));

  discs = frame_discs({Real(1), Complex(0.0), turns({0})});
  CHECK_FALSE(discs_pairwise_disjoint(discs));
}

TEST_CASE("tangent discs intersect") {
  std::vector<Disc> tangent{Disc(Complex(0.0), Real(3)), Disc(Complex(6.0), Real(3))};
  CHECK_FALSE(discs_pairwise_disjoint(tangent));
  std::vector<Disc> single{Disc(Complex(0.0), Real(1))};
  CHECK(discs_pairwise_disjoint(single));
  CHECK_THROWS_AS(Disc(Complex(0.0), Real(0)), Error);
}

TEST_CASE("antipodal pair at the threshold") {
  const auto dirs = turns({0, 0.5});
  for (double v1 : {0.5, 1.0, 4.0}) {
    const Real t = separation_threshold(Real(v1), min_pair_gap(dirs));
    CHECK(d(t) == doctest::Approx(2 * v1));
    CHECK_FALSE(discs_pairwise_disjoint(frame_discs({Real(v1), Complex(t), dirs})));
  }
}

TEST_CASE("random frames beyond the threshold are disjoint") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double v1 = 0.5 + 9.5 * u(rng);
    std::vector<double> t;
    const int n = 2 + static_cast<int>(u(rng) * 5);
    for (int j = 0; j < n; ++j) t.push_back(u(rng));
    const auto dirs = DirectionSet::from_turns(t);
    const Real m = separation_threshold(Real(v1), min_pair_gap(dirs)) * Real(1 + 2 * (1 - u(rng)));
    CHECK(discs_pairwise_disjoint(frame_discs({Real(v1), Complex(m) * polar_unit(Real(u(rng))), dirs})));
  }
}
