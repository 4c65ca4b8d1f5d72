#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "simapprox/builder.hpp"
#include "simapprox/errors.hpp"

using namespace simapprox;
using cd = std::complex<double>;

namespace {

DirectionSet turns(std::vector<double> t) { return DirectionSet::from_turns(t); }

// No reserve slots and plain separation: the smallest legal witness is taken.
BuildOptions plain() {
  BuildOptions o;
  o.reserve_slots = 0;
  o.clearance = 1.0;
  return o;
}

const TargetLibrary kLibrary{Poly{1}, Poly{0, 1}, Poly{0, 0, 0.25}};

void check_legal(const Certificate& c, const DirectionSet& dirs) {
  const DirectionSet used = dirs.prefix(static_cast<size_t>(c.window.n));
  CHECK(abs(c.m_value) > separation_threshold(c.v1, min_pair_gap(used)));
  CHECK(discs_pairwise_disjoint(frame_discs({c.v1, c.m_value, used})));
}

}  // namespace

TEST_CASE("magnitude generators") {
  CHECK(to_double(magnitude_at(MagnitudeSequence::naturals(), 7)) == cd(7, 0));
  CHECK(to_double(magnitude_at(MagnitudeSequence::arithmetic(Real(1), Real(2)), 3)) == cd(7, 0));
  const cd spiral = to_double(magnitude_at(MagnitudeSequence::spiral(), 1));
  CHECK(spiral.real() == doctest::Approx(0.5403023059));
  CHECK(spiral.imag() == doctest::Approx(0.8414709848));
  CHECK(to_double(magnitude_at(MagnitudeSequence::power(Real(2)), 4)) == cd(16, 0));
  const auto list = MagnitudeSequence::explicit_list({Complex(1.0), Complex(2.0), Complex(3.0)});
  CHECK(to_double(magnitude_at(list, 3)) == cd(3, 0));
  CHECK_THROWS_AS(magnitude_at(list, 4), Error);
  CHECK_THROWS_AS(magnitude_at(list, 0), Error);
}

TEST_CASE("scan_witness") {
  CHECK(scan_witness(MagnitudeSequence::naturals(), Real(6), 1, 1000) == 7);
  CHECK(scan_witness(MagnitudeSequence::power(Real(2)), Real(6), 1, 1000) == 3);
  CHECK(scan_witness(MagnitudeSequence::naturals(), Real(6), 10, 1000) == 10);
  const auto list = MagnitudeSequence::explicit_list({Complex(1.0), Complex(2.0), Complex(3.0)});
  try {
    scan_witness(list, Real(5), 1, 1000);
    FAIL("expected ScanExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ScanExhausted);
  }
  CHECK_THROWS_AS(scan_witness(MagnitudeSequence::naturals(), Real(100), 1, 50), Error);
}

TEST_CASE("window validation") {
  CHECK_NOTHROW(validate({1, 1, 1, 2}));
  CHECK_THROWS_AS(validate({1, 1, 1, 1}), Error);
  CHECK_THROWS_AS(validate({0, 1, 1, 2}), Error);
  const Window w{1, 4, 4, 2};
  CHECK_THROWS_AS(fix_window({}, w, MagnitudeSequence::naturals(), kLibrary, turns({0, 0.5}), plain()), Error);
  const Window wide{1, 4, 1, 3};
  CHECK_THROWS_AS(fix_window({}, wide, MagnitudeSequence::naturals(), kLibrary, turns({0, 0.5}), plain()), Error);
}

TEST_CASE("canonical schedule enumerates diagonally") {
  const auto s = canonical_schedule(6, 3, 3);
  REQUIRE(s.size() == 6);
  CHECK(s[0] == Window{1, 1, 1, 2});
  CHECK(s[1] == Window{1, 1, 1, 3});
  CHECK(s[2] == Window{1, 1, 2, 2});
  CHECK(s[3] == Window{1, 2, 1, 2});
  CHECK(s[4] == Window{2, 1, 1, 2});
  for (size_t i = 1; i < s.size(); ++i) {
    CHECK(s[i - 1].v + s[i - 1].N + s[i - 1].k + s[i - 1].n <= s[i].v + s[i].N + s[i].k + s[i].n);
  }
  CHECK(canonical_schedule(0, 3, 3).empty());
  CHECK_THROWS_AS(canonical_schedule(2, 1, 3), Error);
}

TEST_CASE("empty and zero series") {
  const SeriesFunction empty = build({}, MagnitudeSequence::naturals(), kLibrary, turns({0, 0.5}));
  CHECK(empty.increments.empty());
  CHECK(empty.certificates.empty());
  CHECK(evaluate_series(empty, Complex(3.0, 4.0)).is_zero());

  const TargetLibrary zero{Poly{}};
  const std::vector<Window> one{{1, 2, 1, 2}};
  const auto s = build(one, MagnitudeSequence::naturals(), zero, turns({0, 0.5}), plain());
  REQUIRE(s.certificates.size() == 1);
  CHECK(s.increments[0].is_zero());
  CHECK(s.certificates[0].created_bound == 0);
  const auto r = verify_certificate(s, s.certificates[0], turns({0, 0.5}), zero, 21);
  CHECK(r.pass);
  CHECK(r.measured == 0);
}

TEST_CASE("evaluate_series sums increments") {
  SeriesFunction s;
  s.increments = {Poly{0, 1}};
  CHECK(to_double(evaluate_series(s, Complex(2.0, -1.0))) == cd(2, -1));
  s.increments.push_back(Poly{1, 0, 3});
  const Complex z(0.5, 0.25);
  CHECK(std::abs(to_double(evaluate_series(s, z) - eval(add(Poly{0, 1}, Poly{1, 0, 3}), z))) < 1e-15);
}

TEST_CASE("first window of constant one over two antipodal directions") {
  const auto dirs = turns({0, 0.5});
  const Window w{1, 4, 1, 2};
  const auto s = fix_window({}, w, MagnitudeSequence::naturals(), kLibrary, dirs, plain());
  const auto& c = s.certificates.at(0);
  CHECK(c.witness_s == 3);
  CHECK(to_double(c.threshold) == doctest::Approx(2));
  CHECK(c.created_bound < 1.0 / 8);
  check_legal(c, dirs);
  const auto r = verify_certificate(s, c, dirs, kLibrary, 101);
  CHECK(r.pass);
  CHECK(r.measured < 0.25);
  CHECK(r.per_direction.size() == 2);
}

const std::vector<Window> kTwo{{1, 4, 1, 2}, {1, 4, 2, 3}};

const SeriesFunction& two_windows() {
  static const SeriesFunction s = [] {
    const auto dirs = turns({0, 0.25, 0.5});
    const auto first = build(std::span(kTwo).first(1), MagnitudeSequence::naturals(), kLibrary, dirs);
    return fix_window(first, kTwo[1], MagnitudeSequence::naturals(), kLibrary, dirs);
  }();
  return s;
}

TEST_CASE("second window keeps the first valid") {
  const auto dirs = turns({0, 0.25, 0.5});
  const auto& both = two_windows();
  REQUIRE(both.certificates.size() == 2);
  for (const auto& c : both.certificates) {
    check_legal(c, dirs);
    CHECK(verify_certificate(both, c, dirs, kLibrary, 101).pass);
    CHECK(c.slack >= 0);
    double spent = 0;
    for (double d : c.deductions) spent += d;
    CHECK(c.created_bound + spent < 1.0 / c.window.N);
  }
  CHECK(both.certificates[0].deductions.size() == 1);
  CHECK(both.tail_caps[1] <= 0.25);
}

TEST_CASE("same inputs give the same series") {
  const auto& both = two_windows();
  const auto again = build(kTwo, MagnitudeSequence::naturals(), kLibrary, turns({0, 0.25, 0.5}));
  REQUIRE(again.increments.size() == 2);
  CHECK(again.increments[0] == both.increments[0]);
  CHECK(again.increments[1] == both.increments[1]);
  CHECK(again.certificates[1].witness_s == both.certificates[1].witness_s);
  CHECK(again.certificates[0].deductions == both.certificates[0].deductions);
}

TEST_CASE("inflated tolerance denominator fails verification") {
  const auto& both = two_windows();
  Certificate c = both.certificates[0];
  c.window.N *= 100;
  const auto r = verify_certificate(both, c, turns({0, 0.25, 0.5}), kLibrary, 101);
  CHECK_FALSE(r.pass);
  CHECK(r.measured >= 1.0 / c.window.N);
}

TEST_CASE("outside placement clears every certified disc") {
  BuildOptions o = plain();
  o.placement = Placement::Outside;
  const auto dirs = turns({0, 0.5});
  const std::vector<Window> schedule{{1, 2, 1, 2}, {1, 2, 2, 2}};
  const auto s = build(schedule, MagnitudeSequence::naturals(), kLibrary, dirs, o);
  REQUIRE(s.certificates.size() == 2);
  CHECK(abs(s.certificates[1].m_value) > s.certificates[0].v1 + abs(s.certificates[0].m_value));
  for (const auto& c : s.certificates) CHECK(verify_certificate(s, c, dirs, kLibrary, 61).pass);
}

TEST_CASE("explicit magnitudes that stop short") {
  const auto list = MagnitudeSequence::explicit_list({Complex(1.0), Complex(1.5)});
  const Window w{1, 2, 1, 2};
  try {
    fix_window({}, w, list, kLibrary, turns({0, 0.5}), plain());
    FAIL("expected ScanExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ScanExhausted);
  }
}
