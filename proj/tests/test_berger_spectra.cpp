#include "bergerspec/berger_spectra.hpp"
#include "bergerspec/harmonic_spectra.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace bergerspec;

namespace {

Rational R(long long p, long long q = 1) { return Rational(p, q); }

AffineBranch line(long long a, long long b) { return {R(a), R(b), std::nullopt}; }

}  // namespace

TEST_CASE("mode values") {
  const double t0 = std::cbrt(1.0 / 6.0);
  CHECK(mode_value({1, 1}, t0) == doctest::Approx(8.0 * t0).epsilon(1e-14));
  CHECK(mode_value({1, 1}, 2.0) == doctest::Approx(2.0 * (2.0 + 1.0 / 8.0)));
  CHECK(mode_value({3, 3}, 1.0) == doctest::Approx(15.0));
  for (double t : {0.3, 1.0, 2.5}) CHECK(mode_value({2, 0}, t) == doctest::Approx(8.0 * t));
  CHECK_THROWS_AS(mode_value({1, 1}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(mode_value({1, 1}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(mode_value({2, 1}, 1.0), std::invalid_argument);
}

TEST_CASE("mode branch coefficients") {
  for (const Mode& m : enumerate_modes(15)) {
    CHECK(m.valid());
    CHECK(m.a() >= 2 * static_cast<std::int64_t>(m.k));
    CHECK(m.b() >= 0);
  }
  const auto a3 = AffineBranch::of({3, 1});
  CHECK(a3.a == 14);
  CHECK(a3.b == 1);
}

TEST_CASE("mode multiplicities") {
  CHECK(mode_multiplicity({1, 1}) == 4);
  CHECK(mode_multiplicity({0, 0}) == 1);
  CHECK(mode_multiplicity({2, 0}) == sphere_multiplicity(2, 3) - mode_multiplicity({2, 2}));
  CHECK(mode_multiplicity({2, 0}) == 3);
  for (unsigned k = 0; k <= 12; ++k) {
    std::uint64_t total = 0;
    for (unsigned q = k % 2; q <= k; q += 2) total += mode_multiplicity({k, q});
    CHECK(total == sphere_multiplicity(k, 3));
  }
}

TEST_CASE("mode enumeration") {
  CHECK(enumerate_modes(1) == std::vector<Mode>{{0, 0}, {1, 1}});
  CHECK(enumerate_modes(2) == std::vector<Mode>{{0, 0}, {1, 1}, {2, 0}, {2, 2}});
  const auto m3 = enumerate_modes(3);
  CHECK(m3.size() == 6);
  CHECK(m3[4] == Mode{3, 1});
  CHECK(m3[5] == Mode{3, 3});
}

TEST_CASE("distinct spectrum on the round sphere") {
  const auto levels = distinct_spectrum_at(R(1), 4);
  REQUIRE(levels.size() == 4);
  const long long values[] = {0, 3, 8, 15};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(levels[k].coefficient == values[k]);
    CHECK(levels[k].multiplicity() == (k + 1) * (k + 1));
  }
  CHECK(levels[0].source() == "constant");
}

TEST_CASE("distinct spectrum at x = 1/100 matches brute force") {
  // Frozen from the brute-force enumeration over k <= 14.
  const Rational expected[] = {R(0),       R(201, 100),  R(404, 100),  R(609, 100),
                               R(8),       R(816, 100),  R(1025, 100), R(1236, 100),
                               R(1401, 100), R(1449, 100), R(1664, 100), R(1881, 100)};
  const auto brute = oracle::brute_levels(R(1, 100), 14);
  auto it = brute.begin();
  for (const auto& e : expected) CHECK((it++)->first == e);

  const auto levels = distinct_spectrum_at(R(1, 100), 12);
  REQUIRE(levels.size() == 12);
  for (std::size_t j = 0; j < 12; ++j) CHECK(levels[j].coefficient == expected[j]);
}

TEST_CASE("distinct spectrum at x = 2") {
  const auto levels = distinct_spectrum_at(R(2), 3);
  CHECK(levels[0].coefficient == 0);
  CHECK(levels[1].coefficient == 4);
  CHECK(levels[2].coefficient == 8);
  REQUIRE(levels[2].modes.size() == 1);
  CHECK(levels[2].modes[0] == Mode{2, 0});
}

TEST_CASE("distinct spectrum argument checks") {
  CHECK_THROWS_AS(distinct_spectrum_at(R(1), 0), std::invalid_argument);
  CHECK_THROWS_AS(distinct_spectrum_at(R(0), 3), std::invalid_argument);
  CHECK_THROWS_AS(distinct_spectrum_at(R(-1), 3), std::invalid_argument);
}

TEST_CASE("distinct spectrum agrees with brute force, multiplicities included") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(1, 20 * 331);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational x(num(rng), 331);
    const auto levels = distinct_spectrum_at(x, 20);
    const auto brute = oracle::brute_levels(x, 60);
    auto it = brute.begin();
    for (const auto& level : levels) {
      CHECK(level.coefficient == it->first);
      CHECK(level.multiplicity() == it->second);
      ++it;
    }
  }
}

TEST_CASE("large x keeps only fiber-free modes low") {
  const auto levels = distinct_spectrum_at(R(1000000), 6);
  const long long values[] = {0, 8, 24, 48, 80, 120};
  for (std::size_t j = 0; j < 6; ++j) CHECK(levels[j].coefficient == values[j]);
}

TEST_CASE("branch crossings") {
  const auto gamma = [](long long n) { return line(2 * n, n * n); };
  const auto beta2 = line(8, 0);
  const auto beta4 = line(24, 0);
  const auto alpha3 = line(14, 1);
  CHECK(*branch_crossing(gamma(1), beta2) == 6);
  CHECK(*branch_crossing(gamma(2), beta2) == 1);
  CHECK(*branch_crossing(gamma(3), beta2) == R(2, 9));
  CHECK(*branch_crossing(gamma(4), alpha3) == R(2, 5));
  CHECK(*branch_crossing(alpha3, beta4) == 10);
  CHECK(*branch_crossing(gamma(5), alpha3) == R(1, 6));
  CHECK(*branch_crossing(gamma(6), alpha3) == R(2, 35));
  CHECK(*branch_crossing(gamma(7), beta4) == R(10, 49));
  CHECK(*branch_crossing(gamma(8), beta4) == R(1, 8));
  CHECK(*branch_crossing(gamma(9), beta4) == R(2, 27));
  CHECK_THROWS_AS(branch_crossing(beta2, beta2), std::invalid_argument);
  CHECK_FALSE(branch_crossing(beta2, beta4).has_value());
  // 1 + x and 2 + 2x meet only at x = -1.
  CHECK_FALSE(branch_crossing(line(1, 1), line(2, 2)).has_value());
}

TEST_CASE("first nonzero piecewise branch") {
  const auto segs = kth_distinct_piecewise(1, R(20));
  REQUIRE(segs.size() == 2);
  CHECK(segs[0].lo == 0);
  CHECK(segs[0].hi == 6);
  CHECK(segs[0].branch.a == 2);
  CHECK(segs[0].branch.b == 1);
  CHECK(segs[1].lo == 6);
  CHECK(segs[1].hi == 20);
  CHECK(segs[1].branch.a == 8);
  CHECK(segs[1].branch.b == 0);
}

TEST_CASE("second nonzero piecewise branch breaks at 1") {
  const auto segs = kth_distinct_piecewise(2, R(20));
  REQUIRE(segs.size() >= 2);
  CHECK(segs[0].hi == 1);
  CHECK(segs[0].branch.a == 4);
  CHECK(segs[0].branch.b == 4);
  CHECK(segs[1].lo == 1);
  CHECK(segs[1].branch.a == 8);
  CHECK(segs[1].branch.b == 0);
  // Past x = 6 the fiber branch 2 + x climbs over 8 into position 2.
  CHECK(segs[1].hi == 6);
}

TEST_CASE("fourth nonzero position is 8 for small x") {
  const auto segs = kth_distinct_piecewise(4, R(1));
  CHECK(evaluate_piecewise(segs, R(1, 100)) == 8);
  CHECK(segs.front().branch.a == 8);
  CHECK(segs.front().branch.b == 0);
  CHECK(segs.front().hi == R(2, 9));
}

TEST_CASE("piecewise agrees with brute force at generic rationals") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> num(1, 20 * 7919);
  for (std::size_t i = 1; i <= 8; ++i) {
    const auto segs = kth_distinct_piecewise(i, R(20));
    for (std::size_t s = 1; s < segs.size(); ++s) CHECK(segs[s].lo == segs[s - 1].hi);
    CHECK(segs.back().hi == 20);
    for (int trial = 0; trial < 15; ++trial) {
      const Rational x(num(rng), 7919);
      CHECK(evaluate_piecewise(segs, x) == oracle::brute_position(x, i));
    }
  }
  CHECK_THROWS_AS(kth_distinct_piecewise(0, R(1)), std::invalid_argument);
}

TEST_CASE("Tanno first eigenvalue") {
  CHECK(tanno_lambda1(1.0) == doctest::Approx(3.0));
  CHECK(tanno_lambda1(2.0) == doctest::Approx(4.25));
  const double t0 = std::cbrt(1.0 / 6.0);
  CHECK(tanno_lambda1(t0) == doctest::Approx(8.0 * t0).epsilon(1e-14));
  CHECK(t0 * (2.0 + 1.0 / (t0 * t0 * t0)) == doctest::Approx(8.0 * t0).epsilon(1e-14));
  CHECK_THROWS_AS(tanno_lambda1(0.0), std::invalid_argument);
}

TEST_CASE("epsilon family first eigenvalue") {
  CHECK(epsilon_lambda1(1.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(epsilon_lambda1(2.0) == doctest::Approx(2.25).epsilon(1e-14));
  CHECK(epsilon_lambda1(0.1) == doctest::Approx(8.0).epsilon(1e-14));
  CHECK_THROWS_AS(epsilon_lambda1(-0.5), std::invalid_argument);
}

TEST_CASE("scaling spectra") {
  const std::vector<SpectrumEntry> s{{0.0, 1, "constant"}, {3.0, 4, "(1,1)"}, {8.0, 9, "(2,0)+(2,2)"}};
  const auto same = scale_spectrum(s, 1.0);
  for (std::size_t j = 0; j < s.size(); ++j) CHECK(same[j].value == s[j].value);
  const auto quarter = scale_spectrum(s, 4.0);
  CHECK(quarter[0].value == 0.0);
  CHECK(quarter[1].value == 0.75);
  CHECK(quarter[2].value == 2.0);
  CHECK(quarter[2].multiplicity == 9);
  CHECK(quarter[2].source == "(2,0)+(2,2)");
  CHECK_THROWS_AS(scale_spectrum(s, 0.0), std::invalid_argument);
}

TEST_CASE("Berger spectrum degenerates to the round sphere at t = 1") {
  const auto s = berger_spectrum(1.0, 6);
  for (std::size_t k = 0; k < s.size(); ++k) {
    CHECK(s[k].value == doctest::Approx(static_cast<double>(k * (k + 2))));
    CHECK(s[k].multiplicity == (k + 1) * (k + 1));
  }
}

TEST_CASE("nonconstant modes are positive") {
  for (const Mode& m : enumerate_modes(20)) {
    if (m == Mode{0, 0}) continue;
    for (double t : {0.01, 0.3, 1.0, 7.0, 100.0}) CHECK(mode_value(m, t) > 0.0);
  }
}
