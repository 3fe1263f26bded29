#include "bergerspec/harmonic_spectra.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace bergerspec;

TEST_CASE("sphere eigenvalues") {
  CHECK(sphere_eigenvalue(0, 5) == 0);
  CHECK(sphere_eigenvalue(1, 3) == 3);
  CHECK(sphere_eigenvalue(2, 2) == 6);
  CHECK_THROWS_AS(sphere_eigenvalue(1, 0), std::invalid_argument);
}

TEST_CASE("sphere multiplicities") {
  CHECK(sphere_multiplicity(0, 4) == 1);
  CHECK(sphere_multiplicity(1, 4) == 5);
  // Degree-2 polynomials in 4 variables minus constants.
  CHECK(sphere_multiplicity(2, 3) == oracle::count_monomials(4, 2) - oracle::count_monomials(4, 0));
  CHECK(sphere_multiplicity(2, 3) == 9);
  // 2k+1 on the 2-sphere, the case the k=2 table cell gets wrong.
  CHECK(sphere_multiplicity(2, 2) == 5);
}

TEST_CASE("multiplicity equals harmonic polynomial count") {
  for (unsigned p = 1; p <= 6; ++p) {
    for (int k = 0; k <= 12; ++k) {
      const auto expected = oracle::count_monomials(static_cast<int>(p) + 1, k) -
                            oracle::count_monomials(static_cast<int>(p) + 1, k - 2);
      CHECK(sphere_multiplicity(static_cast<std::uint64_t>(k), p) == expected);
      CHECK(sphere_multiplicity(static_cast<std::uint64_t>(k), p) ==
            oracle::pascal(k + static_cast<int>(p), static_cast<int>(p)) -
                oracle::pascal(k + static_cast<int>(p) - 2, static_cast<int>(p)));
    }
  }
}

TEST_CASE("three-sphere multiplicities are (k+1)^2") {
  for (std::uint64_t k = 0; k <= 12; ++k) CHECK(sphere_multiplicity(k, 3) == (k + 1) * (k + 1));
}

TEST_CASE("spectrum listing") {
  const auto s3 = sphere_spectrum(3, 2);
  REQUIRE(s3.size() == 3);
  CHECK(s3[0].eigenvalue == 0);
  CHECK(s3[0].multiplicity == 1);
  CHECK(s3[1].eigenvalue == 3);
  CHECK(s3[1].multiplicity == 4);
  CHECK(s3[2].eigenvalue == 8);
  CHECK(s3[2].multiplicity == 9);

  const auto s2 = sphere_spectrum(2, 1);
  REQUIRE(s2.size() == 2);
  CHECK(s2[1].eigenvalue == 2);
  CHECK(s2[1].multiplicity == 3);

  const auto circle = sphere_spectrum(1, 3);
  const std::uint64_t values[] = {0, 1, 4, 9};
  const std::uint64_t mults[] = {1, 2, 2, 2};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(circle[k].eigenvalue == values[k]);
    CHECK(circle[k].multiplicity == mults[k]);
  }
}

TEST_CASE("eigenvalues strictly increase with degree") {
  for (unsigned p = 1; p <= 8; ++p) {
    const auto s = sphere_spectrum(p, 30);
    for (std::size_t k = 1; k < s.size(); ++k) CHECK(s[k].eigenvalue > s[k - 1].eigenvalue);
  }
}

TEST_CASE("binomial edge cases") {
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 3) == 0);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(60, 30) == 118264581564861424ULL);
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}
