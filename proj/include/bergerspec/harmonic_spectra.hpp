#pragma once

#include <cstdint>
#include <vector>

namespace bergerspec {

// Spectrum of the Laplacian on the unit round p-sphere. Degree-k harmonic
// polynomials restricted to S^p give the eigenspace of k(k+p-1); its dimension
// is the number of degree-k monomials in p+1 variables minus those of degree k-2.

struct SphereSpectrumEntry {
  std::uint64_t degree = 0;
  std::uint64_t eigenvalue = 0;
  std::uint64_t multiplicity = 0;
  unsigned dim = 1;

  friend bool operator==(const SphereSpectrumEntry&, const SphereSpectrumEntry&) = default;
};

/// C(n, k) with C(n, k) = 0 for n < k. Throws std::overflow_error if the
/// result does not fit in 64 bits.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

std::uint64_t sphere_eigenvalue(std::uint64_t k, unsigned p);
std::uint64_t sphere_multiplicity(std::uint64_t k, unsigned p);

/// Entries for degrees 0..k_max, ascending in eigenvalue.
std::vector<SphereSpectrumEntry> sphere_spectrum(unsigned p, std::uint64_t k_max);

}  // namespace bergerspec
