#include "bergerspec/harmonic_spectra.hpp"

#include <stdexcept>
#include <string>

namespace bergerspec {

namespace {

void require_dim(unsigned p) {
  if (p < 1) throw std::invalid_argument("sphere dimension must be >= 1, got " + std::to_string(p));
}

}  // namespace

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (acc > UINT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t sphere_eigenvalue(std::uint64_t k, unsigned p) {
  require_dim(p);
  return k * (k + p - 1);
}

std::uint64_t sphere_multiplicity(std::uint64_t k, unsigned p) {
  require_dim(p);
  const auto kk = static_cast<std::int64_t>(k);
  const auto pp = static_cast<std::int64_t>(p);
  return binomial(kk + pp, pp) - binomial(kk + pp - 2, pp);
}

std::vector<SphereSpectrumEntry> sphere_spectrum(unsigned p, std::uint64_t k_max) {
  require_dim(p);
  std::vector<SphereSpectrumEntry> out;
  out.reserve(k_max + 1);
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    out.push_back({k, sphere_eigenvalue(k, p), sphere_multiplicity(k, p), p});
  }
  return out;
}

}  // namespace bergerspec
