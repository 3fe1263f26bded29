#include "bergerspec/jacobi_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bergerspec {

EinsteinAmbient cp2_ambient() {
  return {"CP2", 4, 6.0, AmbientCase::Hypersurface};
}

double jacobi_shift(const EinsteinAmbient& ambient) {
  if (ambient.validity == AmbientCase::General) {
    throw UnsupportedAmbient("Ric⊥ unsupported: ambient '" + ambient.name +
                             "' is neither a hypersurface case nor of constant curvature");
  }
  if (ambient.dimension == 0 || !std::isfinite(ambient.scalar_curvature)) {
    throw std::invalid_argument("ambient '" + ambient.name + "' has no finite shift");
  }
  return ambient.scalar_curvature / static_cast<double>(ambient.dimension);
}

std::vector<SpectrumEntry> jacobi_spectrum(std::span<const SpectrumEntry> laplace, double shift) {
  std::vector<SpectrumEntry> out(laplace.begin(), laplace.end());
  for (auto& e : out) e.value -= shift;
  return out;
}

double default_zero_tolerance(double shift) { return 1e-9 * std::max(1.0, std::abs(shift)); }

IndexNullityReport index_nullity(std::span<const SpectrumEntry> jacobi, double zero_tolerance,
                                 double shift) {
  if (jacobi.empty()) throw std::invalid_argument("index_nullity needs a non-empty spectrum");
  if (!(zero_tolerance > 0.0)) throw std::invalid_argument("zero tolerance must be positive");

  IndexNullityReport report;
  report.zero_tolerance = zero_tolerance;
  report.shift = shift;
  report.truncation_bound = -std::numeric_limits<double>::infinity();
  for (const auto& e : jacobi) {
    report.truncation_bound = std::max(report.truncation_bound, e.value);
    if (e.value < -zero_tolerance) {
      report.index += e.multiplicity;
    } else if (std::abs(e.value) <= zero_tolerance) {
      report.nullity += e.multiplicity;
    } else {
      continue;
    }
    report.witnesses.push_back({e.value + shift, e.multiplicity, e.value, e.source});
  }
  report.certified = report.truncation_bound > zero_tolerance;
  if (!report.certified) report.note = "spectrum truncated below the shift; counts are lower bounds";
  return report;
}

IndexNullityReport laplace_index_nullity(std::span<const SpectrumEntry> laplace, double shift,
                                         double zero_tolerance) {
  const auto shifted = jacobi_spectrum(laplace, shift);
  return index_nullity(shifted, zero_tolerance, shift);
}

InstabilityVerdict is_unstable(const EinsteinAmbient& ambient) {
  const double shift = jacobi_shift(ambient);
  return {ambient.scalar_curvature > 0.0, -shift, 1};
}

int adjunction_genus(int self_intersection, int c1_dot_curve) {
  const int rhs = self_intersection - c1_dot_curve;
  if (rhs % 2 != 0) {
    throw std::invalid_argument("[C]^2 - c1·C must be even, got " + std::to_string(rhs));
  }
  return (rhs + 2) / 2;
}

CurveIndexNullity complex_curve_index_nullity(ComplexCurve curve) {
  switch (curve) {
    case ComplexCurve::Degree1: return {0, 1};
    case ComplexCurve::Degree2: return {0, 4};
    case ComplexCurve::LinearHyperplane: return {0, 1};
  }
  throw std::invalid_argument("unsupported complex curve");
}

}  // namespace bergerspec
