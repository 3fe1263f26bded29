#pragma once

#include "bergerspec/berger_spectra.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bergerspec {

// For a totally geodesic submanifold M of an Einstein n-manifold with scalar
// curvature s, when M is a hypersurface or the ambient has constant curvature,
// the Jacobi operator is the Laplacian of M shifted by -s/n. Spectra use the
// non-negative Laplacian, so Jacobi eigenvalues are λ_k - s/n.

enum class AmbientCase {
  Hypersurface,
  ConstantCurvature,
  General,  // normal Ricci term needed, not supported
};

struct EinsteinAmbient {
  std::string name;
  unsigned dimension = 4;
  double scalar_curvature = 0.0;
  AmbientCase validity = AmbientCase::Hypersurface;
};

class UnsupportedAmbient : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// ℂP² with the normalization whose geodesic-sphere Jacobi shift is 3/2.
EinsteinAmbient cp2_ambient();

double jacobi_shift(const EinsteinAmbient& ambient);

std::vector<SpectrumEntry> jacobi_spectrum(std::span<const SpectrumEntry> laplace, double shift);

struct IndexWitness {
  double eigenvalue = 0.0;  // Laplace eigenvalue (shifted + shift)
  std::uint64_t multiplicity = 0;
  double shifted = 0.0;
  std::string source;
};

struct IndexNullityReport {
  double parameter = 0.0;
  std::uint64_t index = 0;
  std::uint64_t nullity = 0;
  /// Entries with shifted value <= zero_tolerance.
  std::vector<IndexWitness> witnesses;
  double zero_tolerance = 1e-9;
  double shift = 0.0;
  /// Largest shifted value examined; the counts are complete when it exceeds
  /// zero_tolerance, since the truncated tail lies above it.
  double truncation_bound = 0.0;
  bool certified = false;
  std::string note;
};

/// Default nullity tolerance, 1e-9 relative to the shift magnitude.
double default_zero_tolerance(double shift);

/// Counts negative and null Jacobi eigenvalues. Throws on an empty list.
IndexNullityReport index_nullity(std::span<const SpectrumEntry> jacobi, double zero_tolerance,
                                 double shift = 0.0);

/// Shifts a Laplace spectrum and counts it.
IndexNullityReport laplace_index_nullity(std::span<const SpectrumEntry> laplace, double shift,
                                         double zero_tolerance);

struct InstabilityVerdict {
  bool unstable = false;
  /// Jacobi eigenvalue -s/n of the constant function, multiplicity 1.
  double certificate = 0.0;
  std::uint64_t multiplicity = 1;
};

/// Totally geodesic submanifolds of positive-scalar-curvature Einstein spaces
/// in the supported cases are unstable: constants give a negative direction.
InstabilityVerdict is_unstable(const EinsteinAmbient& ambient);

/// g from 2g - 2 = [C]² - c1(S)·[C].
int adjunction_genus(int self_intersection, int c1_dot_curve);

enum class ComplexCurve { Degree1, Degree2, LinearHyperplane };

struct CurveIndexNullity {
  unsigned index = 0;
  unsigned nullity = 0;
  friend bool operator==(const CurveIndexNullity&, const CurveIndexNullity&) = default;
};

/// Tabulated values for complex curves in ℂP² and linear ℂP_{n-1} ⊂ ℂP_n.
CurveIndexNullity complex_curve_index_nullity(ComplexCurve curve);

}  // namespace bergerspec
