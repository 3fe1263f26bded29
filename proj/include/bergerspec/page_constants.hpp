#pragma once

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bergerspec {

class PageTranscriptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficients of the Page metric restricted to its r = const Berger slices,
///
///   g = V dr² + f (σ1² + σ2²) + (C sin²r / V) σ3²,   r ∈ (0, π),
///
///   f = base_scale (1 - a² cos²r) / (3 + 6a² - a⁴)
///   V = (1 - a² cos²r) / (3 - a² - a²(1 + a²) cos²r)
///   C = fiber_scale / (3 + a²)²,   U = √V,   D = √C
///
/// with σi the left-invariant coframe of the unit round S³ and a the root in
/// (0, 1) of a⁴ + 4a³ - 6a² + 12a - 3. In this normalization Ric = 3(1 + a²) g,
/// so the scalar curvature is 12(1 + a²).
///
/// The numbers live in a plain key = value file so the transcription can be
/// reviewed and swapped; every load is checked against the invariants.
struct PageConstants {
  std::string version = "page-constants/1";
  std::string a_text;
  double a = 0.0;
  /// Coefficients of the defining polynomial of a, leading first.
  std::array<double, 5> minimal_polynomial{1.0, 4.0, -6.0, 12.0, -3.0};
  double base_scale = 4.0;
  double fiber_scale = 1.0;
  double scalar_curvature_factor = 12.0;

  static PageConstants builtin();
  static PageConstants parse(std::string_view text);
  static PageConstants load(const std::filesystem::path& path);
  [[nodiscard]] std::string serialize() const;

  /// Throws PageTranscriptionError when an invariant fails.
  void validate() const;

  [[nodiscard]] double scalar_curvature() const;
  [[nodiscard]] double f(double r) const;
  [[nodiscard]] double V(double r) const;
  [[nodiscard]] double U(double r) const;
  [[nodiscard]] double C() const;
  [[nodiscard]] double D() const;
  /// Square root of the σ3 coefficient, D sin r / U.
  [[nodiscard]] double fiber_width(double r) const;
};

}  // namespace bergerspec
