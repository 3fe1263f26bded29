#pragma once

#include "bergerspec/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bergerspec {

// Laplace spectrum of the unit-volume Berger 3-sphere
//
//   g_B^t = t^-1 (σ1² + σ2² + σ3²) + (t² - t^-1) σ3².
//
// The eigenvalue of mode (k, q) is t·k(k+2) - t(1 - t^-3)·q², which becomes
// affine in x = t^-3 after division by t: A + B·x with A = k(k+2) - q², B = q².
// All branch arithmetic is exact over the rationals; only the final factor t
// and volume rescalings are floating point.

/// Eigenmode label: round-sphere degree k and circle-action weight q.
struct Mode {
  unsigned k = 0;
  unsigned q = 0;

  /// 0 <= q <= k and q ≡ k (mod 2).
  [[nodiscard]] bool valid() const noexcept { return q <= k && (k - q) % 2 == 0; }
  [[nodiscard]] std::int64_t a() const noexcept {
    return static_cast<std::int64_t>(k) * (k + 2) - static_cast<std::int64_t>(q) * q;
  }
  [[nodiscard]] std::int64_t b() const noexcept { return static_cast<std::int64_t>(q) * q; }
  [[nodiscard]] std::string label() const;

  friend bool operator==(const Mode&, const Mode&) = default;
  friend auto operator<=>(const Mode&, const Mode&) = default;
};

/// The line x ↦ a + b·x; the eigenvalue at squash t is t·(a + b·t^-3).
struct AffineBranch {
  Rational a;
  Rational b;
  std::optional<Mode> source;

  static AffineBranch of(const Mode& m);

  [[nodiscard]] Rational at(const Rational& x) const { return a + b * x; }
  [[nodiscard]] double eigenvalue(double t) const;
  [[nodiscard]] bool same_line(const AffineBranch& other) const {
    return a == other.a && b == other.b;
  }
};

struct SquashParam {
  double t = 1.0;
  double x = 1.0;

  static SquashParam from_t(double t);
  static SquashParam from_x(double x);
};

/// One eigenvalue with its multiplicity. `source` names the modes attaining it,
/// or "constant" for the zero eigenvalue.
struct SpectrumEntry {
  double value = 0.0;
  std::uint64_t multiplicity = 1;
  std::string source;
};

/// A distinct value of A + B·x at fixed x with every mode attaining it.
struct DistinctLevel {
  Rational coefficient;
  std::vector<Mode> modes;

  [[nodiscard]] std::uint64_t multiplicity() const;
  [[nodiscard]] std::string source() const;
};

struct PiecewiseSegment {
  Rational lo;
  Rational hi;
  AffineBranch branch;
};

double mode_value(const Mode& m, double t);

/// 2(k+1) for q > 0, k+1 for q = 0. Summed over q this gives (k+1)².
std::uint64_t mode_multiplicity(const Mode& m);

/// All valid modes with k <= k_max, ordered by (k, q).
std::vector<Mode> enumerate_modes(unsigned k_max);

/// The `count` smallest distinct values of A + B·x (x > 0) over every mode,
/// zero included, ascending.
std::vector<DistinctLevel> distinct_spectrum_at(const Rational& x, std::size_t count);

/// Unique x > 0 where the two lines meet; nullopt if parallel or meeting at
/// x <= 0. Identical lines are rejected with std::invalid_argument.
std::optional<Rational> branch_crossing(const AffineBranch& lhs, const AffineBranch& rhs);

/// Partition of (0, x_max] on which the i-th nonzero distinct value (i = 1 is
/// the first nonzero eigenvalue coefficient) follows a single branch.
/// Adjacent segments share their exact rational breakpoint.
std::vector<PiecewiseSegment> kth_distinct_piecewise(std::size_t i, const Rational& x_max);

/// Evaluates a segment list at x, using the segment whose closure contains x
/// (the left one at a breakpoint). Throws if x lies outside (0, x_max].
Rational evaluate_piecewise(std::span<const PiecewiseSegment> segments, const Rational& x);

/// First nonzero eigenvalue of g_B^t: 8t for t <= 6^{-1/3}, t(2 + t^-3) above.
double tanno_lambda1(double t);

/// Coefficient of t in the first nonzero eigenvalue at x = t^-3: 2 + x up to 6, then 8.
Rational tanno_coefficient(const Rational& x);

/// First nonzero eigenvalue of σ1² + σ2² + ε²σ3² = ε^{2/3} g_B^{ε^{2/3}},
/// obtained by rescaling the Berger value.
double epsilon_lambda1(double epsilon);

/// Eigenvalues of μ·g are those of g divided by μ.
std::vector<SpectrumEntry> scale_spectrum(std::span<const SpectrumEntry> entries, double mu);

/// Distinct spectrum of g_B^t at squash parameter t (x = t^-3 taken exactly
/// from its double value), `count` values including zero.
std::vector<SpectrumEntry> berger_spectrum(double t, std::size_t count);

/// Same, with the exact x supplied by the caller.
std::vector<SpectrumEntry> berger_spectrum_at(const Rational& x, double t, std::size_t count);

}  // namespace bergerspec
