#pragma once

#include "bergerspec/berger_spectra.hpp"
#include "bergerspec/jacobi_index.hpp"
#include "bergerspec/page_constants.hpp"
#include "bergerspec/rational.hpp"

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bergerspec {

/// Signals a result that contradicts the expected structure of a family, e.g.
/// a root count other than two for the Page profile.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Berger metric f(σ1² + σ2²) + w²σ3² sitting at parameter r inside an
/// Einstein ambient. It equals μ·g_B^t with μ = (f w)^{2/3} and
/// t = w^{2/3} f^{-1/3}, so Laplace eigenvalues are t(A + B t^-3)/μ = (A + B x)/f
/// with x = t^-3 = f / w².
struct SliceGeometry {
  double r = 0.0;
  double f = 1.0;
  double w = 1.0;
  EinsteinAmbient ambient;

  [[nodiscard]] double volume_factor() const;
  [[nodiscard]] double squash() const;
  [[nodiscard]] double squash_x() const { return f / (w * w); }
};

constexpr std::size_t kDefaultDepth = 25;

class SliceFamily {
 public:
  virtual ~SliceFamily() = default;
  [[nodiscard]] virtual SliceGeometry at(double r) const = 0;
  /// Open parameter domain (lower, upper).
  [[nodiscard]] virtual double lower() const = 0;
  [[nodiscard]] virtual double upper() const = 0;
  [[nodiscard]] virtual std::string name() const = 0;
};

/// Geodesic spheres of radius parameter r in ℂP²: f = r²/(1+r²), w² = r²/(1+r²)².
class Cp2Slices final : public SliceFamily {
 public:
  [[nodiscard]] SliceGeometry at(double r) const override;
  [[nodiscard]] double lower() const override { return 0.0; }
  [[nodiscard]] double upper() const override;
  [[nodiscard]] std::string name() const override { return "cp2"; }
};

/// Totally geodesic Berger spheres r = const of the Page space, r ∈ (0, π).
class PageSlices final : public SliceFamily {
 public:
  explicit PageSlices(PageConstants constants) : constants_(std::move(constants)) {}
  [[nodiscard]] SliceGeometry at(double r) const override;
  [[nodiscard]] double lower() const override { return 0.0; }
  [[nodiscard]] double upper() const override;
  [[nodiscard]] std::string name() const override { return "page"; }
  [[nodiscard]] const PageConstants& constants() const { return constants_; }
  [[nodiscard]] EinsteinAmbient ambient() const;

 private:
  PageConstants constants_;
};

/// Arbitrary smooth (f, w) on (lower, upper) for exercising the machinery
/// independently of any transcribed metric.
class SyntheticSlices final : public SliceFamily {
 public:
  SyntheticSlices(std::function<double(double)> f, std::function<double(double)> w, double lower,
                  double upper, EinsteinAmbient ambient);
  [[nodiscard]] SliceGeometry at(double r) const override;
  [[nodiscard]] double lower() const override { return lower_; }
  [[nodiscard]] double upper() const override { return upper_; }
  [[nodiscard]] std::string name() const override { return "synthetic"; }

 private:
  std::function<double(double)> f_;
  std::function<double(double)> w_;
  double lower_;
  double upper_;
  EinsteinAmbient ambient_;
};

/// First `depth` distinct Laplace eigenvalues of the slice, zero included.
std::vector<SpectrumEntry> slice_spectrum(const SliceGeometry& slice, std::size_t depth);

/// First nonzero Laplace eigenvalue minus the Jacobi shift, from the Tanno
/// branches: (2 + x)/f for x <= 6, 8/f beyond.
double shifted_lambda1(const SliceGeometry& slice);

/// Index and nullity of the slice through `depth` distinct eigenvalues. At a
/// certified transition root the level closest to zero is counted as null.
IndexNullityReport slice_index_nullity(const SliceGeometry& slice, std::size_t depth,
                                       bool at_certified_root = false);

/// Sign changes of shifted_lambda1 over the open domain, scanned on `cells`
/// uniform cells and bisected to tol.
std::vector<double> transition_roots(const SliceFamily& family, double tol, unsigned cells);

/// Report at r, with nullity assigned when r is within root_tol of a root.
IndexNullityReport profile_index_nullity(const SliceFamily& family, double r, std::size_t depth,
                                         std::span<const double> certified_roots,
                                         double root_tol);

// ℂP² ---------------------------------------------------------------------

SliceGeometry cp2_slice(double r);
/// μ = r²/(1+r²)^{4/3}.
double cp2_volume_factor(double r);
/// t = (1+r²)^{-1/3}.
double cp2_squash(double r);
/// tanno_lambda1(t(r)) / μ(r).
double cp2_lambda1(double r);
/// (3 + r²)(1 + r²)/r² for r <= √5, 8(1 + r²)/r² beyond.
double cp2_lambda1_closed_form(double r);
/// Exact first eigenvalue for rational r²; the branch is chosen on x = 1 + r².
Rational cp2_lambda1_exact(const Rational& r_squared);
IndexNullityReport cp2_index_nullity(double r, std::size_t depth = kDefaultDepth);

// Page space ----------------------------------------------------------------

const PageConstants& page_constants();
SliceGeometry page_slice(double r, const PageConstants& constants = page_constants());
/// Piecewise shifted first eigenvalue; branch switch at t^-3 = f U² / (D² sin²r) = 6.
double page_shifted_lambda1(double r, const PageConstants& constants = page_constants());
/// Unbranched 2/f + U²/(D² sin²r) - 3(1 + a²).
double page_tanno_branch(double r, const PageConstants& constants = page_constants());

struct PageRoots {
  double r1 = 0.0;
  double r2 = 0.0;
};

constexpr unsigned kPageScanCells = 1024;

/// The two zeros of page_shifted_lambda1 on (0, π). Throws StructuralError
/// when the scan finds any other number of sign changes.
PageRoots page_transition_roots(double tol, const PageConstants& constants = page_constants());

IndexNullityReport page_index_nullity(double r, std::size_t depth = kDefaultDepth,
                                      const PageConstants& constants = page_constants(),
                                      std::span<const double> certified_roots = {},
                                      double root_tol = 1e-6);

}  // namespace bergerspec
