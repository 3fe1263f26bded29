#include "bergerspec/geodesic_slices.hpp"

#include "bergerspec/bisection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bergerspec {

namespace {

void require_in_domain(const SliceFamily& family, double r) {
  if (!(r > family.lower() && r < family.upper())) {
    throw std::domain_error(family.name() + " slice parameter r = " + std::to_string(r) +
                            " outside its domain");
  }
}

}  // namespace

double SliceGeometry::volume_factor() const { return std::cbrt((f * w) * (f * w)); }

double SliceGeometry::squash() const { return std::cbrt(w * w / f); }

// ℂP² ---------------------------------------------------------------------

double Cp2Slices::upper() const { return std::numeric_limits<double>::infinity(); }

SliceGeometry Cp2Slices::at(double r) const {
  require_in_domain(*this, r);
  const double r2 = r * r;
  return {r, r2 / (1.0 + r2), r / (1.0 + r2), cp2_ambient()};
}

SliceGeometry cp2_slice(double r) { return Cp2Slices{}.at(r); }

double cp2_volume_factor(double r) {
  const double r2 = r * r;
  return r2 / std::pow(1.0 + r2, 4.0 / 3.0);
}

double cp2_squash(double r) { return 1.0 / std::cbrt(1.0 + r * r); }

double cp2_lambda1(double r) {
  require_in_domain(Cp2Slices{}, r);
  const SpectrumEntry first{tanno_lambda1(cp2_squash(r)), 4, "(1,1)"};
  return scale_spectrum(std::span(&first, 1), cp2_volume_factor(r)).front().value;
}

double cp2_lambda1_closed_form(double r) {
  require_in_domain(Cp2Slices{}, r);
  const double r2 = r * r;
  return r2 <= 5.0 ? (3.0 + r2) * (1.0 + r2) / r2 : 8.0 * (1.0 + r2) / r2;
}

Rational cp2_lambda1_exact(const Rational& r_squared) {
  if (r_squared <= 0) throw std::domain_error("cp2 slice needs r^2 > 0");
  const Rational x = 1 + r_squared;
  const Rational coefficient = x <= 6 ? Rational(2) + x : Rational(8);
  // t/μ = (1 + r²)/r².
  return coefficient * x / r_squared;
}

IndexNullityReport cp2_index_nullity(double r, std::size_t depth) {
  return slice_index_nullity(cp2_slice(r), depth);
}

// Page ----------------------------------------------------------------------

double PageSlices::upper() const { return std::numbers::pi; }

EinsteinAmbient PageSlices::ambient() const {
  return {"Page", 4, constants_.scalar_curvature(), AmbientCase::Hypersurface};
}

SliceGeometry PageSlices::at(double r) const {
  require_in_domain(*this, r);
  return {r, constants_.f(r), constants_.fiber_width(r), ambient()};
}

const PageConstants& page_constants() {
  static const PageConstants builtin = PageConstants::builtin();
  return builtin;
}

SliceGeometry page_slice(double r, const PageConstants& constants) {
  return PageSlices(constants).at(r);
}

double page_shifted_lambda1(double r, const PageConstants& constants) {
  return shifted_lambda1(page_slice(r, constants));
}

double page_tanno_branch(double r, const PageConstants& constants) {
  const SliceGeometry slice = page_slice(r, constants);
  const double s = std::sin(r);
  const double u = constants.U(r);
  const double d = constants.D();
  return 2.0 / slice.f + (u * u) / (d * d * s * s) - constants.scalar_curvature() / 4.0;
}

PageRoots page_transition_roots(double tol, const PageConstants& constants) {
  const auto roots = transition_roots(PageSlices(constants), tol, kPageScanCells);
  if (roots.size() != 2) {
    throw StructuralError("page profile: expected exactly 2 sign changes of the shifted first "
                          "eigenvalue on (0, pi), found " +
                          std::to_string(roots.size()));
  }
  return {roots[0], roots[1]};
}

IndexNullityReport page_index_nullity(double r, std::size_t depth, const PageConstants& constants,
                                      std::span<const double> certified_roots, double root_tol) {
  return profile_index_nullity(PageSlices(constants), r, depth, certified_roots, root_tol);
}

// Synthetic -----------------------------------------------------------------

SyntheticSlices::SyntheticSlices(std::function<double(double)> f, std::function<double(double)> w,
                                 double lower, double upper, EinsteinAmbient ambient)
    : f_(std::move(f)), w_(std::move(w)), lower_(lower), upper_(upper), ambient_(std::move(ambient)) {
  if (!(lower < upper)) throw std::invalid_argument("synthetic slice domain must be non-empty");
}

SliceGeometry SyntheticSlices::at(double r) const {
  require_in_domain(*this, r);
  const double f = f_(r);
  const double w = w_(r);
  if (!(f > 0.0) || !(w > 0.0)) {
    throw std::domain_error("synthetic slice degenerates at r = " + std::to_string(r));
  }
  return {r, f, w, ambient_};
}

// Shared machinery ------------------------------------------------------------

std::vector<SpectrumEntry> slice_spectrum(const SliceGeometry& slice, std::size_t depth) {
  const Rational x = rational_from_double(slice.squash_x());
  const auto normalized = berger_spectrum_at(x, slice.squash(), depth);
  return scale_spectrum(normalized, slice.volume_factor());
}

double shifted_lambda1(const SliceGeometry& slice) {
  const double x = slice.squash_x();
  const double coefficient = x <= 6.0 ? 2.0 + x : 8.0;
  return coefficient / slice.f - jacobi_shift(slice.ambient);
}

IndexNullityReport slice_index_nullity(const SliceGeometry& slice, std::size_t depth,
                                       bool at_certified_root) {
  const double shift = jacobi_shift(slice.ambient);
  auto jacobi = jacobi_spectrum(slice_spectrum(slice, depth), shift);
  std::string note;
  if (at_certified_root && jacobi.size() > 1) {
    auto nearest = std::min_element(jacobi.begin() + 1, jacobi.end(), [](const auto& l, const auto& r) {
      return std::abs(l.value) < std::abs(r.value);
    });
    nearest->value = 0.0;
    note = "certified transition root: level " + nearest->source +
           " counted as null; index uses strict negativity";
  }
  auto report = index_nullity(jacobi, default_zero_tolerance(shift), shift);
  report.parameter = slice.r;
  if (!note.empty()) report.note = report.note.empty() ? note : report.note + "; " + note;
  return report;
}

std::vector<double> transition_roots(const SliceFamily& family, double tol, unsigned cells) {
  const double hi = family.upper();
  if (!std::isfinite(hi)) throw std::invalid_argument("root scan needs a bounded domain");
  return scan_roots([&family](double r) { return shifted_lambda1(family.at(r)); }, family.lower(),
                    hi, cells, tol);
}

IndexNullityReport profile_index_nullity(const SliceFamily& family, double r, std::size_t depth,
                                         std::span<const double> certified_roots,
                                         double root_tol) {
  const bool at_root = std::any_of(certified_roots.begin(), certified_roots.end(),
                                   [r, root_tol](double root) { return std::abs(r - root) <= root_tol; });
  return slice_index_nullity(family.at(r), depth, at_root);
}

}  // namespace bergerspec
