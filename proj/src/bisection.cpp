#include "bergerspec/bisection.hpp"

#include <cmath>
#include <string>

namespace bergerspec {

namespace {

double checked(const std::function<double(double)>& fn, double x) {
  const double v = fn(x);
  if (!std::isfinite(v)) {
    throw std::domain_error("non-finite function value at x = " + std::to_string(x));
  }
  return v;
}

}  // namespace

double find_root_bisection(const std::function<double(double)>& fn, double lo, double hi,
                           double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("bisection tolerance must be positive");
  if (!(lo < hi)) throw std::invalid_argument("bisection bracket must satisfy lo < hi");
  double f_lo = checked(fn, lo);
  const double f_hi = checked(fn, hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    throw NoSignChange("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at double resolution
    const double f_mid = checked(fn, mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> scan_roots(const std::function<double(double)>& fn, double lo, double hi,
                               unsigned cells, double tol) {
  if (cells < 2) throw std::invalid_argument("root scan needs at least two cells");
  const double step = (hi - lo) / cells;
  std::vector<double> roots;
  double prev_x = lo + step;
  double prev_v = checked(fn, prev_x);
  for (unsigned j = 2; j < cells; ++j) {
    const double x = lo + step * j;
    const double v = checked(fn, x);
    if (prev_v == 0.0) {
      roots.push_back(prev_x);
    } else if ((prev_v < 0.0) != (v < 0.0) && v != 0.0) {
      roots.push_back(find_root_bisection(fn, prev_x, x, tol));
    }
    prev_x = x;
    prev_v = v;
  }
  if (prev_v == 0.0) roots.push_back(prev_x);
  return roots;
}

}  // namespace bergerspec
