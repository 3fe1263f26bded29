#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace bergerspec {

class NoSignChange : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Bisects [lo, hi] until the bracket is no wider than tol and returns its
/// midpoint. Requires fn(lo)·fn(hi) < 0 (or an endpoint root); throws
/// NoSignChange otherwise and std::domain_error on non-finite values.
double find_root_bisection(const std::function<double(double)>& fn, double lo, double hi,
                           double tol);

/// Roots of fn on (lo, hi): sign changes between consecutive points of a
/// uniform grid with `cells` cells (endpoints excluded), each refined by
/// bisection to tol.
std::vector<double> scan_roots(const std::function<double(double)>& fn, double lo, double hi,
                               unsigned cells, double tol);

}  // namespace bergerspec
