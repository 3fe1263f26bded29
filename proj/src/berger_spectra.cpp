#include "bergerspec/berger_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace bergerspec {

namespace {

using boost::multiprecision::cpp_int;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be a positive finite number");
  }
}

// Upper bound on the count-th smallest distinct value of A + Bx (zero included):
// the constant branches k(k+2), k even, and the fiber branches 2k + k²x are
// each `count` distinct values.
double distinct_value_bound(double x, std::size_t count) {
  const double c = static_cast<double>(count - 1);
  const double constant_bound = (2.0 * c) * (2.0 * c + 2.0);
  const double fiber_bound = 2.0 * c + c * c * x;
  return std::min(constant_bound, fiber_bound);
}

}  // namespace

std::string Mode::label() const { return "(" + std::to_string(k) + "," + std::to_string(q) + ")"; }

AffineBranch AffineBranch::of(const Mode& m) {
  if (!m.valid()) throw std::invalid_argument("invalid Berger mode " + m.label());
  return AffineBranch{Rational(m.a()), Rational(m.b()), m};
}

double AffineBranch::eigenvalue(double t) const {
  require_positive(t, "squash parameter t");
  return t * (to_double(a) + to_double(b) / (t * t * t));
}

SquashParam SquashParam::from_t(double t) {
  require_positive(t, "squash parameter t");
  return {t, 1.0 / (t * t * t)};
}

SquashParam SquashParam::from_x(double x) {
  require_positive(x, "squash coordinate x");
  return {1.0 / std::cbrt(x), x};
}

std::uint64_t DistinctLevel::multiplicity() const {
  std::uint64_t total = 0;
  for (const Mode& m : modes) total += mode_multiplicity(m);
  return total;
}

std::string DistinctLevel::source() const {
  if (modes.size() == 1 && modes.front() == Mode{0, 0}) return "constant";
  std::string out;
  for (const Mode& m : modes) {
    if (!out.empty()) out += '+';
    out += m.label();
  }
  return out;
}

double mode_value(const Mode& m, double t) {
  if (!m.valid()) throw std::invalid_argument("invalid Berger mode " + m.label());
  require_positive(t, "squash parameter t");
  const double k = m.k;
  const double q = m.q;
  return t * k * (k + 2.0) - t * (1.0 - 1.0 / (t * t * t)) * q * q;
}

std::uint64_t mode_multiplicity(const Mode& m) {
  if (!m.valid()) throw std::invalid_argument("invalid Berger mode " + m.label());
  return m.q == 0 ? m.k + 1u : 2u * (m.k + 1u);
}

std::vector<Mode> enumerate_modes(unsigned k_max) {
  std::vector<Mode> out;
  for (unsigned k = 0; k <= k_max; ++k) {
    for (unsigned q = k % 2; q <= k; q += 2) out.push_back({k, q});
  }
  return out;
}

std::vector<DistinctLevel> distinct_spectrum_at(const Rational& x, std::size_t count) {
  if (count == 0) throw std::invalid_argument("count must be positive");
  if (x <= 0) throw std::invalid_argument("squash coordinate x must be positive");

  const cpp_int num = boost::multiprecision::numerator(x);
  const cpp_int den = boost::multiprecision::denominator(x);
  const double xd = to_double(x);
  // Every mode whose value is at most `bound` is enumerated, so the smallest
  // `count` distinct values found are complete. A >= 2k bounds k.
  const double bound = distinct_value_bound(xd, count);
  const cpp_int bound_key = cpp_int(static_cast<long long>(std::ceil(bound)) + 1) * den;

  std::map<cpp_int, std::vector<Mode>> levels;
  const auto k_max = static_cast<unsigned>(std::floor(bound / 2.0)) + 1;
  for (unsigned k = 0; k <= k_max; ++k) {
    const double base = static_cast<double>(k) * (k + 2.0);
    // Value is k(k+2) + q²(x-1); restrict q with floating bounds plus slack,
    // the exact key comparison below decides.
    double q_lo = 0.0;
    double q_hi = static_cast<double>(k);
    if (xd > 1.0) {
      q_hi = std::min(q_hi, std::sqrt(std::max(0.0, (bound - base) / (xd - 1.0))) + 1.0);
    } else if (xd < 1.0) {
      q_lo = std::max(0.0, std::sqrt(std::max(0.0, (base - bound) / (1.0 - xd))) - 1.0);
    }
    if (xd >= 1.0 && base > bound + 1.0) continue;
    for (unsigned q = k % 2; q <= k; q += 2) {
      if (q + 1.0 < q_lo || q > q_hi) continue;
      const Mode m{k, q};
      cpp_int key = cpp_int(m.a()) * den + cpp_int(m.b()) * num;
      if (key > bound_key) continue;
      levels[std::move(key)].push_back(m);
    }
  }

  if (levels.size() < count) {
    throw std::logic_error("distinct spectrum enumeration incomplete");
  }
  std::vector<DistinctLevel> out;
  out.reserve(count);
  for (auto& [key, modes] : levels) {
    if (out.size() == count) break;
    out.push_back({Rational(key, den), std::move(modes)});
  }
  return out;
}

std::optional<Rational> branch_crossing(const AffineBranch& lhs, const AffineBranch& rhs) {
  if (lhs.same_line(rhs)) throw std::invalid_argument("identical branches have no isolated crossing");
  if (lhs.b == rhs.b) return std::nullopt;
  Rational x = (rhs.a - lhs.a) / (lhs.b - rhs.b);
  if (x <= 0) return std::nullopt;
  return x;
}

std::vector<PiecewiseSegment> kth_distinct_piecewise(std::size_t i, const Rational& x_max) {
  if (i == 0) throw std::invalid_argument("position must be >= 1");
  if (x_max <= 0) throw std::invalid_argument("x_max must be positive");

  // Position i is bounded above by the i-th constant branch 2i(2i+2), so lines
  // starting above it never reach positions 0..i.
  const auto cap = static_cast<std::int64_t>(2 * i) * static_cast<std::int64_t>(2 * i + 2);
  std::vector<AffineBranch> lines;
  for (unsigned k = 0; static_cast<std::int64_t>(2 * k) <= cap; ++k) {
    for (unsigned q = k % 2; q <= k; q += 2) {
      const Mode m{k, q};
      if (m.a() <= cap) lines.push_back(AffineBranch::of(m));
    }
  }

  // Ordering just to the right of x0: by value, then by slope.
  auto position_at = [&lines, i](const Rational& x0) -> std::size_t {
    std::vector<std::pair<Rational, std::size_t>> keyed;
    keyed.reserve(lines.size());
    for (std::size_t j = 0; j < lines.size(); ++j) keyed.emplace_back(lines[j].at(x0), j);
    std::nth_element(keyed.begin(), keyed.begin() + static_cast<std::ptrdiff_t>(i), keyed.end(),
                     [&lines](const auto& l, const auto& r) {
                       if (l.first != r.first) return l.first < r.first;
                       return lines[l.second].b < lines[r.second].b;
                     });
    return keyed[i].second;
  };

  std::vector<PiecewiseSegment> out;
  Rational x0 = 0;
  while (x0 < x_max) {
    const std::size_t current = position_at(x0);
    const AffineBranch& line = lines[current];
    Rational next = x_max;
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j == current) continue;
      auto cross = branch_crossing(line, lines[j]);
      if (cross && *cross > x0 && *cross < next) next = *cross;
    }
    if (!out.empty() && out.back().branch.same_line(line)) {
      out.back().hi = next;
    } else {
      out.push_back({x0, next, line});
    }
    x0 = next;
  }
  return out;
}

Rational evaluate_piecewise(std::span<const PiecewiseSegment> segments, const Rational& x) {
  for (const auto& seg : segments) {
    if (x > seg.lo && x <= seg.hi) return seg.branch.at(x);
  }
  throw std::out_of_range("x = " + to_string(x) + " outside the piecewise domain");
}

double tanno_lambda1(double t) {
  require_positive(t, "squash parameter t");
  const double x = 1.0 / (t * t * t);
  return x >= 6.0 ? 8.0 * t : t * (2.0 + x);
}

Rational tanno_coefficient(const Rational& x) {
  if (x <= 0) throw std::invalid_argument("x must be positive");
  return x >= 6 ? Rational(8) : Rational(2) + x;
}

double epsilon_lambda1(double epsilon) {
  require_positive(epsilon, "epsilon");
  const double t = std::cbrt(epsilon * epsilon);
  const SpectrumEntry first{tanno_lambda1(t), 4, "(1,1)"};
  return scale_spectrum(std::span(&first, 1), t).front().value;
}

std::vector<SpectrumEntry> scale_spectrum(std::span<const SpectrumEntry> entries, double mu) {
  require_positive(mu, "scale factor mu");
  std::vector<SpectrumEntry> out(entries.begin(), entries.end());
  for (auto& e : out) e.value /= mu;
  return out;
}

std::vector<SpectrumEntry> berger_spectrum_at(const Rational& x, double t, std::size_t count) {
  require_positive(t, "squash parameter t");
  std::vector<SpectrumEntry> out;
  for (const auto& level : distinct_spectrum_at(x, count)) {
    out.push_back({t * to_double(level.coefficient), level.multiplicity(), level.source()});
  }
  return out;
}

std::vector<SpectrumEntry> berger_spectrum(double t, std::size_t count) {
  require_positive(t, "squash parameter t");
  return berger_spectrum_at(rational_from_double(1.0 / (t * t * t)), t, count);
}

}  // namespace bergerspec
