#include "bergerspec/page_constants.hpp"

#include "bergerspec/rational.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

namespace bergerspec {

namespace {

constexpr std::string_view kBuiltinA = "0.2817015579087740059233426511170073196572";

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double exact_decimal(const std::string& key, const std::string& text) {
  try {
    return to_double(parse_rational(text));
  } catch (const std::invalid_argument& e) {
    throw PageTranscriptionError("page constants: bad value for '" + key + "': " + e.what());
  }
}

double cos2(double r) {
  const double c = std::cos(r);
  return c * c;
}

}  // namespace

PageConstants PageConstants::builtin() {
  PageConstants pc;
  pc.a_text = std::string(kBuiltinA);
  pc.a = to_double(parse_rational(kBuiltinA));
  pc.validate();
  return pc;
}

PageConstants PageConstants::parse(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw PageTranscriptionError("page constants line " + std::to_string(lineno) + ": expected key = value");
    }
    kv[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
  }

  auto require = [&kv](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw PageTranscriptionError("page constants: missing key '" + key + "'");
    return it->second;
  };

  PageConstants pc;
  pc.version = require("format");
  if (pc.version != "page-constants/1") {
    throw PageTranscriptionError("page constants: unsupported format '" + pc.version + "'");
  }
  pc.a_text = require("a");
  pc.a = exact_decimal("a", pc.a_text);
  {
    std::istringstream coeffs(require("a_minimal_polynomial"));
    std::string tok;
    std::size_t n = 0;
    while (coeffs >> tok) {
      if (n == pc.minimal_polynomial.size()) {
        throw PageTranscriptionError("page constants: a_minimal_polynomial must be quartic");
      }
      pc.minimal_polynomial[n++] = exact_decimal("a_minimal_polynomial", tok);
    }
    if (n != pc.minimal_polynomial.size()) {
      throw PageTranscriptionError("page constants: a_minimal_polynomial must have 5 coefficients");
    }
  }
  pc.base_scale = exact_decimal("base_scale", require("base_scale"));
  pc.fiber_scale = exact_decimal("fiber_scale", require("fiber_scale"));
  pc.scalar_curvature_factor =
      exact_decimal("scalar_curvature_factor", require("scalar_curvature_factor"));
  pc.validate();
  return pc;
}

PageConstants PageConstants::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PageTranscriptionError("cannot read page constants file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string PageConstants::serialize() const {
  std::ostringstream out;
  out.precision(17);
  out << "# Page metric Berger-slice coefficients\n"
      << "#   g = V dr^2 + f (s1^2 + s2^2) + (C sin^2 r / V) s3^2\n"
      << "#   f = base_scale (1 - a^2 cos^2 r) / (3 + 6a^2 - a^4)\n"
      << "#   V = (1 - a^2 cos^2 r) / (3 - a^2 - a^2 (1 + a^2) cos^2 r)\n"
      << "#   C = fiber_scale / (3 + a^2)^2, U = sqrt(V), D = sqrt(C)\n"
      << "#   scalar curvature = scalar_curvature_factor (1 + a^2)\n"
      << "format = " << version << "\n"
      << "a = " << a_text << "\n"
      << "a_minimal_polynomial =";
  for (double c : minimal_polynomial) out << ' ' << c;
  out << "\n"
      << "base_scale = " << base_scale << "\n"
      << "fiber_scale = " << fiber_scale << "\n"
      << "scalar_curvature_factor = " << scalar_curvature_factor << "\n";
  return out.str();
}

void PageConstants::validate() const {
  if (!(a > 0.0 && a < 1.0)) throw PageTranscriptionError("page constants: a must lie in (0, 1)");
  double poly = 0.0;
  for (double c : minimal_polynomial) poly = poly * a + c;
  if (std::abs(poly) > 1e-12) {
    throw PageTranscriptionError("page constants: a is not a root of its minimal polynomial (residual " +
                                 std::to_string(poly) + ")");
  }
  const double s = scalar_curvature();
  if (!(s >= 12.95 && s <= 12.96)) {
    throw PageTranscriptionError("page constants: scalar curvature " + std::to_string(s) +
                                 " outside [12.95, 12.96]");
  }
  if (!(base_scale > 0.0) || !(fiber_scale > 0.0)) {
    throw PageTranscriptionError("page constants: scales must be positive");
  }
  for (int j = 1; j <= 50; ++j) {
    const double r = std::numbers::pi * j / 51.0;
    const double lhs = std::sqrt(C() / V(r));
    const double rhs = D() / U(r);
    if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(lhs))) {
      throw PageTranscriptionError("page constants: sqrt(C/V) != D/U at r = " + std::to_string(r));
    }
  }
}

double PageConstants::scalar_curvature() const { return scalar_curvature_factor * (1.0 + a * a); }

double PageConstants::f(double r) const {
  const double a2 = a * a;
  return base_scale * (1.0 - a2 * cos2(r)) / (3.0 + 6.0 * a2 - a2 * a2);
}

double PageConstants::V(double r) const {
  const double a2 = a * a;
  const double c2 = cos2(r);
  return (1.0 - a2 * c2) / (3.0 - a2 - a2 * (1.0 + a2) * c2);
}

double PageConstants::U(double r) const { return std::sqrt(V(r)); }

double PageConstants::C() const {
  const double b = 3.0 + a * a;
  return fiber_scale / (b * b);
}

double PageConstants::D() const { return std::sqrt(C()); }

double PageConstants::fiber_width(double r) const { return D() * std::sin(r) / U(r); }

}  // namespace bergerspec
