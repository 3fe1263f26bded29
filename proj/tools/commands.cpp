#include "commands.hpp"

#include "bergerspec/berger_spectra.hpp"
#include "bergerspec/geodesic_slices.hpp"
#include "bergerspec/harmonic_spectra.hpp"

#include <cmath>
#include <numbers>

namespace bergerspec::cli {

namespace {

std::int64_t i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::string mode_text(const std::optional<Mode>& m) { return m ? m->label() : std::string("-"); }

std::string format_roots(const PageRoots& roots) {
  return "roots: r1 = " + format_real(roots.r1, 17) + ", r2 = " + format_real(roots.r2, 17);
}

void add_report_row(Table& table, const IndexNullityReport& report, double first_shifted) {
  table.add_row({report.parameter, i64(report.index), i64(report.nullity), first_shifted,
                 report.truncation_bound, std::string(report.certified ? "yes" : "no"), report.note});
}

}  // namespace

Table sphere_table(unsigned dim, std::uint64_t k_max) {
  if (dim < 1) throw UsageError("--dim must be >= 1");
  Table table;
  table.comments = {"Laplace spectrum of the unit round " + std::to_string(dim) + "-sphere"};
  table.columns = {"k", "eigenvalue", "multiplicity"};
  for (const auto& e : sphere_spectrum(dim, k_max)) {
    table.add_row({i64(e.degree), i64(e.eigenvalue), i64(e.multiplicity)});
  }
  return table;
}

Table berger_table(const BergerRequest& request) {
  if (request.t.has_value() == request.epsilon.has_value()) {
    throw UsageError("give exactly one of --t and --epsilon");
  }
  if (request.count == 0) throw UsageError("--count must be positive");
  Table table;
  Rational x;
  double t = 0.0;
  double mu = 1.0;
  if (request.t) {
    t = *request.t;
    if (!(t > 0.0)) throw UsageError("--t must be positive");
    x = rational_from_double(1.0 / (t * t * t));
    table.comments.push_back("unit-volume Berger sphere g_B^t, t = " + format_real(t, 17));
  } else {
    const double eps = *request.epsilon;
    if (!(eps > 0.0)) throw UsageError("--epsilon must be positive");
    // s1^2 + s2^2 + eps^2 s3^2 = eps^(2/3) g_B^t with t = eps^(2/3), x = eps^-2.
    t = std::cbrt(eps * eps);
    mu = t;
    x = rational_from_double(1.0 / (eps * eps));
    table.comments.push_back("epsilon metric s1^2+s2^2+eps^2 s3^2 = eps^(2/3) g_B^t, eps = " +
                             format_real(eps, 17));
  }
  table.comments.push_back("x = t^-3 = " + to_string(x));
  table.comments.push_back("ordinal counts distinct values from 0 (constants); nonzero_index counts nonzero ones from 1");
  table.columns = {"ordinal", "nonzero_index", "value", "A", "B", "mode"};
  if (request.with_multiplicity) {
    table.columns.push_back("multiplicity");
    table.columns.push_back("level_multiplicity");
  }
  const auto levels = distinct_spectrum_at(x, request.count);
  for (std::size_t j = 0; j < levels.size(); ++j) {
    const double value = t * to_double(levels[j].coefficient) / mu;
    for (const Mode& m : levels[j].modes) {
      std::vector<Cell> row{static_cast<std::int64_t>(j), static_cast<std::int64_t>(j), value,
                            to_string(Rational(m.a())), to_string(Rational(m.b())), m.label()};
      if (request.with_multiplicity) {
        row.emplace_back(i64(mode_multiplicity(m)));
        row.emplace_back(i64(levels[j].multiplicity()));
      }
      table.add_row(std::move(row));
    }
  }
  return table;
}

Table piecewise_table(std::size_t index, const Rational& x_max) {
  if (index < 1) throw UsageError("--index must be >= 1");
  if (x_max <= 0) throw UsageError("--xmax must be positive");
  Table table;
  table.comments = {"nonzero distinct eigenvalue " + std::to_string(index) +
                        " of g_B^t is t (A + B x) on each segment, x = t^-3",
                    "segments partition (0, xmax]; breakpoints are exact"};
  table.columns = {"x_lo", "x_hi", "A", "B", "mode"};
  for (const auto& seg : kth_distinct_piecewise(index, x_max)) {
    table.add_row({to_string(seg.lo), to_string(seg.hi), to_string(seg.branch.a),
                   to_string(seg.branch.b), mode_text(seg.branch.source)});
  }
  return table;
}

Table index_table(const IndexRequest& request, const PageConstants& constants) {
  if (request.depth < 2) throw UsageError("--depth must be >= 2");
  if (!(request.tol > 0.0)) throw UsageError("--tol must be positive");
  const bool scan = request.scan_min.has_value();
  const int modes = static_cast<int>(request.r.has_value()) + static_cast<int>(scan) +
                    static_cast<int>(request.roots_only);
  if (modes != 1) throw UsageError("give exactly one of --r, --scan, --roots");
  if (request.roots_only && request.space == Space::Cp2) {
    throw UsageError("--roots applies to the page space only");
  }

  const double upper = request.space == Space::Cp2 ? std::numeric_limits<double>::infinity()
                                                   : std::numbers::pi;
  auto check_r = [upper](double r) {
    if (!(r > 0.0 && r < upper)) {
      throw UsageError("r = " + format_real(r, 17) + " outside the slice domain");
    }
  };

  std::vector<double> grid;
  if (request.r) {
    check_r(*request.r);
    grid.push_back(*request.r);
  } else if (scan) {
    if (request.scan_steps < 1) throw UsageError("--scan needs at least one step");
    check_r(*request.scan_min);
    check_r(*request.scan_max);
    if (!(*request.scan_min <= *request.scan_max)) throw UsageError("--scan needs rmin <= rmax");
    const unsigned n = request.scan_steps;
    for (unsigned j = 0; j <= n; ++j) {
      grid.push_back(*request.scan_min + (*request.scan_max - *request.scan_min) * j / n);
    }
  }

  Table table;
  table.columns = {"r", "index", "nullity", "first_shifted", "certification_bound", "certified", "note"};
  if (request.space == Space::Cp2) {
    table.comments = {"geodesic Berger spheres in CP2, Jacobi shift 3/2"};
    for (double r : grid) add_report_row(table, cp2_index_nullity(r, request.depth), cp2_lambda1(r) - 1.5);
    return table;
  }

  const PageRoots roots = page_transition_roots(request.tol, constants);
  table.comments = {"totally geodesic Berger spheres in the Page space, Jacobi shift " +
                        format_real(constants.scalar_curvature() / 4.0, 17),
                    format_roots(roots)};
  if (request.roots_only) {
    table.columns = {"root", "r"};
    table.rows.clear();
    table.add_row({std::string("r1"), roots.r1});
    table.add_row({std::string("r2"), roots.r2});
    return table;
  }
  const double certified[] = {roots.r1, roots.r2};
  for (double r : grid) {
    add_report_row(table, page_index_nullity(r, request.depth, constants, certified, request.tol),
                   page_shifted_lambda1(r, constants));
  }
  return table;
}

Table figure_table(Figure figure, unsigned points, const PageConstants& constants) {
  if (points < 2) throw UsageError("--points must be >= 2");
  Table table;
  switch (figure) {
    case Figure::Fig1: {
      table.comments = {"Berger sphere Laplace eigenvalues lambda_i(t), i = 1..11",
                        "engine ordering: i-th smallest distinct nonzero value; coinciding branches "
                        "(e.g. lambda2 and lambda3 both 8t for t^-3 >= 1 in the published list) "
                        "occupy one position here"};
      table.columns = {"t"};
      for (int i = 1; i <= 11; ++i) table.columns.push_back("lambda" + std::to_string(i));
      const double lo = 0.25;
      const double hi = 2.5;
      for (unsigned j = 0; j < points; ++j) {
        const double t = lo + (hi - lo) * j / (points - 1);
        const auto levels = distinct_spectrum_at(rational_from_double(1.0 / (t * t * t)), 12);
        std::vector<Cell> row{t};
        for (std::size_t i = 1; i <= 11; ++i) row.emplace_back(t * to_double(levels[i].coefficient));
        table.add_row(std::move(row));
      }
      break;
    }
    case Figure::Fig2: {
      table.comments = {"first nonzero Jacobi eigenvalue of the CP2 geodesic Berger spheres, lambda1(r) - 3/2"};
      table.columns = {"r", "jacobi_lambda1"};
      const double lo = std::log(0.1);
      const double hi = std::log(10.0);
      for (unsigned j = 0; j < points; ++j) {
        const double r = std::exp(lo + (hi - lo) * j / (points - 1));
        table.add_row({r, cp2_lambda1(r) - 1.5});
      }
      break;
    }
    case Figure::Fig3: {
      table.comments = {"first 6 distinct Jacobi eigenvalues of the Page Berger spheres (constant mode first)",
                        "shift " + format_real(constants.scalar_curvature() / 4.0, 17)};
      try {
        table.comments.push_back(format_roots(page_transition_roots(1e-6, constants)));
      } catch (const StructuralError& e) {
        table.comments.push_back(std::string("roots unavailable: ") + e.what());
      }
      table.columns = {"r"};
      for (int i = 0; i < 6; ++i) table.columns.push_back("jacobi" + std::to_string(i));
      const PageSlices family(constants);
      const double shift = constants.scalar_curvature() / 4.0;
      for (unsigned j = 1; j <= points; ++j) {
        const double r = std::numbers::pi * j / (points + 1);
        const auto spectrum = slice_spectrum(family.at(r), 6);
        std::vector<Cell> row{r};
        for (const auto& e : spectrum) row.emplace_back(e.value - shift);
        table.add_row(std::move(row));
      }
      break;
    }
  }
  return table;
}

}  // namespace bergerspec::cli
