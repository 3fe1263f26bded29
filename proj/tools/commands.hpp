#pragma once

#include "bergerspec/page_constants.hpp"
#include "bergerspec/rational.hpp"
#include "bergerspec/table.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace bergerspec::cli {

/// Bad flag values; the tool exits with status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Table sphere_table(unsigned dim, std::uint64_t k_max);

struct BergerRequest {
  std::optional<double> t;
  std::optional<double> epsilon;
  std::size_t count = 12;
  bool with_multiplicity = false;
};
Table berger_table(const BergerRequest& request);

Table piecewise_table(std::size_t index, const Rational& x_max);

enum class Space { Cp2, Page };

struct IndexRequest {
  Space space = Space::Cp2;
  std::optional<double> r;
  std::optional<double> scan_min;
  std::optional<double> scan_max;
  unsigned scan_steps = 0;
  bool roots_only = false;
  double tol = 1e-6;
  std::size_t depth = 25;
};
Table index_table(const IndexRequest& request, const PageConstants& constants);

enum class Figure { Fig1, Fig2, Fig3 };
Table figure_table(Figure figure, unsigned points, const PageConstants& constants);

}  // namespace bergerspec::cli
