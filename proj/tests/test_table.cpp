#include "bergerspec/table.hpp"

#include "bergerspec/rational.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>

using namespace bergerspec;

TEST_CASE("rational text round trip") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long long> num(-1000000, 1000000);
  std::uniform_int_distribution<long long> den(1, 100000);
  for (int j = 0; j < 200; ++j) {
    const Rational q(num(rng), den(rng));
    CHECK(parse_rational(to_string(q)) == q);
  }
  CHECK(to_string(Rational(2, 35)) == "2/35");
  CHECK(to_string(Rational(6)) == "6");
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational(" 10/49 ") == Rational(10, 49));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("doubles convert to their exact binary rational") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(6.0) == 6);
  CHECK(rational_from_double(-0.75) == Rational(-3, 4));
  CHECK(to_double(rational_from_double(0.1)) == 0.1);
  CHECK(rational_from_double(0.1) != Rational(1, 10));
}

TEST_CASE("CSV output re-parses to the written values") {
  Table t;
  t.comments = {"first line", "second, with comma"};
  t.columns = {"k", "value", "A", "mode"};
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> real(-50.0, 50.0);
  std::vector<double> reals;
  std::vector<Rational> exact;
  for (int j = 0; j < 50; ++j) {
    reals.push_back(real(rng));
    exact.emplace_back(j * 7 - 3, j + 11);
    t.add_row({std::int64_t{j}, reals.back(), to_string(exact.back()), std::string("(1,1)+(2,0)")});
  }
  const auto parsed = parse_csv(to_csv(t, 12));
  CHECK(parsed.comments == t.comments);
  CHECK(parsed.columns == t.columns);
  REQUIRE(parsed.rows.size() == 50);
  for (std::size_t j = 0; j < 50; ++j) {
    CHECK(std::stoll(parsed.rows[j][0]) == static_cast<long long>(j));
    CHECK(std::stod(parsed.rows[j][1]) == doctest::Approx(reals[j]).epsilon(1e-11));
    CHECK(parse_rational(parsed.rows[j][2]) == exact[j]);
    CHECK(parsed.rows[j][3] == "(1,1)+(2,0)");
  }
  CHECK_THROWS_AS(t.add_row({std::int64_t{1}}), std::logic_error);
}

TEST_CASE("JSON output") {
  Table t;
  t.columns = {"k", "eigenvalue", "breakpoint"};
  t.add_row({std::int64_t{2}, 1.0 / 3.0, std::string("2/9")});
  const auto j = nlohmann::json::parse(to_json(t, 6));
  REQUIRE(j.is_array());
  CHECK(j[0]["k"] == 2);
  CHECK(j[0]["eigenvalue"].get<double>() == 0.333333);
  CHECK(j[0]["breakpoint"] == "2/9");
}

TEST_CASE("precision bounds") {
  CHECK(format_real(1.0 / 3.0, 3) == "0.333");
  CHECK_THROWS_AS(format_real(1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(format_real(1.0, 31), std::invalid_argument);
}
