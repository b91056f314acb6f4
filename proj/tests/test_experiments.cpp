#include <doctest.h>

#include <chrono>
#include <cmath>
#include <limits>

#include "dioph/errors.hpp"
#include "dioph/experiments.hpp"

using namespace dioph;

namespace {

Subscheme y(const char* gens, std::size_t n) { return Subscheme::parse_list("Y", gens, n); }
ProjectivePoint pt(const char* text) { return ProjectivePoint::parse(text); }

}  // namespace

TEST_CASE("sampling points") {
  const auto one = sample_points(1, 1);
  CHECK(one.size() == 4);
  CHECK(sample_points(1, 2).size() == 8);
  CHECK(sample_points(1, 0).empty());
  // Coprime pairs up to sign with |coords| <= 3: 2 axes + 4 * #{(a, b) coprime, 1 <= a, b <= 3} / 2.
  CHECK(sample_points(1, 3).size() == 16);
  for (const auto& p : sample_points(2, 2)) CHECK(p == ProjectivePoint(p.coords()));
  const auto pts = sample_points(2, 3);
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(height(pts[i - 1]) <= height(pts[i]));
}

TEST_CASE("exact weighted log comparison") {
  // (1/3) log 8 = log 2 against (1 + 1/2) log 2.
  CHECK_FALSE(weighted_log_exceeds({Rational(1, 3)}, {LogRational(8)}, Rational(3, 2), LogRational(2)));
  CHECK(weighted_log_exceeds({Rational(1, 3)}, {LogRational(27)}, Rational(1), LogRational(2)));
  // Equality is not a violation.
  CHECK_FALSE(weighted_log_exceeds({Rational(1, 2), Rational(1, 2)}, {LogRational(4), LogRational(9)},
                                   Rational(1), LogRational(6)));
}

TEST_CASE("scanning a single hyperplane") {
  InequalityConfig cfg;
  cfg.n = 2;
  cfg.subschemes = {y("x0", 2)};
  cfg.betas = {Rational(1, 3)};
  cfg.epsilon = Rational(1, 10);
  cfg.height_floor = LogRational(2);
  const auto points = sample_points(2, 6);
  const auto report = scan_inequality(cfg, points);
  CHECK(report.violations.empty());
  CHECK(report.skipped + report.evaluated + report.excluded == points.size());
  CHECK(report.skipped > 0);
  REQUIRE(report.max_ratio_row.has_value());
  CHECK(*report.rows[*report.max_ratio_row].ratio <= 1.0);
  CHECK(scan_inequality(cfg, {}).rows.empty());
}

TEST_CASE("scan flags violations above the floor") {
  // With a huge beta the inequality fails near the line.
  InequalityConfig cfg;
  cfg.n = 1;
  cfg.subschemes = {y("x0", 1)};
  cfg.betas = {Rational(5)};
  cfg.epsilon = Rational(1, 2);
  cfg.height_floor = LogRational(3);
  const auto report = scan_inequality(cfg, sample_points(1, 5));
  CHECK_FALSE(report.violations.empty());
  for (std::size_t i : report.violations) CHECK(report.rows[i].height >= LogRational(3));
  cfg.exceptional = {y("x0 - x1", 1)};
  const auto with_exceptional = scan_inequality(cfg, sample_points(1, 5));
  CHECK(with_exceptional.excluded == 1);
  CHECK(with_exceptional.zero_height == 2);  // [1:0] and [1:-1]
}

TEST_CASE("sigma selection") {
  const std::vector<Subscheme> points{y("x0", 1), y("x1", 1)};
  // [1:7] is close to the zero of x0.
  CHECK(sigma_select(pt("1:7"), Place::infinity(), points) == std::vector<std::size_t>{0});
  CHECK(sigma_select(pt("7:1"), Place::infinity(), points) == std::vector<std::size_t>{1});
  const std::vector<Subscheme> concurrent{y("x0", 2), y("x1", 2), y("x0 + x1", 2)};
  CHECK(sigma_select(pt("3:5:7"), Place::infinity(), concurrent).size() == 3);
  const std::vector<Subscheme> triangle{y("x0", 2), y("x1", 2), y("x2", 2)};
  const auto sel = sigma_select(pt("1:10:100"), Place::infinity(), triangle);
  CHECK(sel == std::vector<std::size_t>{0, 1});
  // A support hit is ranked first.
  CHECK(sigma_select(pt("0:1:2"), Place::infinity(), triangle).front() == 0);
  // Only the order of the values matters.
  const std::vector<double> lambdas{0.5, 2.0, 1.0};
  std::vector<double> scaled;
  for (double v : lambdas) scaled.push_back(7.5 * v);
  CHECK(sigma_select(lambdas, triangle) == sigma_select(scaled, triangle));
  CHECK(sigma_select(lambdas, triangle) == std::vector<std::size_t>{1, 2});
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(sigma_select({0.0, inf, 1.0}, triangle).front() == 1);
}

TEST_CASE("three-point blow-up table") {
  const auto rows = example5_table(10);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0].a_squared == 13);
  CHECK(rows[0].a_dot_d == 3);
  CHECK(rows[0].xi == Rational(13, 6));
  CHECK(rows[0].beta == Rational(13, 12));
  CHECK(rows[0].seshadri == 1);
  CHECK(rows[0].bound == Rational(1, 3));
  CHECK(rows[0].beta_floor == Rational(3, 4));
  CHECK(rows[1].a_squared == 37);
  CHECK(rows[1].a_dot_d == 5);
  CHECK(rows[1].xi == Rational(37, 10));
  CHECK(rows[1].beta == Rational(37, 20));
  CHECK(rows[1].seshadri == 2);
  for (const auto& r : rows) {
    CHECK(r.beta >= r.beta_floor);
    CHECK(r.beta_floor > r.bound);
  }
  CHECK_THROWS_AS(example5_table(0), InvalidArgument);
}

TEST_CASE("property suite on a small sample") {
  const auto report = run_property_suite(7, 12, 4);
  for (const auto& o : report.outcomes) {
    CHECK_MESSAGE(o.failures == 0, o.name << ": " << o.first_failure);
    CHECK(o.checked > 0);
  }
  CHECK(report.all_passed());
}
