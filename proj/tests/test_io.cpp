#include <doctest.h>

#include <sstream>

#include "dioph/errors.hpp"
#include "dioph/io.hpp"

using namespace dioph;

namespace {

Subscheme y(const char* label, const char* gens, std::size_t n) { return Subscheme::parse_list(label, gens, n); }

}  // namespace

TEST_CASE("antichains round-trip") {
  const auto s = threshold_set(WeightVector::parse("1,1/2,1/3"), Rational(1));
  const auto j = io::to_json(s);
  CHECK(j.is_array());
  CHECK(io::saturated_from_json(j) == s);
  CHECK(io::saturated_from_json(io::Json::parse(j.dump())) == s);
  CHECK_THROWS_AS(io::saturated_from_json(io::Json::parse("[[1,\"a\"]]")), ParseError);
}

TEST_CASE("profiles round-trip") {
  const std::vector<Subscheme> ys{y("Y", "x0", 1)};
  const auto p = build_profile(ys, WeightVector::parse("1"), 2, false);
  const auto j = io::to_json(p);
  CHECK(j["ambient_dim"] == 3);
  CHECK(j["F"] == "1");
  CHECK(j["jumps"].dump() == R"([["0","1",3],["1","1",2],["2","1",1]])");
  CHECK(io::profile_from_json(io::Json::parse(j.dump())) == p);
}

TEST_CASE("configs round-trip") {
  InequalityConfig cfg;
  cfg.n = 2;
  cfg.subschemes = {y("L0", "x0", 2), y("L1", "x1", 2), y("L2", "x2", 2), y("L3", "x0+x1+x2", 2)};
  cfg.betas.assign(4, Rational(1, 3));
  cfg.places = PlaceSet::parse("inf,2,3,5");
  cfg.epsilon = Rational(1, 2);
  cfg.exceptional = {y("E", "x0-x1", 2)};
  const auto back = io::config_from_json(io::Json::parse(io::to_json(cfg).dump()));
  CHECK(back.n == 2);
  REQUIRE(back.subschemes.size() == 4);
  CHECK(back.subschemes[3].generators() == cfg.subschemes[3].generators());
  CHECK(back.subschemes[3].label() == "L3");
  CHECK(back.betas == cfg.betas);
  CHECK(back.places.to_string() == "inf,2,3,5");
  CHECK(back.epsilon == Rational(1, 2));
  CHECK(back.height_floor == LogRational(10));
  REQUIRE(back.exceptional.size() == 1);
  CHECK(io::to_json(back).dump() == io::to_json(cfg).dump());

  CHECK(io::parse_log_rational("log(5/4)") == LogRational(Rational(5, 4)));
  CHECK(io::parse_log_rational("0") == LogRational(1));
  CHECK_THROWS_AS(io::parse_log_rational("ln(3)"), ParseError);
  CHECK_THROWS_AS(io::config_from_json(io::Json::parse(R"({"n":2})")), ParseError);
}

TEST_CASE("example table round-trips through CSV and JSON") {
  const auto rows = example5_table(4);
  std::stringstream csv;
  csv << "# comment line\n";
  io::write_example5_csv(csv, rows);
  const auto text = csv.str();
  CHECK(text.find("\n1,13,3,13/6,13/12,1,1/3,3/4,") != std::string::npos);
  const auto back = io::read_example5_csv(csv);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].l == rows[i].l);
    CHECK(back[i].xi == rows[i].xi);
    CHECK(back[i].beta == rows[i].beta);
    CHECK(back[i].seshadri == rows[i].seshadri);
  }
  const auto from_json = io::example5_from_json(io::Json::parse(io::to_json(rows).dump()));
  CHECK(io::to_json(from_json).dump() == io::to_json(rows).dump());
}

TEST_CASE("beta histories round-trip") {
  const auto rows = beta_convergence(y("Y", "x0", 2), 1, 5);
  std::stringstream csv;
  io::write_beta_csv(csv, rows);
  const auto back = io::read_beta_csv(csv);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].report.value == rows[i].report.value);
    CHECK(back[i].report.numerator == rows[i].report.numerator);
    CHECK(back[i].min_so_far == rows[i].min_so_far);
  }
  CHECK(io::to_json(io::beta_rows_from_json(io::to_json(rows))).dump() == io::to_json(rows).dump());
}

TEST_CASE("scan reports round-trip") {
  InequalityConfig cfg;
  cfg.n = 2;
  cfg.subschemes = {y("L0", "x0", 2), y("L1", "x1", 2)};
  cfg.betas = {Rational(1, 3), Rational(1, 3)};
  cfg.places = PlaceSet::parse("inf,2");
  const auto report = scan_inequality(cfg, sample_points(2, 3));
  const auto j = io::to_json(report);
  CHECK(io::to_json(io::scan_from_json(io::Json::parse(j.dump()))).dump() == j.dump());

  std::stringstream csv;
  io::write_scan_csv(csv, report);
  const auto rows = io::read_scan_csv(csv);
  REQUIRE(rows.size() == report.rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].point == report.rows[i].point);
    CHECK(rows[i].height == report.rows[i].height);
    CHECK(rows[i].proximities == report.rows[i].proximities);
    CHECK(rows[i].violation == report.rows[i].violation);
    CHECK(rows[i].lhs == doctest::Approx(report.rows[i].lhs).epsilon(1e-11));
  }
}

TEST_CASE("property reports round-trip") {
  const auto r = run_property_suite(5, 2, 3);
  const auto j = io::to_json(r);
  CHECK(io::to_json(io::suite_from_json(io::Json::parse(j.dump()))).dump() == j.dump());
}

TEST_CASE("csv splitting") {
  CHECK(io::split_csv("a,,b") == std::vector<std::string>{"a", "", "b"});
  CHECK(io::split_csv("") == std::vector<std::string>{""});
}
