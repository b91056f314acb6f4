#include "dioph/io.hpp"

#include <istream>
#include <ostream>

#include "dioph/errors.hpp"

namespace dioph::io {

namespace {

std::string q(const Rational& r) { return to_string(r); }
Rational rq(const Json& j) { return parse_rational(j.get<std::string>()); }

std::vector<std::vector<std::string>> csv_records(std::istream& in) {
  std::vector<std::vector<std::string>> out;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    out.push_back(split_csv(line));
  }
  return out;
}

void expect_fields(const std::vector<std::string>& rec, std::size_t n) {
  if (rec.size() < n) throw ParseError("CSV record has " + std::to_string(rec.size()) + " fields, expected " + std::to_string(n));
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto end = line.find(',', start);
    out.push_back(line.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

Json to_json(const SaturatedSet& s) {
  Json gens = Json::array();
  for (const auto& g : s.generators()) gens.push_back(g.entries());
  return gens;
}

SaturatedSet saturated_from_json(const Json& j) {
  return guarded([&] {
    std::vector<ExponentVector> gens;
    for (const auto& g : j) gens.emplace_back(g.get<std::vector<std::uint32_t>>());
    if (gens.empty()) throw ParseError("antichain needs at least one generator");
    return SaturatedSet(gens.front().size(), gens);
  });
}

Json to_json(const FiltrationProfile& p) {
  Json jumps = Json::array();
  for (const auto& s : p.steps()) {
    jumps.push_back(Json::array({to_string(Integer(s.x.get_num())), to_string(Integer(s.x.get_den())), s.dim}));
  }
  return Json{{"ambient_dim", p.ambient_dim()}, {"jumps", jumps}, {"F", q(F_value(p))}};
}

FiltrationProfile profile_from_json(const Json& j) {
  return guarded([&] {
    std::vector<ProfileStep> steps;
    for (const auto& jump : j.at("jumps")) {
      Rational x(Integer(jump.at(0).get<std::string>()), Integer(jump.at(1).get<std::string>()));
      x.canonicalize();
      steps.push_back({x, jump.at(2).get<std::size_t>()});
    }
    return FiltrationProfile(j.at("ambient_dim").get<std::size_t>(), std::move(steps));
  });
}

Json to_json(const Subscheme& y) {
  Json gens = Json::array();
  for (const auto& g : y.generators()) gens.push_back(g.to_string());
  return Json{{"label", y.label()}, {"n", y.n()}, {"generators", gens}};
}

Subscheme subscheme_from_json(const Json& j, std::size_t default_n) {
  return guarded([&] {
    const std::size_t n = j.contains("n") ? j.at("n").get<std::size_t>() : default_n;
    const auto gens = j.at("generators").get<std::vector<std::string>>();
    return Subscheme::parse(j.value("label", std::string("Y")), gens, n);
  });
}

LogRational parse_log_rational(const std::string& text) {
  if (text == "0") return LogRational(1);
  if (text.size() < 6 || text.rfind("log(", 0) != 0 || text.back() != ')') {
    throw ParseError("expected log(r) or 0, got '" + text + "'");
  }
  return LogRational(parse_rational(text.substr(4, text.size() - 5)));
}

Json to_json(const InequalityConfig& cfg) {
  Json ys = Json::array();
  for (std::size_t i = 0; i < cfg.subschemes.size(); ++i) {
    Json y = to_json(cfg.subschemes[i]);
    y["beta"] = q(cfg.betas[i]);
    ys.push_back(y);
  }
  Json ex = Json::array();
  for (const auto& y : cfg.exceptional) ex.push_back(to_json(y));
  return Json{{"n", cfg.n},
              {"subschemes", ys},
              {"places", cfg.places.to_string()},
              {"epsilon", q(cfg.epsilon)},
              {"height_floor", cfg.height_floor.to_string()},
              {"exceptional", ex}};
}

InequalityConfig config_from_json(const Json& j) {
  return guarded([&] {
    InequalityConfig cfg;
    cfg.n = j.at("n").get<std::size_t>();
    for (const auto& y : j.at("subschemes")) {
      cfg.subschemes.push_back(subscheme_from_json(y, cfg.n));
      cfg.betas.push_back(rq(y.at("beta")));
    }
    if (j.contains("places")) cfg.places = PlaceSet::parse(j.at("places").get<std::string>());
    if (j.contains("epsilon")) cfg.epsilon = rq(j.at("epsilon"));
    if (j.contains("height_floor")) cfg.height_floor = parse_log_rational(j.at("height_floor").get<std::string>());
    if (j.contains("exceptional")) {
      for (const auto& y : j.at("exceptional")) cfg.exceptional.push_back(subscheme_from_json(y, cfg.n));
    }
    cfg.validate();
    return cfg;
  });
}

// ---------------------------------------------------------------------------

Json to_json(const std::vector<Example5Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"l", r.l},
                       {"A2", r.a_squared},
                       {"AD", r.a_dot_d},
                       {"xi", q(r.xi)},
                       {"beta", q(r.beta)},
                       {"epsilon", q(r.seshadri)},
                       {"l_over_3", q(r.bound)},
                       {"three_l_over_4", q(r.beta_floor)},
                       {"beta_decimal", r.beta.get_d()}});
  }
  return out;
}

std::vector<Example5Row> example5_from_json(const Json& j) {
  return guarded([&] {
    std::vector<Example5Row> rows;
    for (const auto& r : j) {
      rows.push_back({r.at("l").get<std::int64_t>(), r.at("A2").get<std::int64_t>(),
                      r.at("AD").get<std::int64_t>(), rq(r.at("xi")), rq(r.at("beta")),
                      rq(r.at("epsilon")), rq(r.at("l_over_3")), rq(r.at("three_l_over_4"))});
    }
    return rows;
  });
}

void write_example5_csv(std::ostream& out, const std::vector<Example5Row>& rows) {
  out << "l,A2,AD,xi,beta,epsilon,l_over_3,three_l_over_4,xi_decimal,beta_decimal\n";
  for (const auto& r : rows) {
    out << r.l << ',' << r.a_squared << ',' << r.a_dot_d << ',' << q(r.xi) << ',' << q(r.beta) << ','
        << q(r.seshadri) << ',' << q(r.bound) << ',' << q(r.beta_floor) << ','
        << format_decimal(r.xi.get_d()) << ',' << format_decimal(r.beta.get_d()) << '\n';
  }
}

std::vector<Example5Row> read_example5_csv(std::istream& in) {
  std::vector<Example5Row> rows;
  for (const auto& f : csv_records(in)) {
    expect_fields(f, 8);
    rows.push_back({std::stoll(f[0]), std::stoll(f[1]), std::stoll(f[2]), parse_rational(f[3]),
                    parse_rational(f[4]), parse_rational(f[5]), parse_rational(f[6]), parse_rational(f[7])});
  }
  return rows;
}

Json to_json(const std::vector<BetaConvergenceRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"N", r.report.level},
                       {"numerator", to_string(r.report.numerator)},
                       {"denominator", to_string(r.report.denominator)},
                       {"value", q(r.report.value)},
                       {"min_so_far", q(r.min_so_far)},
                       {"value_decimal", r.report.value.get_d()},
                       {"terms", r.report.terms}});
  }
  return out;
}

std::vector<BetaConvergenceRow> beta_rows_from_json(const Json& j) {
  return guarded([&] {
    std::vector<BetaConvergenceRow> rows;
    for (const auto& r : j) {
      BetaConvergenceRow row;
      row.report.level = r.at("N").get<std::uint32_t>();
      row.report.numerator = Integer(r.at("numerator").get<std::string>());
      row.report.denominator = Integer(r.at("denominator").get<std::string>());
      row.report.value = rq(r.at("value"));
      row.report.terms = r.value("terms", std::vector<std::uint64_t>{});
      row.min_so_far = rq(r.at("min_so_far"));
      rows.push_back(std::move(row));
    }
    return rows;
  });
}

void write_beta_csv(std::ostream& out, const std::vector<BetaConvergenceRow>& rows) {
  out << "N,numerator,denominator,value,min_so_far,value_decimal\n";
  for (const auto& r : rows) {
    out << r.report.level << ',' << to_string(r.report.numerator) << ',' << to_string(r.report.denominator)
        << ',' << q(r.report.value) << ',' << q(r.min_so_far) << ','
        << format_decimal(r.report.value.get_d()) << '\n';
  }
}

std::vector<BetaConvergenceRow> read_beta_csv(std::istream& in) {
  std::vector<BetaConvergenceRow> rows;
  for (const auto& f : csv_records(in)) {
    expect_fields(f, 5);
    BetaConvergenceRow row;
    row.report.level = static_cast<std::uint32_t>(std::stoul(f[0]));
    row.report.numerator = Integer(f[1]);
    row.report.denominator = Integer(f[2]);
    row.report.value = parse_rational(f[3]);
    row.min_so_far = parse_rational(f[4]);
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------

Json to_json(const ScanReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json prox = Json::array();
    for (const auto& m : row.proximities) prox.push_back(m.to_string());
    rows.push_back(Json{{"point", row.point.to_string()},
                        {"height", row.height.to_string()},
                        {"proximities", prox},
                        {"lhs", row.lhs},
                        {"rhs", row.rhs},
                        {"ratio", row.ratio ? Json(*row.ratio) : Json(nullptr)},
                        {"violation", row.violation}});
  }
  return Json{{"evaluated", r.evaluated},
              {"skipped", r.skipped},
              {"excluded", r.excluded},
              {"zero_height", r.zero_height},
              {"violations", r.violations},
              {"max_ratio_row", r.max_ratio_row ? Json(*r.max_ratio_row) : Json(nullptr)},
              {"rows", rows}};
}

ScanReport scan_from_json(const Json& j) {
  return guarded([&] {
    ScanReport r;
    r.evaluated = j.at("evaluated").get<std::size_t>();
    r.skipped = j.at("skipped").get<std::size_t>();
    r.excluded = j.at("excluded").get<std::size_t>();
    r.zero_height = j.at("zero_height").get<std::size_t>();
    r.violations = j.at("violations").get<std::vector<std::size_t>>();
    if (!j.at("max_ratio_row").is_null()) r.max_ratio_row = j.at("max_ratio_row").get<std::size_t>();
    for (const auto& row : j.at("rows")) {
      ScanRow s{ProjectivePoint::parse(row.at("point").get<std::string>()),
                parse_log_rational(row.at("height").get<std::string>()),
                {},
                row.at("lhs").get<double>(),
                row.at("rhs").get<double>(),
                std::nullopt,
                row.at("violation").get<bool>()};
      for (const auto& m : row.at("proximities")) s.proximities.push_back(parse_log_rational(m.get<std::string>()));
      if (!row.at("ratio").is_null()) s.ratio = row.at("ratio").get<double>();
      r.rows.push_back(std::move(s));
    }
    return r;
  });
}

void write_scan_csv(std::ostream& out, const ScanReport& r) {
  const std::size_t q_count = r.rows.empty() ? 0 : r.rows.front().proximities.size();
  out << "point,height,height_decimal";
  for (std::size_t i = 0; i < q_count; ++i) out << ",m" << i + 1;
  out << ",lhs,rhs,ratio,violation\n";
  for (const auto& row : r.rows) {
    out << row.point.to_string() << ',' << row.height.to_string() << ','
        << format_decimal(row.height.to_double());
    for (const auto& m : row.proximities) out << ',' << m.to_string();
    out << ',' << format_decimal(row.lhs) << ',' << format_decimal(row.rhs) << ','
        << (row.ratio ? format_decimal(*row.ratio) : std::string("")) << ',' << (row.violation ? 1 : 0) << '\n';
  }
}

std::vector<ScanRow> read_scan_csv(std::istream& in) {
  std::vector<ScanRow> rows;
  for (const auto& f : csv_records(in)) {
    expect_fields(f, 7);
    const std::size_t q_count = f.size() - 7;
    ScanRow row{ProjectivePoint::parse(f[0]), parse_log_rational(f[1]), {}, 0.0, 0.0, std::nullopt, false};
    for (std::size_t i = 0; i < q_count; ++i) row.proximities.push_back(parse_log_rational(f[3 + i]));
    row.lhs = std::stod(f[3 + q_count]);
    row.rhs = std::stod(f[4 + q_count]);
    if (!f[5 + q_count].empty()) row.ratio = std::stod(f[5 + q_count]);
    row.violation = f[6 + q_count] == "1";
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const PropertySuiteReport& r) {
  Json outcomes = Json::array();
  for (const auto& o : r.outcomes) {
    outcomes.push_back(Json{{"property", o.name},
                            {"checked", o.checked},
                            {"failures", o.failures},
                            {"first_failure", o.first_failure}});
  }
  return Json{{"instances", r.instances}, {"outcomes", outcomes}};
}

PropertySuiteReport suite_from_json(const Json& j) {
  return guarded([&] {
    PropertySuiteReport r;
    r.instances = j.at("instances").get<std::size_t>();
    for (const auto& o : j.at("outcomes")) {
      r.outcomes.push_back({o.at("property").get<std::string>(), o.at("checked").get<std::size_t>(),
                            o.at("failures").get<std::size_t>(), o.at("first_failure").get<std::string>()});
    }
    return r;
  });
}

}  // namespace dioph::io
