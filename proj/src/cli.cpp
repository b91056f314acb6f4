#include "dioph/cli.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dioph/beta.hpp"
#include "dioph/errors.hpp"
#include "dioph/experiments.hpp"
#include "dioph/filtration.hpp"
#include "dioph/io.hpp"
#include "dioph/position.hpp"
#include "dioph/surface_lattice.hpp"

namespace dioph::cli {

namespace {

using io::Json;

enum class Format { Csv, Json };

struct Globals {
  std::string output = "csv";
  std::uint64_t seed = 1;
  std::string config;
};

struct Context {
  const Globals& globals;
  std::string provenance;
  std::ostream& out;

  Format format() const { return globals.output == "json" ? Format::Json : Format::Csv; }

  void csv_header() const { out << "# " << provenance << '\n'; }
  void json(const Json& payload) const {
    Json doc{{"provenance", provenance}, {"result", payload}};
    out << doc.dump(2) << '\n';
  }
};

std::size_t parse_space(const std::string& text) {
  if (text.size() == 2 && (text[0] == 'P' || text[0] == 'p') && text[1] >= '1' && text[1] <= '3') {
    return static_cast<std::size_t>(text[1] - '0');
  }
  throw ParseError("space must be one of P1, P2, P3, got '" + text + "'");
}

/// Subschemes separated by ';', generators within one by ','.
std::vector<Subscheme> parse_ideals(const std::string& text, std::size_t n) {
  std::vector<Subscheme> ys;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(';', start);
    const auto part = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    ys.push_back(Subscheme::parse_list("Y" + std::to_string(ys.size() + 1), part, n));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return ys;
}

std::string form_string(const HomogeneousForm& f) { return f.to_string(); }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("config file '" + path + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------

struct BetaOpts {
  std::string space = "P2";
  std::string ideal;
  std::uint32_t degree = 1;
  std::uint32_t level = 10;
  bool history = false;
  bool blowup = false;
};

int cmd_beta(const Context& ctx, const BetaOpts& o) {
  const std::size_t n = parse_space(o.space);
  const auto y = Subscheme::parse_list("Y", o.ideal, n);
  if (o.blowup) {
    const auto c = beta_blowup_crosscheck(y, o.degree, o.level);
    if (ctx.format() == Format::Json) {
      ctx.json(Json{{"direct", to_string(c.direct)},
                    {"blowup", to_string(c.blowup)},
                    {"direct_terms", c.direct_terms},
                    {"blowup_terms", c.blowup_terms},
                    {"termwise_equal", c.termwise_equal}});
    } else {
      ctx.csv_header();
      ctx.out << "# direct=" << to_string(c.direct) << " blowup=" << to_string(c.blowup)
              << " termwise_equal=" << (c.termwise_equal ? "true" : "false") << '\n';
      ctx.out << "m,ideal_power,surface_class\n";
      for (std::size_t m = 0; m < c.direct_terms.size(); ++m) {
        ctx.out << m + 1 << ',' << c.direct_terms[m] << ',' << c.blowup_terms[m] << '\n';
      }
    }
    return c.termwise_equal ? 0 : 2;
  }
  std::vector<BetaConvergenceRow> rows;
  if (o.history) {
    rows = beta_convergence(y, o.degree, o.level);
  } else {
    auto report = beta_truncated(y, o.degree, o.level);
    const Rational value = report.value;
    rows.push_back({std::move(report), value});
  }
  if (ctx.format() == Format::Json) {
    ctx.json(io::to_json(rows));
  } else {
    ctx.csv_header();
    io::write_beta_csv(ctx.out, rows);
  }
  return 0;
}

struct SurfaceOpts {
  std::size_t k = 3;
  std::string a;
  std::string d;
  std::uint32_t level = 8;
  std::string gamma;
};

int cmd_beta_surface(const Context& ctx, const SurfaceOpts& o) {
  const SurfaceModel s(o.k);
  const auto a = PicardClass::parse(o.a, o.k);
  const auto d = PicardClass::parse(o.d, o.k);
  std::optional<Rational> closed;
  try {
    closed = beta_closed_form(s, a, d);
  } catch (const Unsupported&) {
  }
  std::vector<Rational> values;
  for (std::uint32_t lvl = 1; lvl <= o.level; ++lvl) values.push_back(beta_surface_truncated(s, a, d, lvl));
  if (ctx.format() == Format::Json) {
    Json rows = Json::array();
    Rational best = values.empty() ? Rational(0) : values.front();
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] < best) best = values[i];
      rows.push_back(Json{{"N", i + 1}, {"value", to_string(values[i])}, {"min_so_far", to_string(best)}});
    }
    ctx.json(Json{{"A", a.to_string()},
                  {"D", d.to_string()},
                  {"closed_form", closed ? Json(to_string(*closed)) : Json(nullptr)},
                  {"rows", rows}});
    return 0;
  }
  ctx.csv_header();
  ctx.out << "# A=" << a.to_string() << " D=" << d.to_string()
          << " closed_form=" << (closed ? to_string(*closed) : std::string("unsupported")) << '\n';
  ctx.out << "N,value,min_so_far,value_decimal\n";
  Rational best = values.empty() ? Rational(0) : values.front();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < best) best = values[i];
    ctx.out << i + 1 << ',' << to_string(values[i]) << ',' << to_string(best) << ','
            << format_decimal(values[i].get_d()) << '\n';
  }
  return 0;
}

int cmd_seshadri(const Context& ctx, const SurfaceOpts& o) {
  const SurfaceModel s(o.k);
  const auto a = PicardClass::parse(o.a, o.k);
  const auto d = PicardClass::parse(o.d, o.k);
  const auto rep = seshadri(s, a, d);
  std::optional<NefReport> check;
  Rational gamma;
  if (!o.gamma.empty()) {
    gamma = parse_rational(o.gamma);
    check = is_nef_combination(s, a, gamma, d);
  }
  const std::string value = rep.value ? to_string(*rep.value) : std::string("inf");
  const std::string tight = rep.tight_curve ? rep.tight_curve->to_string() : std::string("");
  if (ctx.format() == Format::Json) {
    Json j{{"A", a.to_string()}, {"D", d.to_string()}, {"seshadri", value},
           {"tight_curve", rep.tight_curve ? Json(tight) : Json(nullptr)}};
    if (check) {
      j["gamma"] = to_string(gamma);
      j["nef"] = check->nef;
      j["violating_curve"] = check->violating ? Json(check->violating->to_string()) : Json(nullptr);
    }
    ctx.json(j);
    return 0;
  }
  ctx.csv_header();
  ctx.out << "A,D,seshadri,tight_curve";
  if (check) ctx.out << ",gamma,nef,violating_curve";
  ctx.out << '\n' << a.to_string() << ',' << d.to_string() << ',' << value << ',' << tight;
  if (check) {
    ctx.out << ',' << to_string(gamma) << ',' << (check->nef ? 1 : 0) << ','
            << (check->violating ? check->violating->to_string() : std::string(""));
  }
  ctx.out << '\n';
  return 0;
}

struct FiltrationOpts {
  std::string space = "P2";
  std::string ideals;
  std::string weights;
  std::string weights2;
  std::uint32_t degree = 2;
};

int cmd_filtration(const Context& ctx, const FiltrationOpts& o) {
  const std::size_t n = parse_space(o.space);
  const auto ys = parse_ideals(o.ideals, n);
  const auto t = WeightVector::parse(o.weights);
  const auto profile = build_profile(ys, t, o.degree, false);
  if (ctx.format() == Format::Json) {
    ctx.json(io::to_json(profile));
    return 0;
  }
  ctx.csv_header();
  ctx.out << "# ambient_dim=" << profile.ambient_dim() << " F=" << to_string(F_value(profile)) << '\n';
  ctx.out << "x,dim\n";
  for (const auto& s : profile.steps()) ctx.out << to_string(s.x) << ',' << s.dim << '\n';
  return 0;
}

int cmd_adapted_basis(const Context& ctx, const FiltrationOpts& o) {
  const std::size_t n = parse_space(o.space);
  const auto ys = parse_ideals(o.ideals, n);
  const auto t = WeightVector::parse(o.weights);
  const auto u = WeightVector::parse(o.weights2.empty() ? o.weights : o.weights2);
  const auto p = build_profile(ys, t, o.degree);
  const auto q = build_profile(ys, u, o.degree);
  const auto [first, second] = common_adapted_basis(p, q);
  const auto elements = first.elements();
  if (ctx.format() == Format::Json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < elements.size(); ++i) {
      rows.push_back(Json{{"element", form_string(elements[i])},
                          {"mu_t", to_string(first.mu_values[i])},
                          {"mu_u", to_string(second.mu_values[i])}});
    }
    ctx.json(Json{{"F_t", to_string(F_value(p))}, {"F_u", to_string(F_value(q))}, {"basis", rows}});
    return 0;
  }
  ctx.csv_header();
  ctx.out << "# F_t=" << to_string(F_value(p)) << " F_u=" << to_string(F_value(q)) << '\n';
  ctx.out << "element,mu_t,mu_u\n";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    ctx.out << form_string(elements[i]) << ',' << to_string(first.mu_values[i]) << ','
            << to_string(second.mu_values[i]) << '\n';
  }
  return 0;
}

struct PointOpts {
  std::string space = "P2";
  std::string ideal;
  std::string place = "inf";
  std::string places;
  std::string point;
};

int cmd_weil(const Context& ctx, const PointOpts& o) {
  const auto pt = ProjectivePoint::parse(o.point);
  const std::size_t n = pt.coords().size() - 1;
  if (!o.space.empty() && parse_space(o.space) != n) {
    throw DimensionMismatch("point " + pt.to_string() + " does not lie in " + o.space);
  }
  const auto y = Subscheme::parse_list("Y", o.ideal, n);
  if (on_support(y, pt)) throw SupportHit("point " + pt.to_string() + " lies on the support");
  std::vector<Place> places;
  if (!o.places.empty()) {
    places = PlaceSet::parse(o.places).places();
  } else {
    places.push_back(Place::parse(o.place));
  }
  if (ctx.format() == Format::Json) {
    Json rows = Json::array();
    for (const auto& v : places) {
      const auto w = weil(y, v, pt);
      rows.push_back(Json{{"place", v.to_string()}, {"weil", w.to_string()}, {"decimal", w.to_double()}});
    }
    ctx.json(Json{{"point", pt.to_string()}, {"values", rows}});
    return 0;
  }
  ctx.csv_header();
  ctx.out << "place,weil,decimal\n";
  for (const auto& v : places) {
    const auto w = weil(y, v, pt);
    ctx.out << v.to_string() << ',' << w.to_string() << ',' << format_decimal(w.to_double()) << '\n';
  }
  return 0;
}

int cmd_height(const Context& ctx, const PointOpts& o) {
  const auto pt = ProjectivePoint::parse(o.point);
  const auto h = height(pt);
  if (ctx.format() == Format::Json) {
    ctx.json(Json{{"point", pt.to_string()}, {"height", h.to_string()}, {"decimal", h.to_double()}});
    return 0;
  }
  ctx.csv_header();
  ctx.out << "point,height,decimal\n"
          << pt.to_string() << ',' << h.to_string() << ',' << format_decimal(h.to_double()) << '\n';
  return 0;
}

struct ScanOpts {
  std::string config;
  std::optional<std::uint32_t> bound;
  bool all_rows = false;
};

int cmd_scan(const Context& ctx, const ScanOpts& o) {
  const std::string path = o.config.empty() ? ctx.globals.config : o.config;
  if (path.empty()) throw InvalidArgument("scan needs --config file.json");
  const Json j = load_json_file(path);
  const auto cfg = io::config_from_json(j);
  const std::uint32_t bound = o.bound ? *o.bound : j.value("height_bound", 10u);
  auto report = scan_inequality(cfg, sample_points(cfg.n, bound));
  const std::size_t sample = report.evaluated + report.skipped + report.excluded;
  if (!o.all_rows) {
    // Keep the violating rows and the extremal one.
    std::vector<ScanRow> kept;
    std::vector<std::size_t> violations;
    std::optional<std::size_t> max_row;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      const bool is_max = report.max_ratio_row && *report.max_ratio_row == i;
      if (!report.rows[i].violation && !is_max) continue;
      if (report.rows[i].violation) violations.push_back(kept.size());
      if (is_max) max_row = kept.size();
      kept.push_back(std::move(report.rows[i]));
    }
    report.rows = std::move(kept);
    report.violations = std::move(violations);
    report.max_ratio_row = max_row;
  }
  if (ctx.format() == Format::Json) {
    Json payload = io::to_json(report);
    payload["sample_size"] = sample;
    payload["height_bound"] = bound;
    ctx.json(payload);
  } else {
    ctx.csv_header();
    ctx.out << "# sample=" << sample << " evaluated=" << report.evaluated << " skipped=" << report.skipped
            << " excluded=" << report.excluded << " zero_height=" << report.zero_height
            << " violations=" << report.violations.size() << " height_bound=" << bound
            << " height_floor=" << cfg.height_floor.to_string() << '\n';
    io::write_scan_csv(ctx.out, report);
  }
  return report.violations.empty() ? 0 : 2;
}

int cmd_example5(const Context& ctx, std::int64_t l_max) {
  const auto rows = example5_table(l_max);
  if (ctx.format() == Format::Json) {
    ctx.json(io::to_json(rows));
  } else {
    ctx.csv_header();
    io::write_example5_csv(ctx.out, rows);
  }
  return 0;
}

int cmd_check_position(const Context& ctx, const FiltrationOpts& o) {
  const std::size_t n = parse_space(o.space);
  const auto ys = parse_ideals(o.ideals, n);
  const auto report = check_general_position(ys);
  const bool regular = is_regular_sequence(ys);
  const auto dim = support_intersection_dim(ys);
  const std::string dim_text = dim ? std::to_string(*dim) : std::string("empty");
  std::string witness;
  for (std::size_t i = 0; i < report.witness.size(); ++i) {
    witness += (i ? ";" : "") + std::to_string(report.witness[i] + 1);
  }
  if (ctx.format() == Format::Json) {
    Json w = Json::array();
    for (auto i : report.witness) w.push_back(i + 1);
    ctx.json(Json{{"general_position", report.general},
                  {"witness", w},
                  {"witness_codim", report.witness_codim},
                  {"witness_required", report.witness_required},
                  {"regular_sequence", regular},
                  {"common_support_dim", dim_text}});
    return 0;
  }
  ctx.csv_header();
  ctx.out << "general_position,witness,witness_codim,witness_required,regular_sequence,common_support_dim\n"
          << (report.general ? 1 : 0) << ',' << witness << ',' << report.witness_codim << ','
          << report.witness_required << ',' << (regular ? 1 : 0) << ',' << dim_text << '\n';
  return 0;
}

struct SuiteOpts {
  std::size_t instances = 100;
  std::uint32_t max_degree = 6;
};

int cmd_concavity(const Context& ctx, const SuiteOpts& o) {
  const auto r = run_property_suite(ctx.globals.seed, o.instances, o.max_degree);
  if (ctx.format() == Format::Json) {
    ctx.json(io::to_json(r));
  } else {
    ctx.csv_header();
    ctx.out << "property,checked,failures,first_failure\n";
    for (const auto& p : r.outcomes) {
      ctx.out << p.name << ',' << p.checked << ',' << p.failures << ',' << p.first_failure << '\n';
    }
  }
  return r.all_passed() ? 0 : 2;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    s += ' ';
    s += a.find(' ') == std::string::npos ? a : '"' + a + '"';
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for weighted Diophantine approximation on projective space"};
  app.name("dioph");
  app.require_subcommand(1);
  Globals g;
  app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", g.seed, "Seed for randomised commands");
  app.add_option("--config", g.config, "JSON configuration file");
  app.set_version_flag("--version", std::string("dioph ") + kVersion);

  std::function<int(const Context&)> action;

  BetaOpts beta_o;
  auto* beta = app.add_subcommand("beta", "Truncated beta invariant of a subscheme of P^n");
  beta->add_option("--space", beta_o.space, "P1, P2 or P3");
  beta->add_option("--ideal", beta_o.ideal, "Comma-separated generators, e.g. x0,x1")->required();
  beta->add_option("--degree", beta_o.degree, "Degree d of O(d)");
  beta->add_option("--N", beta_o.level, "Truncation level");
  beta->add_flag("--history", beta_o.history, "Print levels 1..N with the running minimum");
  beta->add_flag("--blowup", beta_o.blowup, "Cross-check a point of P2 against Bl_1 P2");
  beta->callback([&] { action = [&](const Context& c) { return cmd_beta(c, beta_o); }; });

  SurfaceOpts surf_o;
  auto add_surface = [&](CLI::App* sub) {
    sub->add_option("--k", surf_o.k, "Number of blown-up points (0..3)");
    sub->add_option("--A", surf_o.a, "Polarisation, e.g. 4H - E1 - E2 - E3")->required();
    sub->add_option("--D", surf_o.d, "Divisor class, e.g. H - E1")->required();
  };
  auto* bsurf = app.add_subcommand("beta-surface", "Beta invariant on Bl_k P2");
  add_surface(bsurf);
  bsurf->add_option("--N", surf_o.level, "Largest truncation level");
  bsurf->callback([&] { action = [&](const Context& c) { return cmd_beta_surface(c, surf_o); }; });
  auto* sesh = app.add_subcommand("seshadri", "Seshadri constant of A along D on Bl_k P2");
  add_surface(sesh);
  sesh->add_option("--gamma", surf_o.gamma, "Also test A - gamma D for nefness");
  sesh->callback([&] { action = [&](const Context& c) { return cmd_seshadri(c, surf_o); }; });

  FiltrationOpts filt_o;
  auto add_ideals = [&](CLI::App* sub) {
    sub->add_option("--space", filt_o.space, "P1, P2 or P3");
    sub->add_option("--ideals", filt_o.ideals, "Subschemes separated by ';', generators by ','")->required();
  };
  auto* filt = app.add_subcommand("filtration", "Jumps of the weighted filtration and F(t)");
  add_ideals(filt);
  filt->add_option("--weights", filt_o.weights, "Weights t, e.g. 1,1/2")->required();
  filt->add_option("--degree", filt_o.degree, "Degree N");
  filt->callback([&] { action = [&](const Context& c) { return cmd_filtration(c, filt_o); }; });
  auto* adapted = app.add_subcommand("adapted-basis", "Common adapted basis for two weightings");
  add_ideals(adapted);
  adapted->add_option("--weights", filt_o.weights, "First weights")->required();
  adapted->add_option("--weights2", filt_o.weights2, "Second weights (default: the first)");
  adapted->add_option("--degree", filt_o.degree, "Degree N");
  adapted->callback([&] { action = [&](const Context& c) { return cmd_adapted_basis(c, filt_o); }; });
  auto* position = app.add_subcommand("check-position", "General position and regular sequence tests");
  add_ideals(position);
  position->callback([&] { action = [&](const Context& c) { return cmd_check_position(c, filt_o); }; });

  PointOpts pt_o;
  auto* weil_cmd = app.add_subcommand("weil", "Local Weil function of a subscheme at a point");
  weil_cmd->add_option("--space", pt_o.space, "P1, P2 or P3");
  weil_cmd->add_option("--ideal", pt_o.ideal, "Comma-separated generators")->required();
  weil_cmd->add_option("--place", pt_o.place, "inf or a prime");
  weil_cmd->add_option("--places", pt_o.places, "Several places, e.g. inf,2,3");
  weil_cmd->add_option("--point", pt_o.point, "Point such as 1:2:-3")->required();
  weil_cmd->callback([&] { action = [&](const Context& c) { return cmd_weil(c, pt_o); }; });
  auto* height_cmd = app.add_subcommand("height", "Absolute logarithmic height of a point");
  height_cmd->add_option("--point", pt_o.point, "Point such as 2:3")->required();
  height_cmd->callback([&] { action = [&](const Context& c) { return cmd_height(c, pt_o); }; });

  ScanOpts scan_o;
  auto* scan = app.add_subcommand("scan", "Scan the proximity inequality over points of bounded height");
  scan->add_option("--config", scan_o.config, "JSON configuration file");
  scan->add_option("--bound", scan_o.bound, "Coordinate bound (overrides height_bound)");
  scan->add_flag("--all-rows", scan_o.all_rows, "Print every evaluated point");
  scan->callback([&] { action = [&](const Context& c) { return cmd_scan(c, scan_o); }; });

  std::int64_t l_max = 10;
  auto* ex5 = app.add_subcommand("example5", "Three-point blow-up table for l = 1..l-max");
  ex5->add_option("--l-max", l_max, "Largest l")->check(CLI::PositiveNumber);
  ex5->callback([&] { action = [&](const Context& c) { return cmd_example5(c, l_max); }; });

  SuiteOpts suite_o;
  auto* conc = app.add_subcommand("concavity-test", "Randomised property suite for the filtrations");
  conc->add_option("--instances", suite_o.instances, "Number of random instances");
  conc->add_option("--max-degree", suite_o.max_degree, "Largest degree N");
  conc->callback([&] { action = [&](const Context& c) { return cmd_concavity(c, suite_o); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    out << sub->help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << "dioph " << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return 1;
  }

  const std::string provenance =
      std::string("dioph ") + kVersion + join_args(args) + " seed=" + std::to_string(g.seed);
  const Context ctx{g, provenance, out};
  try {
    return action(ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace dioph::cli
