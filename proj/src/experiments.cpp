#include "dioph/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "dioph/errors.hpp"
#include "dioph/filtration.hpp"
#include "dioph/position.hpp"
#include "dioph/surface_lattice.hpp"

namespace dioph {

namespace {

Rational power_of(const Rational& r, const Integer& e) {
  Integer num, den;
  const unsigned long k = e.get_ui();
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), k);
  return Rational(num, den);
}

bool point_less(const ProjectivePoint& a, const ProjectivePoint& b) {
  const auto ha = height(a), hb = height(b);
  if (!(ha == hb)) return ha < hb;
  return a.coords() < b.coords();
}

}  // namespace

std::vector<ProjectivePoint> sample_points(std::size_t n, std::uint32_t bound) {
  if (n < 1 || n > kMaxProjectiveDim) throw InvalidArgument("sampling needs 1 <= n <= 3");
  std::vector<ProjectivePoint> out;
  if (bound == 0) return out;
  std::set<std::vector<Integer>> seen;
  const long b = bound;
  std::vector<long> c(n + 1, -b);
  while (true) {
    if (std::any_of(c.begin(), c.end(), [](long v) { return v != 0; })) {
      std::vector<Integer> coords(c.begin(), c.end());
      ProjectivePoint p(coords);
      if (seen.insert(p.coords()).second) out.push_back(std::move(p));
    }
    std::size_t i = 0;
    while (i <= n && c[i] == b) c[i++] = -b;
    if (i > n) break;
    ++c[i];
  }
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

void InequalityConfig::validate() const {
  if (subschemes.empty()) throw InvalidArgument("configuration needs at least one subscheme");
  if (betas.size() != subschemes.size()) throw DimensionMismatch("one beta per subscheme required");
  for (const auto& b : betas) {
    if (b <= 0) throw InvalidArgument("beta values must be positive");
  }
  if (epsilon <= 0) throw InvalidArgument("epsilon must be positive");
  for (const auto& y : subschemes) {
    if (y.n() != n) throw DimensionMismatch("subscheme outside P^" + std::to_string(n));
  }
  for (const auto& y : exceptional) {
    if (y.n() != n) throw DimensionMismatch("exceptional component outside P^" + std::to_string(n));
  }
}

bool weighted_log_exceeds(const std::vector<Rational>& betas, const std::vector<LogRational>& logs,
                          const Rational& scale, const LogRational& rhs) {
  if (betas.size() != logs.size()) throw DimensionMismatch("one beta per value required");
  Integer l = scale.get_den();
  for (const auto& b : betas) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.get_den_mpz_t());
  Rational left = 1;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const Rational e = betas[i] * l;
    left *= power_of(logs[i].argument(), e.get_num());
  }
  const Rational e = scale * l;
  return left > power_of(rhs.argument(), e.get_num());
}

ScanReport scan_inequality(const InequalityConfig& cfg, const std::vector<ProjectivePoint>& points) {
  cfg.validate();
  ScanReport report;
  const Rational scale = 1 + cfg.epsilon;
  std::vector<ProjectivePoint> sorted = points;
  std::sort(sorted.begin(), sorted.end(), point_less);
  for (const auto& p : sorted) {
    if (p.n() != cfg.n) throw DimensionMismatch("point outside P^" + std::to_string(cfg.n));
    if (std::any_of(cfg.subschemes.begin(), cfg.subschemes.end(),
                    [&](const Subscheme& y) { return on_support(y, p); })) {
      ++report.skipped;
      continue;
    }
    if (std::any_of(cfg.exceptional.begin(), cfg.exceptional.end(),
                    [&](const Subscheme& y) { return on_support(y, p); })) {
      ++report.excluded;
      continue;
    }
    ++report.evaluated;
    ScanRow row{p, height(p), {}, 0.0, 0.0, std::nullopt, false};
    for (std::size_t i = 0; i < cfg.subschemes.size(); ++i) {
      row.proximities.push_back(proximity(cfg.subschemes[i], cfg.places, p));
      row.lhs += cfg.betas[i].get_d() * row.proximities.back().to_double();
    }
    row.rhs = scale.get_d() * row.height.to_double();
    if (row.height == LogRational(1)) {
      ++report.zero_height;
    } else {
      row.ratio = row.lhs / row.rhs;
    }
    row.violation = row.height >= cfg.height_floor &&
                    weighted_log_exceeds(cfg.betas, row.proximities, scale, row.height);
    if (row.violation) report.violations.push_back(report.rows.size());
    if (row.ratio && (!report.max_ratio_row || *row.ratio > *report.rows[*report.max_ratio_row].ratio)) {
      report.max_ratio_row = report.rows.size();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> longest_meeting_prefix(const std::vector<std::size_t>& order,
                                                const std::vector<Subscheme>& ys) {
  std::vector<std::size_t> prefix;
  for (std::size_t i : order) {
    prefix.push_back(i);
    if (!support_intersection_dim(ys, prefix)) {
      prefix.pop_back();
      break;
    }
  }
  return prefix;
}

}  // namespace

std::vector<std::size_t> sigma_select(const std::vector<double>& lambdas,
                                      const std::vector<Subscheme>& ys) {
  if (lambdas.size() != ys.size()) throw DimensionMismatch("one value per subscheme required");
  std::vector<std::size_t> order(ys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lambdas[a] > lambdas[b]; });
  return longest_meeting_prefix(order, ys);
}

std::vector<std::size_t> sigma_select(const ProjectivePoint& pt, const Place& v,
                                      const std::vector<Subscheme>& ys) {
  std::vector<std::optional<LogRational>> values;  // nullopt: support hit
  for (const auto& y : ys) {
    try {
      values.emplace_back(weil(y, v, pt));
    } catch (const SupportHit&) {
      values.emplace_back(std::nullopt);
    }
  }
  std::vector<std::size_t> order(ys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (!values[a] || !values[b]) return !values[a] && values[b];
    return *values[a] > *values[b];
  });
  return longest_meeting_prefix(order, ys);
}

std::vector<Example5Row> example5_table(std::int64_t l_max) {
  if (l_max < 1) throw InvalidArgument("l_max must be at least 1");
  const SurfaceModel s(3);
  std::vector<Example5Row> rows;
  for (std::int64_t l = 1; l <= l_max; ++l) {
    const auto a = three_point_polarization(l);
    const auto d = pencil_class(0);
    Example5Row row;
    row.l = l;
    row.a_squared = intersect(a, a);
    row.a_dot_d = intersect(a, d);
    row.xi = Rational(row.a_squared, 2 * row.a_dot_d);
    row.xi.canonicalize();
    row.beta = beta_closed_form(s, a, d);
    row.seshadri = *seshadri(s, a, d).value;
    row.bound = make_rational(l, 3);
    row.beta_floor = make_rational(3 * l, 4);
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------

bool PropertySuiteReport::all_passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const PropertyOutcome& o) { return o.failures == 0 && o.checked > 0; });
}

namespace {

struct Instance {
  std::size_t n;
  std::vector<Subscheme> ys;
  std::vector<std::uint32_t> eps;    // generators per subscheme
  std::vector<HomogeneousForm> phis;  // all generators, in block order
  std::uint32_t degree;
  std::string description;
};

class SuiteRng {
 public:
  explicit SuiteRng(std::uint64_t seed) : g_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  Rational weight() {
    if (uniform(0, 3) == 0) return 0;
    return make_rational(uniform(1, 4), uniform(1, 3));
  }
  WeightVector weights(std::size_t r) {
    while (true) {
      std::vector<Rational> t;
      for (std::size_t i = 0; i < r; ++i) t.push_back(weight());
      if (std::any_of(t.begin(), t.end(), [](const Rational& v) { return v > 0; })) return WeightVector(t);
    }
  }
  template <class Seq>
  void shuffle(Seq& s) { std::shuffle(s.begin(), s.end(), g_); }

 private:
  std::mt19937_64 g_;
};

Instance random_instance(SuiteRng& rng, std::uint32_t max_degree) {
  Instance inst;
  inst.n = static_cast<std::size_t>(rng.uniform(2, 3));
  const std::size_t nvars = inst.n + 1;
  std::vector<std::size_t> vars(nvars);
  std::iota(vars.begin(), vars.end(), 0);
  rng.shuffle(vars);
  const std::size_t used = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(nvars)));
  const std::size_t r = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(std::min<std::size_t>(used, 3))));
  // Split the first `used` variables into r nonempty blocks.
  std::vector<std::size_t> cuts(used - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  rng.shuffle(cuts);
  cuts.resize(r - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(used);

  std::vector<std::vector<Rational>> change;
  const bool twist = rng.uniform(0, 1) == 1;
  if (twist) {
    while (true) {
      change.assign(nvars, std::vector<Rational>(nvars));
      for (auto& row : change) {
        for (auto& c : row) c = rng.uniform(-2, 2);
      }
      if (linalg::rank(change, nvars) == nvars) break;
    }
  }
  inst.description = "P^" + std::to_string(inst.n) + (twist ? " twisted:" : ":");
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<HomogeneousForm> gens;
    for (std::size_t k = cuts[i]; k < cuts[i + 1]; ++k) {
      std::vector<std::uint32_t> entries(nvars, 0);
      entries[vars[k]] = static_cast<std::uint32_t>(rng.uniform(1, 2));
      gens.push_back(HomogeneousForm::monomial(ExponentVector(entries)));
    }
    Subscheme y("Y" + std::to_string(i + 1), gens);
    if (twist) y = linear_change(y, change);
    inst.eps.push_back(static_cast<std::uint32_t>(y.generators().size()));
    for (const auto& g : y.generators()) inst.phis.push_back(g);
    std::string text;
    for (const auto& g : y.generators()) text += (text.empty() ? "" : ", ") + g.to_string();
    inst.description += " (" + text + ")";
    inst.ys.push_back(std::move(y));
  }
  inst.degree = static_cast<std::uint32_t>(rng.uniform(1, static_cast<int>(max_degree)));
  inst.description += " D=" + std::to_string(inst.degree);
  return inst;
}

SaturatedSet random_saturated(SuiteRng& rng, std::size_t m) {
  std::vector<ExponentVector> gens;
  const int count = rng.uniform(1, 3);
  for (int k = 0; k < count; ++k) {
    std::vector<std::uint32_t> e(m);
    for (auto& v : e) v = static_cast<std::uint32_t>(rng.uniform(0, 2));
    gens.emplace_back(e);
  }
  return SaturatedSet(m, gens);
}

GradedPiece piece_of(std::vector<HomogeneousForm> generators, std::size_t n, std::uint32_t degree) {
  const auto spanning = degree_span(generators, degree);
  return GradedPiece::span(spanning, n, degree);
}

class Recorder {
 public:
  explicit Recorder(std::vector<PropertyOutcome>& outcomes) : outcomes_(outcomes) {}
  void record(std::size_t k, bool ok, const std::string& context) {
    auto& o = outcomes_[k];
    ++o.checked;
    if (!ok) {
      if (o.failures == 0) o.first_failure = context;
      ++o.failures;
    }
  }

 private:
  std::vector<PropertyOutcome>& outcomes_;
};

}  // namespace

PropertySuiteReport run_property_suite(std::uint64_t seed, std::size_t instances,
                                       std::uint32_t max_degree) {
  if (max_degree == 0) throw InvalidArgument("max degree must be positive");
  enum { kIntersection, kExpansion, kConvexity, kScaling, kAdapted, kConcavity, kBound, kCount };
  PropertySuiteReport report;
  report.instances = instances;
  for (const char* name : {"saturated intersection identity", "weight expansion identity",
                           "convex containment", "scaling law", "adapted basis mu sums",
                           "concavity", "weighted minimum bound"}) {
    report.outcomes.push_back({name, 0, 0, ""});
  }
  Recorder rec(report.outcomes);
  SuiteRng rng(seed);
  for (std::size_t trial = 0; trial < instances; ++trial) {
    const Instance inst = random_instance(rng, max_degree);
    const std::size_t r = inst.ys.size(), m = inst.phis.size();
    const std::uint32_t d = inst.degree;
    const std::string ctx = "instance " + std::to_string(trial) + ": " + inst.description;

    {
      const auto a = random_saturated(rng, m), b = random_saturated(rng, m);
      const auto pa = piece_of(monomial_ideal_generators(inst.phis, a, d), inst.n, d);
      const auto pb = piece_of(monomial_ideal_generators(inst.phis, b, d), inst.n, d);
      const auto pab = piece_of(monomial_ideal_generators(inst.phis, intersect_saturated(a, b), d), inst.n, d);
      rec.record(kIntersection, pa.intersect(pb).space() == pab.space(), ctx);
    }

    const WeightVector t = rng.weights(r), u = rng.weights(r);
    const Rational x = make_rational(rng.uniform(0, 12), rng.uniform(1, 3));
    {
      const auto expanded = threshold_set(expand_weights(t, inst.eps), x);
      const auto lhs = graded_piece_filtration_ideal(inst.ys, t, x, d);
      const auto rhs = piece_of(monomial_ideal_generators(inst.phis, expanded, d), inst.n, d);
      rec.record(kExpansion, lhs.space() == rhs.space(), ctx + " t=" + t.to_string() + " x=" + to_string(x));
    }
    {
      const Rational y = make_rational(rng.uniform(0, 12), rng.uniform(1, 3));
      const Rational lambda = make_rational(rng.uniform(0, 4), 4);
      const auto meet = graded_piece_filtration_ideal(inst.ys, t, x, d)
                            .intersect(graded_piece_filtration_ideal(inst.ys, u, y, d));
      const auto blend = graded_piece_filtration_ideal(inst.ys, t.blend(u, lambda),
                                                       lambda * x + (1 - lambda) * y, d);
      rec.record(kConvexity, blend.contains(meet), ctx);
    }
    {
      const Rational factor = make_rational(rng.uniform(1, 5), rng.uniform(1, 3));
      const auto [scaled, expected] = scale_check(inst.ys, t, factor, d);
      rec.record(kScaling, scaled == expected, ctx + " u=" + to_string(factor));
    }

    const auto profile_t = build_profile(inst.ys, t, d, true);
    const Rational ft = F_value(profile_t);
    {
      const auto ell = static_cast<unsigned long>(profile_t.ambient_dim());
      const auto adapted = common_adapted_basis(profile_t, profile_t).first;
      Rational sum = 0;
      for (const auto& mu : adapted.mu_values) sum += mu;
      bool ok = sum / ell == ft;
      // Any other basis gives at most F.
      std::vector<linalg::RationalVector> basis;
      linalg::Subspace acc(ell);
      while (acc.dim() < ell) {
        linalg::RationalVector v(ell);
        for (auto& c : v) c = rng.uniform(-1, 1);
        if (acc.insert(v)) basis.push_back(std::move(v));
      }
      Rational other = 0;
      for (const auto& v : basis) other += profile_t.mu_of(v);
      ok = ok && other / ell <= ft;
      rec.record(kAdapted, ok, ctx);
    }
    {
      const Rational fu = F_value(build_profile(inst.ys, u, d, false));
      for (const Rational& lambda : {make_rational(1, 4), make_rational(1, 2), make_rational(3, 4)}) {
        const Rational fb = F_value(build_profile(inst.ys, t.blend(u, lambda), d, false));
        rec.record(kConcavity, fb >= lambda * ft + (1 - lambda) * fu,
                   ctx + " t=" + t.to_string() + " u=" + u.to_string() + " lambda=" + to_string(lambda));
      }
    }
    {
      std::vector<Rational> betas;
      for (std::size_t i = 0; i < r; ++i) betas.push_back(make_rational(rng.uniform(1, 4), rng.uniform(1, 3)));
      Rational norm = 0;
      for (std::size_t i = 0; i < r; ++i) norm += betas[i] * t[i];
      const WeightVector normalized = t.scaled(1 / norm);
      const auto bound = weighted_min_bound(inst.ys, betas, normalized, d);
      rec.record(kBound, bound.hypotheses_met && bound.lhs >= bound.rhs,
                 ctx + " lhs=" + to_string(bound.lhs) + " rhs=" + to_string(bound.rhs) + " " + bound.note);
    }
  }
  return report;
}

}  // namespace dioph
