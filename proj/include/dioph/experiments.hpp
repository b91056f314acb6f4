#pragma once

// Numerical explorations: scans of the proximity inequality over sampled
// points, the sigma selection of the proof, the three-point blow-up table and
// a randomised property suite for the weighted filtrations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dioph/graded_ring.hpp"
#include "dioph/heights.hpp"

namespace dioph {

/// Canonical points of P^n with all |coordinates| <= bound, sorted by height
/// then coordinates.
std::vector<ProjectivePoint> sample_points(std::size_t n, std::uint32_t bound);

struct InequalityConfig {
  std::size_t n = 2;
  std::vector<Subscheme> subschemes;
  std::vector<Rational> betas;
  PlaceSet places = PlaceSet({Place::infinity()});
  Rational epsilon = Rational(1, 10);
  LogRational height_floor = LogRational(10);
  std::vector<Subscheme> exceptional;

  void validate() const;
};

struct ScanRow {
  ProjectivePoint point;
  LogRational height;
  std::vector<LogRational> proximities;
  double lhs = 0.0;  // sum beta_i m_i
  double rhs = 0.0;  // (1 + eps) h
  std::optional<double> ratio;
  bool violation = false;  // exact comparison lhs > rhs, above the floor
};

struct ScanReport {
  std::vector<ScanRow> rows;  // evaluated points only
  std::vector<std::size_t> violations;
  std::optional<std::size_t> max_ratio_row;
  std::size_t skipped = 0;   // on the support of some Y_i
  std::size_t excluded = 0;  // on the exceptional set
  std::size_t evaluated = 0;
  std::size_t zero_height = 0;
};

ScanReport scan_inequality(const InequalityConfig& cfg, const std::vector<ProjectivePoint>& points);

/// Exact test of sum beta_i log r_i > (1 + eps) log h for positive rationals.
bool weighted_log_exceeds(const std::vector<Rational>& betas, const std::vector<LogRational>& logs,
                          const Rational& scale, const LogRational& rhs);

/// Indices of the largest Weil values (ties by index; support hits count as
/// +infinity) forming the longest prefix whose supports still meet.
std::vector<std::size_t> sigma_select(const ProjectivePoint& pt, const Place& v,
                                      const std::vector<Subscheme>& ys);
/// Same selection from given values (+infinity allowed).
std::vector<std::size_t> sigma_select(const std::vector<double>& lambdas,
                                      const std::vector<Subscheme>& ys);

struct Example5Row {
  std::int64_t l;
  std::int64_t a_squared;
  std::int64_t a_dot_d;
  Rational xi;
  Rational beta;
  Rational seshadri;
  Rational bound;       // l / 3
  Rational beta_floor;  // 3 l / 4
};

std::vector<Example5Row> example5_table(std::int64_t l_max);

struct PropertyOutcome {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct PropertySuiteReport {
  std::size_t instances = 0;
  std::vector<PropertyOutcome> outcomes;
  bool all_passed() const;
};

/// Randomised checks of the filtration identities on subschemes cut out by
/// powers of coordinates (optionally after a random linear change), in P^2
/// and P^3 with degrees <= max_degree.
PropertySuiteReport run_property_suite(std::uint64_t seed, std::size_t instances,
                                       std::uint32_t max_degree = 6);

}  // namespace dioph
