#include "dioph/filtration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "dioph/errors.hpp"
#include "dioph/position.hpp"

namespace dioph {

FiltrationProfile::FiltrationProfile(std::size_t ambient_dim, std::vector<ProfileStep> steps,
                                     std::vector<linalg::Subspace> subspaces,
                                     std::optional<GradedShape> shape)
    : ambient_(ambient_dim),
      steps_(std::move(steps)),
      subspaces_(std::move(subspaces)),
      shape_(shape) {
  if (ambient_ == 0) throw InvalidArgument("filtration of the zero space");
  if (steps_.empty()) throw InvalidArgument("profile needs at least one step");
  if (steps_.front().dim != ambient_) throw InvalidArgument("profile must start at the ambient dim");
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    if (steps_[k].x < 0) throw InvalidArgument("negative abscissa in profile");
    if (steps_[k].dim == 0) throw InvalidArgument("zero-dimensional step in profile");
    if (k > 0 && (steps_[k].x <= steps_[k - 1].x || steps_[k].dim >= steps_[k - 1].dim)) {
      throw InvalidArgument("profile steps must increase in x and decrease in dim");
    }
  }
  if (!subspaces_.empty()) {
    if (subspaces_.size() != steps_.size()) throw InvalidArgument("one subspace per step required");
    for (std::size_t k = 0; k < steps_.size(); ++k) {
      if (subspaces_[k].ambient_dim() != ambient_ || subspaces_[k].dim() != steps_[k].dim) {
        throw InvalidArgument("step subspace does not match its dimension");
      }
      if (k > 0 && !subspaces_[k - 1].contains(subspaces_[k])) {
        throw InvalidArgument("step subspaces are not nested");
      }
    }
  }
}

FiltrationProfile FiltrationProfile::from_chain(
    std::size_t ambient_dim, std::vector<std::pair<Rational, linalg::Subspace>> chain,
    std::optional<GradedShape> shape) {
  std::vector<ProfileStep> steps;
  std::vector<linalg::Subspace> spaces;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const auto& [x, s] = chain[k];
    if (s.dim() == 0) break;
    const bool last_of_run = k + 1 == chain.size() || chain[k + 1].second.dim() != s.dim();
    if (!last_of_run) continue;
    steps.push_back({x, s.dim()});
    spaces.push_back(s);
  }
  return FiltrationProfile(ambient_dim, std::move(steps), std::move(spaces), shape);
}

std::size_t FiltrationProfile::dim_at(const Rational& x) const {
  if (x < 0) throw InvalidArgument("negative abscissa");
  for (const auto& s : steps_) {
    if (x <= s.x) return s.dim;
  }
  return 0;
}

Rational FiltrationProfile::mu_of(const linalg::RationalVector& v) const {
  if (subspaces_.empty()) throw InvalidArgument("profile carries no subspaces");
  if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; })) {
    throw InvalidArgument("mu of the zero vector");
  }
  Rational mu = 0;
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    if (!subspaces_[k].contains(v)) break;
    mu = steps_[k].x;
  }
  return mu;
}

// ---------------------------------------------------------------------------

std::vector<Rational> jump_candidates(std::span<const Subscheme> ys, const WeightVector& t,
                                      std::uint32_t degree) {
  if (ys.size() != t.size()) throw DimensionMismatch("one weight per subscheme required");
  std::set<Rational> values{Rational(0)};
  std::vector<std::uint32_t> bound;
  for (const auto& y : ys) bound.push_back(degree / y.min_degree());
  std::vector<std::uint32_t> b(ys.size(), 0);
  while (true) {
    Rational v = 0;
    for (std::size_t i = 0; i < b.size(); ++i) v += t[i] * b[i];
    values.insert(v);
    std::size_t i = 0;
    while (i < b.size() && b[i] == bound[i]) b[i++] = 0;
    if (i == b.size()) break;
    ++b[i];
  }
  return {values.begin(), values.end()};
}

namespace {

// Records every index k with dim(k) != dim(k+1), assuming dims nonincreasing.
void find_breaks(const std::vector<Rational>& xs, std::size_t lo, std::size_t hi,
                 std::map<std::size_t, std::size_t>& dims,
                 const std::function<std::size_t(const Rational&)>& dim_of,
                 std::vector<std::size_t>& breaks) {
  auto get = [&](std::size_t k) {
    auto it = dims.find(k);
    if (it == dims.end()) it = dims.emplace(k, dim_of(xs[k])).first;
    return it->second;
  };
  if (get(lo) == get(hi)) return;
  if (hi == lo + 1) {
    breaks.push_back(lo);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  find_breaks(xs, lo, mid, dims, dim_of, breaks);
  find_breaks(xs, mid, hi, dims, dim_of, breaks);
}

}  // namespace

FiltrationProfile build_profile(std::span<const Subscheme> ys, const WeightVector& t,
                                std::uint32_t degree, bool with_subspaces) {
  if (ys.empty()) throw InvalidArgument("need at least one subscheme");
  const std::size_t n = ys.front().n();
  const std::size_t ambient = dim_full(degree, n);
  const auto xs = jump_candidates(ys, t, degree);

  std::map<std::size_t, std::size_t> dims;
  const std::function<std::size_t(const Rational&)> dim_of = [&](const Rational& x) {
    return graded_dim_filtration_ideal(ys, t, x, degree);
  };
  std::vector<std::size_t> breaks;
  find_breaks(xs, 0, xs.size() - 1, dims, dim_of, breaks);
  std::sort(breaks.begin(), breaks.end());
  const std::size_t last = xs.size() - 1;
  if (dims.count(last) == 0) dims[last] = dim_of(xs[last]);
  if (dims.at(last) > 0) breaks.push_back(last);

  std::vector<ProfileStep> steps;
  std::vector<linalg::Subspace> spaces;
  for (std::size_t k : breaks) {
    const std::size_t d = dims.count(k) ? dims.at(k) : dim_of(xs[k]);
    if (d == 0) continue;
    steps.push_back({xs[k], d});
    if (with_subspaces) {
      spaces.push_back(graded_piece_filtration_ideal(ys, t, xs[k], degree).space());
    }
  }
  return FiltrationProfile(ambient, std::move(steps), std::move(spaces),
                           GradedShape{n, degree});
}

Rational mu_value(const HomogeneousForm& s, std::span<const Subscheme> ys, const WeightVector& t) {
  if (s.is_zero()) throw InvalidArgument("mu of the zero form");
  if (ys.empty()) throw InvalidArgument("need at least one subscheme");
  if (s.nvars() != ys.front().nvars()) throw DimensionMismatch("form and subschemes differ");
  const std::uint32_t degree = s.degree();
  const auto xs = jump_candidates(ys, t, degree);
  auto member = [&](const Rational& x) {
    if (x == 0) return true;
    auto spanning = degree_span(filtration_ideal_generators(ys, t, x, degree), degree);
    const std::size_t base = span_rank(spanning);
    if (base == 0) return false;
    spanning.push_back(s);
    return span_rank(spanning) == base;
  };
  // Membership is monotone: find the last candidate that contains s.
  std::size_t lo = 0, hi = xs.size();  // member(xs[lo]) holds; answer in [lo, hi)
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (member(xs[mid])) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return xs[lo];
}

Rational F_value(const FiltrationProfile& profile) {
  Rational area = 0;
  Rational prev = 0;
  for (const auto& s : profile.steps()) {
    area += (s.x - prev) * static_cast<unsigned long>(s.dim);
    prev = s.x;
  }
  return area / static_cast<unsigned long>(profile.ambient_dim());
}

std::pair<Rational, Rational> scale_check(std::span<const Subscheme> ys, const WeightVector& t,
                                          const Rational& u, std::uint32_t degree) {
  if (u <= 0) throw InvalidArgument("scale factor must be positive");
  const Rational scaled = F_value(build_profile(ys, t.scaled(u), degree, false));
  const Rational base = F_value(build_profile(ys, t, degree, false));
  return {scaled, u * base};
}

// ---------------------------------------------------------------------------

std::vector<HomogeneousForm> AdaptedBasis::elements() const {
  if (!shape) throw InvalidArgument("basis is not attached to a graded piece");
  const auto index = MonomialIndex::get(shape->n + 1, shape->degree);
  std::vector<HomogeneousForm> out;
  for (const auto& v : vectors) out.push_back(HomogeneousForm::from_coefficients(v, *index));
  return out;
}

bool is_adapted(std::span<const linalg::RationalVector> basis, const FiltrationProfile& profile) {
  if (!profile.has_subspaces()) throw InvalidArgument("profile carries no subspaces");
  if (basis.size() != profile.ambient_dim()) return false;
  if (linalg::rank(basis, profile.ambient_dim()) != basis.size()) return false;
  for (std::size_t k = 0; k < profile.steps().size(); ++k) {
    const auto& space = profile.subspaces()[k];
    const auto inside = std::count_if(basis.begin(), basis.end(),
                                      [&](const auto& v) { return space.contains(v); });
    if (static_cast<std::size_t>(inside) != space.dim()) return false;
  }
  return true;
}

std::pair<AdaptedBasis, AdaptedBasis> common_adapted_basis(const FiltrationProfile& first,
                                                           const FiltrationProfile& second) {
  if (!first.has_subspaces() || !second.has_subspaces()) {
    throw InvalidArgument("adapted bases need profiles with subspaces");
  }
  if (first.ambient_dim() != second.ambient_dim()) {
    throw DimensionMismatch("filtrations of different spaces");
  }
  const std::size_t ambient = first.ambient_dim();
  // Chains S_0 > S_1 > ... > 0 and T_0 > ... > 0.
  std::vector<linalg::Subspace> s = first.subspaces();
  std::vector<linalg::Subspace> t = second.subspaces();
  s.emplace_back(ambient);
  t.emplace_back(ambient);

  // The complements of (S_{i+1} cap T_j) + (S_i cap T_{j+1}) inside
  // S_i cap T_j, over all (i, j), form a basis adapted to both chains.
  std::vector<std::vector<linalg::Subspace>> meet(s.size(), std::vector<linalg::Subspace>(t.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) meet[i][j] = s[i].intersect(t[j]);
  }
  std::vector<linalg::RationalVector> basis;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    for (std::size_t j = 0; j + 1 < t.size(); ++j) {
      const linalg::Subspace inner = meet[i + 1][j].sum(meet[i][j + 1]);
      for (auto& v : meet[i][j].complement_of(inner)) basis.push_back(std::move(v));
    }
  }
  if (!is_adapted(basis, first) || !is_adapted(basis, second)) {
    throw Error("common adapted basis failed its certificate check");
  }
  AdaptedBasis a{basis, {}, first.shape()};
  AdaptedBasis b{basis, {}, second.shape()};
  for (const auto& v : basis) {
    a.mu_values.push_back(first.mu_of(v));
    b.mu_values.push_back(second.mu_of(v));
  }
  return {std::move(a), std::move(b)};
}

// ---------------------------------------------------------------------------

WeightedBound weighted_min_bound(std::span<const Subscheme> ys, std::span<const Rational> betas,
                                 const WeightVector& t, std::uint32_t degree) {
  if (betas.size() != ys.size() || t.size() != ys.size()) {
    throw DimensionMismatch("one beta and one weight per subscheme required");
  }
  Rational norm = 0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (betas[i] <= 0) throw InvalidArgument("beta values must be positive");
    norm += betas[i] * t[i];
  }
  if (norm != 1) throw InvalidArgument("weights must satisfy sum beta_i t_i = 1");

  WeightedBound out;
  out.lhs = F_value(build_profile(ys, t, degree, false));
  const auto ambient = static_cast<unsigned long>(dim_full(degree, ys.front().n()));
  bool first = true;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    unsigned long total = 0;
    for (std::uint32_t m = 1;; ++m) {
      const std::size_t d = graded_dim_ideal_power(ys[i], m, degree);
      if (d == 0) break;
      total += d;
    }
    const Rational value = Rational(total, ambient) / betas[i];
    if (first || value < out.rhs) out.rhs = value;
    first = false;
  }
  out.rhs.canonicalize();
  try {
    out.hypotheses_met = is_regular_sequence(ys);
    out.note = out.hypotheses_met ? "generators form a regular sequence"
                                  : "hypotheses unmet: generators are not a regular sequence";
  } catch (const Unsupported& e) {
    out.hypotheses_met = false;
    out.note = std::string("hypotheses unmet: ") + e.what();
  }
  return out;
}

}  // namespace dioph
