#pragma once

// The weighted filtration F(t)_x = (degree-N piece of I(t, x)) of the
// degree-N forms, its step profile, the vanishing weights mu_t(s), the
// averaged integral F(t), and bases adapted to one or two filtrations.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <span>
#include <utility>
#include <vector>

#include "dioph/graded_ring.hpp"
#include "dioph/linalg.hpp"

namespace dioph {

struct GradedShape {
  std::size_t n;
  std::uint32_t degree;
};

struct ProfileStep {
  Rational x;
  std::size_t dim;
};

/// Decreasing step function x -> dim F_x on [0, inf).
///
/// steps[k] = (x_k, d_k) means dim F_y = d_k for y in (x_{k-1}, x_k], with
/// x_{-1} = 0 and the value at y = 0 equal to d_0. Beyond the last x the
/// filtration is zero. The x_k increase strictly, the d_k decrease strictly,
/// and d_0 equals the ambient dimension.
class FiltrationProfile {
 public:
  FiltrationProfile(std::size_t ambient_dim, std::vector<ProfileStep> steps,
                    std::vector<linalg::Subspace> subspaces = {},
                    std::optional<GradedShape> shape = std::nullopt);

  /// Builds a profile from an explicit decreasing chain of subspaces
  /// (values at increasing abscissae); equal neighbours are merged.
  static FiltrationProfile from_chain(std::size_t ambient_dim,
                                      std::vector<std::pair<Rational, linalg::Subspace>> chain,
                                      std::optional<GradedShape> shape = std::nullopt);

  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<ProfileStep>& steps() const { return steps_; }
  bool has_subspaces() const { return !subspaces_.empty(); }
  const std::vector<linalg::Subspace>& subspaces() const { return subspaces_; }
  const std::optional<GradedShape>& shape() const { return shape_; }

  /// dim F_x, taking the value d_k on (x_{k-1}, x_k].
  std::size_t dim_at(const Rational& x) const;
  /// Largest step abscissa whose subspace contains v (needs subspaces).
  Rational mu_of(const linalg::RationalVector& v) const;

  friend bool operator==(const FiltrationProfile& a, const FiltrationProfile& b) {
    return a.ambient_ == b.ambient_ && a.steps_.size() == b.steps_.size() &&
           std::equal(a.steps_.begin(), a.steps_.end(), b.steps_.begin(),
                      [](const ProfileStep& p, const ProfileStep& q) {
                        return p.x == q.x && p.dim == q.dim;
                      });
  }

 private:
  std::size_t ambient_;
  std::vector<ProfileStep> steps_;
  std::vector<linalg::Subspace> subspaces_;
  std::optional<GradedShape> shape_;
};

/// Candidate abscissae {t.b : 0 <= b_i <= N / mindeg(Y_i)}, sorted, with 0.
std::vector<Rational> jump_candidates(std::span<const Subscheme> ys, const WeightVector& t,
                                      std::uint32_t degree);

FiltrationProfile build_profile(std::span<const Subscheme> ys, const WeightVector& t,
                                std::uint32_t degree, bool with_subspaces = true);

/// sup{y : s in F(t)_y}, attained at a candidate abscissa.
Rational mu_value(const HomogeneousForm& s, std::span<const Subscheme> ys, const WeightVector& t);

/// (1 / ambient) * integral of dim F_x dx.
Rational F_value(const FiltrationProfile& profile);

/// (F(u t), u F(t)) from two independent profile builds.
std::pair<Rational, Rational> scale_check(std::span<const Subscheme> ys, const WeightVector& t,
                                          const Rational& u, std::uint32_t degree);

struct AdaptedBasis {
  std::vector<linalg::RationalVector> vectors;
  std::vector<Rational> mu_values;
  std::optional<GradedShape> shape;

  std::vector<HomogeneousForm> elements() const;
};

/// For every step, the number of basis vectors inside the step subspace
/// equals its dimension (and the vectors form a basis of the ambient space).
bool is_adapted(std::span<const linalg::RationalVector> basis, const FiltrationProfile& profile);

/// A single basis adapted to both filtrations, with its mu-values under each.
/// Throws InvalidArgument for profiles without subspaces or over different
/// spaces, and Error if the certificate check fails.
std::pair<AdaptedBasis, AdaptedBasis> common_adapted_basis(const FiltrationProfile& first,
                                                           const FiltrationProfile& second);

struct WeightedBound {
  Rational lhs;  // F(t)
  Rational rhs;  // min_i (1/beta_i) sum_{m>=1} h0(I_i^m)_N / h0
  bool hypotheses_met = false;
  std::string note;
};

/// Compares F(t) with the per-subscheme lower bound for weights normalised
/// by sum beta_i t_i = 1. The inequality is a contract only when the
/// generators form a regular sequence; otherwise both sides are reported with
/// hypotheses_met = false.
WeightedBound weighted_min_bound(std::span<const Subscheme> ys, std::span<const Rational> betas,
                                 const WeightVector& t, std::uint32_t degree);

}  // namespace dioph
