#pragma once

// Graded pieces of homogeneous ideals in Q[x0..xn], n <= 3.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dioph/linalg.hpp"
#include "dioph/monomial_order.hpp"
#include "dioph/polynomial.hpp"

namespace dioph {

inline constexpr std::size_t kMaxProjectiveDim = 3;

/// A closed subscheme of P^n given by homogeneous generators of its ideal.
class Subscheme {
 public:
  Subscheme() = default;
  Subscheme(std::string label, std::vector<HomogeneousForm> generators,
            std::optional<unsigned> codim_hint = std::nullopt);

  /// Generators as polynomial strings in x0..xn.
  static Subscheme parse(std::string label, std::span<const std::string> generators,
                         std::size_t n);
  /// Comma-separated generator list, e.g. "x0,x1^2".
  static Subscheme parse_list(std::string label, const std::string& generators, std::size_t n);

  const std::string& label() const { return label_; }
  const std::vector<HomogeneousForm>& generators() const { return generators_; }
  std::optional<unsigned> codim_hint() const { return codim_hint_; }
  /// Projective dimension of the ambient space.
  std::size_t n() const { return generators_.front().nvars() - 1; }
  std::size_t nvars() const { return generators_.front().nvars(); }

  std::uint32_t min_degree() const;
  std::uint32_t max_degree() const;
  bool is_monomial() const;
  bool is_linear() const;

 private:
  std::string label_;
  std::vector<HomogeneousForm> generators_;
  std::optional<unsigned> codim_hint_;
};

/// Intersection X cap Y, modelled by the sum of ideals.
Subscheme intersection_scheme(const Subscheme& x, const Subscheme& y);
/// The subscheme sum X + Y, whose ideal is the product I_X * I_Y.
Subscheme sum_scheme(const Subscheme& x, const Subscheme& y);
/// Ideal power I_Y^m as a subscheme (generators: distinct m-fold products).
Subscheme power_scheme(const Subscheme& y, std::uint32_t m);
/// Image under the linear substitution x_i -> sum_j matrix[i][j] x_j.
Subscheme linear_change(const Subscheme& y, const std::vector<std::vector<Rational>>& matrix);

/// A subspace of the degree-D forms on P^n, with an exact basis.
class GradedPiece {
 public:
  GradedPiece(std::size_t n, std::uint32_t degree);
  static GradedPiece span(std::span<const HomogeneousForm> forms, std::size_t n,
                          std::uint32_t degree);
  static GradedPiece whole(std::size_t n, std::uint32_t degree);

  std::size_t n() const { return n_; }
  std::uint32_t degree() const { return degree_; }
  std::size_t dim() const { return space_.dim(); }
  std::vector<HomogeneousForm> basis() const;
  const linalg::Subspace& space() const { return space_; }
  const MonomialIndex& index() const { return *index_; }

  bool contains(const HomogeneousForm& f) const;
  bool contains(const GradedPiece& other) const;
  GradedPiece intersect(const GradedPiece& other) const;
  GradedPiece sum(const GradedPiece& other) const;

 private:
  GradedPiece(std::size_t n, std::uint32_t degree, linalg::Subspace space);

  std::size_t n_;
  std::uint32_t degree_;
  std::shared_ptr<const MonomialIndex> index_;
  linalg::Subspace space_;
};

/// h0(P^n, O(D)) = C(D+n, n).
std::uint64_t dim_full(std::uint32_t degree, std::size_t n);

/// Rank over Q of forms of one common degree (exact).
std::size_t span_rank(std::span<const HomogeneousForm> forms);

/// The distinct m-fold products of generators of Y of degree <= max_degree.
std::vector<HomogeneousForm> power_products(const Subscheme& y, std::uint32_t m,
                                            std::uint32_t max_degree);

/// {g * x^a : g in generators, |a| = D - deg g}, spanning the degree-D piece of
/// the ideal generated by `generators`.
std::vector<HomogeneousForm> degree_span(std::span<const HomogeneousForm> generators,
                                         std::uint32_t degree);

std::size_t graded_dim_ideal_power(const Subscheme& y, std::uint32_t m, std::uint32_t degree);
GradedPiece graded_piece_ideal_power(const Subscheme& y, std::uint32_t m, std::uint32_t degree);

/// Generators (of degree <= D) of the ideal sum over minimal b of
/// prod_i I_{Y_i}^{b_i}, with b ranging over the threshold set {t.b >= x}.
std::vector<HomogeneousForm> filtration_ideal_generators(std::span<const Subscheme> ys,
                                                         const WeightVector& t,
                                                         const Rational& x,
                                                         std::uint32_t degree);
std::size_t graded_dim_filtration_ideal(std::span<const Subscheme> ys, const WeightVector& t,
                                        const Rational& x, std::uint32_t degree);
GradedPiece graded_piece_filtration_ideal(std::span<const Subscheme> ys, const WeightVector& t,
                                          const Rational& x, std::uint32_t degree);

/// Generators phi^b (b a generator of `set`) of the ideal I(set) attached to a
/// sequence of forms phi, restricted to degree <= D.
std::vector<HomogeneousForm> monomial_ideal_generators(std::span<const HomogeneousForm> phis,
                                                       const SaturatedSet& set,
                                                       std::uint32_t degree);

}  // namespace dioph
