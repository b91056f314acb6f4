#pragma once

// Homogeneous polynomials over Q in the variables x0..xn.

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/linalg.hpp"
#include "dioph/monomial_order.hpp"
#include "dioph/rational.hpp"

namespace dioph {

using Monomial = ExponentVector;

/// The degree-D monomials in `nvars` variables, x0^D first (lex descending).
class MonomialIndex {
 public:
  MonomialIndex(std::size_t nvars, std::uint32_t degree);

  /// Shared cached instance.
  static std::shared_ptr<const MonomialIndex> get(std::size_t nvars, std::uint32_t degree);

  std::size_t nvars() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  /// Position of a monomial; throws InvalidArgument when absent.
  std::size_t index_of(const Monomial& m) const;

 private:
  std::size_t nvars_;
  std::uint32_t degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> lookup_;
};

class HomogeneousForm {
 public:
  HomogeneousForm() = default;
  /// The zero form of the given shape.
  HomogeneousForm(std::size_t nvars, std::uint32_t degree);

  static HomogeneousForm monomial(Monomial exponents, Rational coefficient = 1);
  static HomogeneousForm variable(std::size_t index, std::size_t nvars);
  static HomogeneousForm constant(const Rational& c, std::size_t nvars);
  /// Parses sums of terms like "3/2*x0^2*x1 - x2^3". Throws ParseError when
  /// the text is malformed, mentions a variable beyond x{nvars-1}, or is not
  /// homogeneous.
  static HomogeneousForm parse(std::string_view text, std::size_t nvars);
  static HomogeneousForm from_coefficients(const linalg::RationalVector& coeffs,
                                           const MonomialIndex& index);

  std::size_t nvars() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  linalg::RationalVector coefficients(const MonomialIndex& index) const;

  Rational evaluate(std::span<const Rational> point) const;
  Rational evaluate(std::span<const Integer> point) const;

  /// Replaces x_i by images[i]; all images share one degree.
  HomogeneousForm substitute(std::span<const HomogeneousForm> images) const;

  /// Sum of absolute values of the coefficients.
  Rational coefficient_l1() const;

  HomogeneousForm& operator+=(const HomogeneousForm& other);
  HomogeneousForm& operator-=(const HomogeneousForm& other);
  HomogeneousForm& operator*=(const Rational& c);
  friend HomogeneousForm operator+(HomogeneousForm a, const HomogeneousForm& b) { return a += b; }
  friend HomogeneousForm operator-(HomogeneousForm a, const HomogeneousForm& b) { return a -= b; }
  friend HomogeneousForm operator*(HomogeneousForm a, const Rational& c) { return a *= c; }
  friend HomogeneousForm operator*(const Rational& c, HomogeneousForm a) { return a *= c; }
  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b);
  friend bool operator==(const HomogeneousForm&, const HomogeneousForm&) = default;
  friend bool operator<(const HomogeneousForm& a, const HomogeneousForm& b);

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  void check_compatible(const HomogeneousForm& other) const;

  std::size_t nvars_ = 0;
  std::uint32_t degree_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// a^e for e >= 0.
HomogeneousForm power(const HomogeneousForm& a, std::uint32_t e);

}  // namespace dioph
