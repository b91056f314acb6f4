#pragma once

// Places of Q, heights and Weil functions on P^n(Q).
//
// With the max-of-coordinates normalisation every local quantity is the log
// of a positive rational, so values are carried as LogRational and sums over
// places are exact products.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/graded_ring.hpp"
#include "dioph/rational.hpp"

namespace dioph {

/// log r for a positive rational r.
class LogRational {
 public:
  LogRational() : r_(1) {}
  explicit LogRational(Rational r);

  const Rational& argument() const { return r_; }
  double to_double() const;
  std::string to_string() const;  // "log(5/4)"

  LogRational& operator+=(const LogRational& o);
  LogRational& operator-=(const LogRational& o);
  friend LogRational operator+(LogRational a, const LogRational& b) { return a += b; }
  friend LogRational operator-(LogRational a, const LogRational& b) { return a -= b; }
  /// k * log r = log r^k.
  friend LogRational operator*(long k, const LogRational& a);
  friend bool operator==(const LogRational& a, const LogRational& b) { return a.r_ == b.r_; }
  friend bool operator<(const LogRational& a, const LogRational& b) { return a.r_ < b.r_; }
  friend bool operator<=(const LogRational& a, const LogRational& b) { return a.r_ <= b.r_; }
  friend bool operator>(const LogRational& a, const LogRational& b) { return a.r_ > b.r_; }
  friend bool operator>=(const LogRational& a, const LogRational& b) { return a.r_ >= b.r_; }

 private:
  Rational r_;
};

class Place {
 public:
  static Place infinity() { return Place(); }
  static Place prime(const Integer& p);
  static Place parse(std::string_view text);  // "inf" or a prime

  bool archimedean() const { return archimedean_; }
  const Integer& p() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.archimedean_ == b.archimedean_ && a.p_ == b.p_;
  }
  /// Infinity first, then primes in increasing order.
  friend bool operator<(const Place& a, const Place& b) {
    if (a.archimedean_ != b.archimedean_) return a.archimedean_;
    return a.p_ < b.p_;
  }

 private:
  Place() = default;
  bool archimedean_ = true;
  Integer p_ = 0;
};

/// A finite set of places containing infinity.
class PlaceSet {
 public:
  explicit PlaceSet(std::vector<Place> places);
  static PlaceSet parse(std::string_view csv);  // "inf,2,3,5"

  const std::vector<Place>& places() const { return places_; }
  std::string to_string() const;

 private:
  std::vector<Place> places_;
};

/// A point of P^n(Q) with coprime integer coordinates whose first nonzero
/// entry is positive.
class ProjectivePoint {
 public:
  /// Canonicalises any nonzero rational tuple.
  explicit ProjectivePoint(std::vector<Rational> coords);
  explicit ProjectivePoint(const std::vector<Integer>& coords);
  static ProjectivePoint parse(std::string_view text);  // "2:3", "1/2:-3:4"

  std::size_t n() const { return coords_.size() - 1; }
  const std::vector<Integer>& coords() const { return coords_; }
  std::string to_string() const;  // "2:3"

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::vector<Integer> coords_;
};

/// ||x||_v: |x| at infinity, p^(-ord_p x) at p. Throws for x = 0.
Rational norm(const Rational& x, const Place& v);

/// max_j ||x_j||_v.
Rational coordinate_norm(const ProjectivePoint& pt, const Place& v);

/// log max |x_i|, which for coprime coordinates equals the sum over all places.
LogRational height(const ProjectivePoint& pt);

/// min over generators phi of log(max_j ||x_j||_v^deg(phi) / ||phi(x)||_v).
/// Generators vanishing at the point are skipped; throws SupportHit when all
/// vanish.
LogRational weil(const Subscheme& y, const Place& v, const ProjectivePoint& pt);

/// sum over v in S of weil(Y, v, P).
LogRational proximity(const Subscheme& y, const PlaceSet& s, const ProjectivePoint& pt);

/// Places where some weil(Y, v, P) can be nonzero: infinity and the primes
/// dividing a nonzero generator value.
std::vector<Place> relevant_places(const Subscheme& y, const ProjectivePoint& pt);

/// Whether every generator of Y vanishes at P.
bool on_support(const Subscheme& y, const ProjectivePoint& pt);

/// Largest p-adic norm (p-norm at a prime, L1 norm at infinity) of the
/// coefficients of a form.
Rational coefficient_size(const HomogeneousForm& f, const Place& v);

/// weil(Y, v, P) >= -log C_v for all P; returns log C_v.
LogRational nonnegativity_constant(const Subscheme& y, const Place& v);

/// psi_k = sum_i h[k][i] * phi_i, expressing the generators psi of Y through
/// the generators phi of X (so I_Y is inside I_X and weil_X <= weil_Y + C).
/// Entries are nullopt when the degree gap is negative or the cofactor is 0.
struct ContainmentCertificate {
  std::vector<std::vector<std::optional<HomogeneousForm>>> cofactors;
};

/// Finds cofactors by exact linear algebra; nullopt when I_Y is not in I_X.
std::optional<ContainmentCertificate> find_containment(const Subscheme& x, const Subscheme& y);
bool verify_containment(const ContainmentCertificate& c, const Subscheme& x, const Subscheme& y);
/// log C_v with weil(X, v, P) <= weil(Y, v, P) + log C_v.
LogRational containment_constant(const ContainmentCertificate& c, const Place& v);

}  // namespace dioph
