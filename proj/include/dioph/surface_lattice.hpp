#pragma once

// Intersection theory on the blow-up of P^2 at k <= 3 general points,
// Pic = Z H + Z E_1 + ... + Z E_k with H^2 = 1, E_i^2 = -1.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/rational.hpp"

namespace dioph {

inline constexpr std::size_t kMaxBlownUpPoints = 3;

/// D = a H + sum_i b_i E_i.
class PicardClass {
 public:
  PicardClass() = default;
  PicardClass(std::int64_t a, std::vector<std::int64_t> b);

  static PicardClass hyperplane(std::size_t k);
  static PicardClass exceptional(std::size_t i, std::size_t k);  // E_{i+1}
  /// Literals such as "3H - E1 - 2E2" or "-2*E3 + H".
  static PicardClass parse(std::string_view text, std::size_t k);

  std::int64_t a() const { return a_; }
  const std::vector<std::int64_t>& b() const { return b_; }
  std::size_t k() const { return b_.size(); }

  PicardClass& operator+=(const PicardClass& o);
  PicardClass& operator-=(const PicardClass& o);
  friend PicardClass operator+(PicardClass x, const PicardClass& y) { return x += y; }
  friend PicardClass operator-(PicardClass x, const PicardClass& y) { return x -= y; }
  friend PicardClass operator*(std::int64_t c, PicardClass x);
  friend bool operator==(const PicardClass&, const PicardClass&) = default;

  std::string to_string() const;

 private:
  std::int64_t a_ = 0;
  std::vector<std::int64_t> b_;
};

std::int64_t intersect(const PicardClass& c, const PicardClass& d);

/// The blow-up Bl_k P^2 with its finite curve data.
class SurfaceModel {
 public:
  explicit SurfaceModel(std::size_t k);

  std::size_t k() const { return k_; }
  PicardClass canonical() const;
  /// The (-1)-curves: E_i and H - E_i - E_j.
  const std::vector<PicardClass>& neg_curves() const { return neg_; }
  /// Generators of the cone of curves (H for k = 0; adds H - E_1 for k = 1).
  const std::vector<PicardClass>& mori_generators() const { return mori_; }
  /// Generators of the nef cone.
  const std::vector<PicardClass>& nef_generators() const { return nef_; }

 private:
  std::size_t k_;
  std::vector<PicardClass> neg_, mori_, nef_;
};

struct NefReport {
  bool nef = true;
  std::optional<PicardClass> violating;
};

NefReport is_nef(const SurfaceModel& s, const PicardClass& d);

/// Nef test for the Q-class A - gamma D.
NefReport is_nef_combination(const SurfaceModel& s, const PicardClass& a, const Rational& gamma,
                             const PicardClass& d);

struct SeshadriReport {
  std::optional<Rational> value;  // nullopt: no constraint (+infinity)
  std::optional<PicardClass> tight_curve;
};

/// sup{gamma >= 0 : A - gamma D nef}. Throws InvalidArgument if A is not nef.
SeshadriReport seshadri(const SurfaceModel& s, const PicardClass& a, const PicardClass& d);

/// h0(O(D)) by stripping negative curves from the base locus until D is nef,
/// then Riemann-Roch.
std::int64_t zariski_h0(const SurfaceModel& s, const PicardClass& d);

/// (2/3 xi A^2 - 1/3 (A.D) xi^2) / A^2 with xi = A^2 / (2 A.D), for D^2 = 0.
Rational beta_closed_form(const SurfaceModel& s, const PicardClass& a, const PicardClass& d);

/// sum_{m >= 1} h0(N A - m D) / (N h0(N A)).
Rational beta_surface_truncated(const SurfaceModel& s, const PicardClass& a, const PicardClass& d,
                                std::uint32_t level);

struct BetaSeshadriComparison {
  Rational beta;
  bool beta_exact = false;  // closed form rather than a truncation
  std::optional<Rational> seshadri;
  std::optional<Rational> bound;  // r / (n + 1) * seshadri
};

BetaSeshadriComparison compare_beta_seshadri(const SurfaceModel& s, const PicardClass& a,
                                             const PicardClass& d, unsigned r, unsigned n,
                                             std::uint32_t level = 12);

/// A(l) = l (D_1 + D_2 + D_3) + D_4 on Bl_3 P^2, with D_i = H - E_i for
/// i <= 3 and D_4 = H.
PicardClass three_point_polarization(std::int64_t l);
/// H - E_{i+1} on Bl_3 P^2.
PicardClass pencil_class(std::size_t i);

}  // namespace dioph
