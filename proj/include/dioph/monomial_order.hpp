#pragma once

// Saturated (upward-closed) subsets of N^r, stored by their minimal
// generators, and the weighted threshold sets {b : t.b >= x}.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "dioph/rational.hpp"

namespace dioph {

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<std::uint32_t> entries);
  ExponentVector(std::initializer_list<std::uint32_t> entries);
  static ExponentVector zero(std::size_t length);

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& entries() const { return e_; }
  std::uint64_t total() const;

  /// Product order: every entry <= the other's.
  bool divides(const ExponentVector& other) const;
  ExponentVector join(const ExponentVector& other) const;  // componentwise max
  ExponentVector plus_unit(std::size_t i) const;

  auto operator<=>(const ExponentVector&) const = default;
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> e_;
};

/// Nonnegative rational weights, not all zero.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> entries);
  static WeightVector parse(const std::string& csv);  // "1,1/2,0"

  std::size_t size() const { return t_.size(); }
  const Rational& operator[](std::size_t i) const { return t_[i]; }
  const std::vector<Rational>& entries() const { return t_; }

  Rational dot(const ExponentVector& b) const;
  WeightVector scaled(const Rational& u) const;  // u > 0
  /// lambda * this + (1 - lambda) * other, lambda in [0, 1].
  WeightVector blend(const WeightVector& other, const Rational& lambda) const;

  bool operator==(const WeightVector&) const = default;
  std::string to_string() const;

 private:
  std::vector<Rational> t_;
};

/// Upward closure of a finite antichain.
class SaturatedSet {
 public:
  SaturatedSet() = default;
  /// Keeps the minimal elements of `generators` (any finite family).
  SaturatedSet(std::size_t dimension, std::vector<ExponentVector> generators);

  static SaturatedSet whole(std::size_t dimension);

  std::size_t dimension() const { return dim_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  bool contains(const ExponentVector& b) const;

  bool operator==(const SaturatedSet&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<ExponentVector> gens_;  // sorted antichain
};

/// Minimal elements of {b in N^r : t.b >= x}.
SaturatedSet threshold_set(const WeightVector& t, const Rational& x);

SaturatedSet intersect_saturated(const SaturatedSet& m, const SaturatedSet& n);

/// Repeats t_j eps_j times, in order.
WeightVector expand_weights(const WeightVector& t, std::span<const std::uint32_t> eps);

/// Image of a saturated subset of N^r under the block splitting
/// b -> {c in N^m : block sums of c equal b}, blocks of sizes eps.
SaturatedSet split_blocks(const SaturatedSet& s, std::span<const std::uint32_t> eps);

/// Minimal elements of a finite family under the product order, sorted.
std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> family);

}  // namespace dioph
