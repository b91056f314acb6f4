#pragma once

// Exact linear algebra over Q.
//
// `rank` is the production route: rows are scaled to primitive integer
// vectors, reduced modulo several 26-bit primes with the vectorised kernels,
// and the maximum modular rank is returned once the product of the primes
// exceeds a Hadamard bound on every maximal minor. That makes the result exact,
// not probabilistic. `rank_fraction_free` (Bareiss over Z) is the independent
// reference route.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dioph/kernels.hpp"
#include "dioph/rational.hpp"

namespace dioph::linalg {

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Rational row scaled to a primitive integer row (zero stays zero).
IntegerVector primitive_integer_row(const RationalVector& row);

std::size_t rank(std::span<const RationalVector> rows, std::size_t cols);
std::size_t rank(std::span<const RationalVector> rows, std::size_t cols,
                 const kernels::KernelTable& kernels);

/// Rank of the integer matrix reduced modulo p (p < 2^26).
std::size_t rank_mod_p(std::span<const IntegerVector> rows, std::size_t cols, std::uint32_t p,
                       const kernels::KernelTable& kernels);

/// Fraction-free Gaussian elimination (Bareiss) over Z.
std::size_t rank_fraction_free(std::span<const RationalVector> rows, std::size_t cols);

/// Coefficients c with sum_j c_j rows[j] = target, or nullopt when target is
/// outside the span. Free coefficients are set to zero.
std::optional<RationalVector> solve_combination(std::span<const RationalVector> rows,
                                                const RationalVector& target);

/// Primes below 2^26 in decreasing order, generated on first use.
const std::vector<std::uint32_t>& rank_primes();

/// A subspace of Q^n stored as a reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);

  static Subspace span(std::span<const RationalVector> vectors, std::size_t ambient_dim);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<RationalVector>& basis() const { return rows_; }

  /// Adds a vector; returns true when it enlarged the span.
  bool insert(RationalVector v);

  bool contains(const RationalVector& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  /// Zassenhaus intersection.
  Subspace intersect(const Subspace& other) const;

  /// Vectors of this space completing `inner` (which must be contained in it)
  /// to a basis of this space.
  std::vector<RationalVector> complement_of(const Subspace& inner) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  void reduce(RationalVector& v) const;

  std::size_t ambient_ = 0;
  std::vector<RationalVector> rows_;    // RREF rows sorted by pivot
  std::vector<std::size_t> pivots_;     // pivot column per row
};

}  // namespace dioph::linalg
