#pragma once

// Truncations beta_N(O(d), Y) = sum_{m>=1} h0(O(dN) (x) I_Y^m) / (N h0(O(dN)))
// for subschemes of P^n, computed from graded pieces of ideal powers.

#include <cstdint>
#include <vector>

#include "dioph/graded_ring.hpp"
#include "dioph/rational.hpp"

namespace dioph {

struct BetaReport {
  std::uint32_t level = 0;  // N
  Integer numerator;
  Integer denominator;
  Rational value;
  /// h0(O(dN) (x) I_Y^m) for m = 1, 2, ... up to the first zero.
  std::vector<std::uint64_t> terms;
};

BetaReport beta_truncated(const Subscheme& y, std::uint32_t d, std::uint32_t level);

struct BetaConvergenceRow {
  BetaReport report;
  Rational min_so_far;
};

/// beta_N for N = 1..max_level with a running minimum (the liminf proxy).
std::vector<BetaConvergenceRow> beta_convergence(const Subscheme& y, std::uint32_t d,
                                                 std::uint32_t max_level);

struct BlowupCrosscheck {
  Rational direct;
  Rational blowup;
  /// Per m = 1..dN+1: h0 of the ideal power and of (dN)H - mE on Bl_1 P^2.
  std::vector<std::uint64_t> direct_terms;
  std::vector<std::uint64_t> blowup_terms;
  bool termwise_equal = false;
};

/// Compares the graded count with h0((dN) H - m E) on the blow-up of P^2 at
/// the point. Throws InvalidArgument unless y is a reduced point of P^2
/// (two independent linear generators).
BlowupCrosscheck beta_blowup_crosscheck(const Subscheme& y, std::uint32_t d, std::uint32_t level);

}  // namespace dioph
