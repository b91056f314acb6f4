#pragma once

// Support geometry for the subscheme catalog: linear subspaces (all
// generators of degree one) and hypersurfaces (one generator). Intersections
// are decided by linear algebra plus, on projective lines, gcds of binary
// forms.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dioph/graded_ring.hpp"

namespace dioph {

enum class CatalogKind { Linear, Hypersurface };

/// Throws Unsupported for members outside the catalog.
CatalogKind catalog_kind(const Subscheme& y);

/// Codimension of Supp Y in P^n.
std::size_t catalog_codim(const Subscheme& y);

/// Projective dimension of the intersection of the supports of the selected
/// members; nullopt encodes the empty set (dimension -infinity).
std::optional<int> support_intersection_dim(std::span<const Subscheme> ys,
                                            std::span<const std::size_t> members);
std::optional<int> support_intersection_dim(std::span<const Subscheme> ys);

struct GeneralPositionReport {
  bool general = true;
  /// First violating index set (0-based), ordered by size then lexicographically.
  std::vector<std::size_t> witness;
  std::size_t witness_codim = 0;
  std::size_t witness_required = 0;
};

GeneralPositionReport check_general_position(std::span<const Subscheme> ys);

/// Whether all generators of all members, taken together, form a homogeneous
/// regular sequence in Q[x0..xn]. In this Cohen-Macaulay ring that holds iff
/// the common zero locus has codimension equal to the number of generators.
bool is_regular_sequence(std::span<const Subscheme> ys);

}  // namespace dioph
