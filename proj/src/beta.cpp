#include "dioph/beta.hpp"

#include "dioph/errors.hpp"
#include "dioph/surface_lattice.hpp"

namespace dioph {

BetaReport beta_truncated(const Subscheme& y, std::uint32_t d, std::uint32_t level) {
  if (level == 0) throw InvalidArgument("truncation level N must be positive");
  if (d == 0) throw InvalidArgument("line bundle degree must be positive");
  const std::uint32_t degree = d * level;
  BetaReport out;
  out.level = level;
  out.numerator = 0;
  for (std::uint32_t m = 1;; ++m) {
    const std::size_t h = graded_dim_ideal_power(y, m, degree);
    if (h == 0) break;
    out.terms.push_back(h);
    out.numerator += static_cast<unsigned long>(h);
  }
  out.denominator = Integer(level) * static_cast<unsigned long>(dim_full(degree, y.n()));
  out.value = Rational(out.numerator, out.denominator);
  out.value.canonicalize();
  return out;
}

std::vector<BetaConvergenceRow> beta_convergence(const Subscheme& y, std::uint32_t d,
                                                 std::uint32_t max_level) {
  if (max_level == 0) throw InvalidArgument("N_max must be positive");
  std::vector<BetaConvergenceRow> rows;
  for (std::uint32_t level = 1; level <= max_level; ++level) {
    auto report = beta_truncated(y, d, level);
    Rational low = rows.empty() || report.value < rows.back().min_so_far ? report.value
                                                                          : rows.back().min_so_far;
    rows.push_back({std::move(report), low});
  }
  return rows;
}

BlowupCrosscheck beta_blowup_crosscheck(const Subscheme& y, std::uint32_t d, std::uint32_t level) {
  if (y.n() != 2 || !y.is_linear()) throw InvalidArgument("cross-check needs a point of P^2");
  std::vector<linalg::RationalVector> rows;
  const auto index = MonomialIndex::get(3, 1);
  for (const auto& g : y.generators()) rows.push_back(g.coefficients(*index));
  if (linalg::rank(rows, 3) != 2) throw InvalidArgument("cross-check needs a reduced point of P^2");

  BlowupCrosscheck out;
  out.direct = beta_truncated(y, d, level).value;
  const SurfaceModel blowup(1);
  const std::int64_t degree = static_cast<std::int64_t>(d) * level;
  const auto h = PicardClass::hyperplane(1), e = PicardClass::exceptional(0, 1);
  Integer total = 0;
  out.termwise_equal = true;
  for (std::int64_t m = 1; m <= degree + 1; ++m) {
    const auto direct = graded_dim_ideal_power(y, static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(degree));
    const auto lifted = static_cast<std::uint64_t>(zariski_h0(blowup, degree * h - m * e));
    out.direct_terms.push_back(direct);
    out.blowup_terms.push_back(lifted);
    out.termwise_equal = out.termwise_equal && direct == lifted;
    total += static_cast<unsigned long>(lifted);
  }
  const auto full = static_cast<unsigned long>(zariski_h0(blowup, degree * h));
  out.blowup = Rational(total, Integer(level) * full);
  out.blowup.canonicalize();
  return out;
}

}  // namespace dioph
