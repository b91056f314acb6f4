#include "dioph/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dioph/errors.hpp"

namespace dioph::linalg {

IntegerVector primitive_integer_row(const RationalVector& row) {
  Integer lcm = 1;
  for (const auto& x : row) {
    if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  IntegerVector out(row.size());
  Integer g = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    out[i] = row[i].get_num() * (lcm / row[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : out) {
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
  return out;
}

const std::vector<std::uint32_t>& rank_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = kernels::kMaxModulus - 1; out.size() < 256; c -= 2) {
      bool prime = true;
      for (std::uint32_t d = 3; d * d <= c; d += 2) {
        if (c % d == 0) {
          prime = false;
          break;
        }
      }
      if (prime) out.push_back(c);
    }
    return out;
  }();
  return primes;
}

std::size_t rank_mod_p(std::span<const IntegerVector> rows, std::size_t cols, std::uint32_t p,
                       const kernels::KernelTable& kernels) {
  const kernels::Modulus m = kernels::make_modulus(p);
  std::vector<std::vector<double>> pivot_rows;
  std::vector<std::size_t> pivot_cols;
  std::vector<double> work(cols);
  const std::size_t max_rank = std::min(rows.size(), cols);
  for (const auto& row : rows) {
    if (pivot_rows.size() == max_rank) break;
    for (std::size_t j = 0; j < cols; ++j) {
      work[j] = row[j] == 0 ? 0.0 : static_cast<double>(mpz_fdiv_ui(row[j].get_mpz_t(), p));
    }
    for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
      const std::size_t c = pivot_cols[k];
      if (work[c] == 0.0) continue;
      const std::span<double> dst(work.data() + c, cols - c);
      const std::span<const double> src(pivot_rows[k].data() + c, cols - c);
      kernels.axpy(dst, src, work[c], m);
    }
    const auto lead = std::find_if(work.begin(), work.end(), [](double x) { return x != 0.0; });
    if (lead == work.end()) continue;
    const std::size_t c = static_cast<std::size_t>(lead - work.begin());
    kernels.scale(std::span<double>(work.data() + c, cols - c), kernels::inv_mod(*lead, m), m);
    pivot_rows.push_back(work);
    pivot_cols.push_back(c);
  }
  return pivot_rows.size();
}

namespace {

double log2_norm(const IntegerVector& row) {
  Integer sq = 0;
  for (const auto& x : row) sq += x * x;
  if (sq == 0) return 0.0;
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, sq.get_mpz_t());
  return 0.5 * (std::log2(mant) + static_cast<double>(exp));
}

}  // namespace

std::size_t rank(std::span<const RationalVector> rows, std::size_t cols) {
  return rank(rows, cols, kernels::active_kernels());
}

std::size_t rank(std::span<const RationalVector> rows, std::size_t cols,
                 const kernels::KernelTable& kernels) {
  std::vector<IntegerVector> ints;
  ints.reserve(rows.size());
  bool all_unit = true;
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("row length differs from column count");
    IntegerVector v = primitive_integer_row(r);
    std::size_t nonzero = 0;
    for (const auto& x : v) nonzero += (x != 0);
    if (nonzero == 0) continue;
    // Sign-normalise so that duplicates up to sign collapse.
    const auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (*lead < 0) {
      for (auto& x : v) x = -x;
    }
    all_unit = all_unit && nonzero == 1;
    ints.push_back(std::move(v));
  }
  std::sort(ints.begin(), ints.end());
  ints.erase(std::unique(ints.begin(), ints.end()), ints.end());
  if (all_unit) return ints.size();  // distinct unit rows are independent
  const std::size_t max_rank = std::min(ints.size(), cols);
  if (max_rank == 0) return 0;

  std::vector<double> norms;
  norms.reserve(ints.size());
  for (const auto& v : ints) norms.push_back(log2_norm(v));
  std::sort(norms.begin(), norms.end(), std::greater<>());
  const double bound_bits =
      std::accumulate(norms.begin(), norms.begin() + static_cast<long>(max_rank), 0.0) + 2.0;

  const auto& primes = rank_primes();
  std::size_t best = 0;
  double covered_bits = 0.0;
  for (std::uint32_t p : primes) {
    best = std::max(best, rank_mod_p(ints, cols, p, kernels));
    if (best == max_rank) return best;
    covered_bits += std::log2(static_cast<double>(p)) - 1e-9;
    if (covered_bits > bound_bits) return best;
  }
  // Coefficients too large for the prime table: fall back to exact elimination.
  return rank_fraction_free(rows, cols);
}

std::size_t rank_fraction_free(std::span<const RationalVector> rows, std::size_t cols) {
  std::vector<IntegerVector> a;
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("row length differs from column count");
    a.push_back(primitive_integer_row(r));
  }
  const std::size_t m = a.size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[rank][col] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

Subspace Subspace::span(std::span<const RationalVector> vectors, std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    RationalVector e(ambient_dim);
    e[i] = 1;
    s.rows_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

void Subspace::reduce(RationalVector& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t c = pivots_[k];
    if (v[c] == 0) continue;
    const Rational f = v[c];
    const auto& row = rows_[k];
    for (std::size_t j = c; j < ambient_; ++j) {
      if (row[j] != 0) v[j] -= f * row[j];
    }
  }
}

std::optional<RationalVector> solve_combination(std::span<const RationalVector> rows,
                                                const RationalVector& target) {
  const std::size_t n = target.size(), m = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) throw DimensionMismatch("row length differs from target length");
  }
  // Augmented system [A | target] with the rows as columns of A.
  std::vector<RationalVector> a(n, RationalVector(m + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = rows[j][i];
    a[i][m] = target[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t k = r;
    while (k < n && a[k][c] == 0) ++k;
    if (k == n) continue;
    std::swap(a[k], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j <= m; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j <= m; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i) {
    if (a[i][m] != 0) return std::nullopt;
  }
  RationalVector c(m, Rational(0));
  for (std::size_t i = 0; i < r; ++i) c[pivot_col[i]] = a[i][m];
  return c;
}

bool Subspace::insert(RationalVector v) {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  reduce(v);
  const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (lead == v.end()) return false;
  const std::size_t c = static_cast<std::size_t>(lead - v.begin());
  const Rational inv = 1 / *lead;
  for (std::size_t j = c; j < ambient_; ++j) {
    if (v[j] != 0) v[j] *= inv;
  }
  // Clear column c in the existing rows to keep the echelon form reduced.
  for (auto& row : rows_) {
    if (row[c] == 0) continue;
    const Rational f = row[c];
    for (std::size_t j = c; j < ambient_; ++j) {
      if (v[j] != 0) row[j] -= f * v[j];
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, c);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  RationalVector w = v;
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const RationalVector& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different spaces");
  Subspace s = *this;
  for (const auto& v : other.rows_) s.insert(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different spaces");
  const std::size_t n = ambient_;
  // Rows [u | u] and [v | 0]; rows of the echelon form with zero left half
  // span the intersection in their right half.
  Subspace big(2 * n);
  for (const auto& u : rows_) {
    RationalVector w(2 * n);
    std::copy(u.begin(), u.end(), w.begin());
    std::copy(u.begin(), u.end(), w.begin() + static_cast<long>(n));
    big.insert(std::move(w));
  }
  for (const auto& v : other.rows_) {
    RationalVector w(2 * n);
    std::copy(v.begin(), v.end(), w.begin());
    big.insert(std::move(w));
  }
  Subspace out(n);
  for (std::size_t k = 0; k < big.rows_.size(); ++k) {
    if (big.pivots_[k] < n) continue;
    out.insert(RationalVector(big.rows_[k].begin() + static_cast<long>(n), big.rows_[k].end()));
  }
  return out;
}

std::vector<RationalVector> Subspace::complement_of(const Subspace& inner) const {
  if (inner.ambient_ != ambient_) throw DimensionMismatch("subspaces of different spaces");
  Subspace acc = inner;
  std::vector<RationalVector> out;
  for (const auto& v : rows_) {
    if (acc.insert(v)) out.push_back(v);
  }
  if (acc.dim() != dim()) throw InvalidArgument("inner space is not contained in this space");
  return out;
}

}  // namespace dioph::linalg
