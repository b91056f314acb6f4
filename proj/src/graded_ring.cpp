#include "dioph/graded_ring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dioph/errors.hpp"

namespace dioph {

Subscheme::Subscheme(std::string label, std::vector<HomogeneousForm> generators,
                     std::optional<unsigned> codim_hint)
    : label_(std::move(label)), generators_(std::move(generators)), codim_hint_(codim_hint) {
  if (generators_.empty()) throw InvalidArgument("subscheme '" + label_ + "' has no generators");
  const std::size_t nvars = generators_.front().nvars();
  if (nvars < 2 || nvars > kMaxProjectiveDim + 1) {
    throw Unsupported("ambient P^n must have 1 <= n <= 3");
  }
  for (const auto& g : generators_) {
    if (g.nvars() != nvars) throw DimensionMismatch("generators in different ambient spaces");
    if (g.is_zero()) throw InvalidArgument("zero generator in '" + label_ + "'");
    if (g.degree() == 0) throw InvalidArgument("unit generator makes '" + label_ + "' empty");
  }
  if (codim_hint_ && *codim_hint_ == 0) throw InvalidArgument("codimension hint must be positive");
}

Subscheme Subscheme::parse(std::string label, std::span<const std::string> generators,
                           std::size_t n) {
  std::vector<HomogeneousForm> forms;
  for (const auto& g : generators) forms.push_back(HomogeneousForm::parse(g, n + 1));
  return Subscheme(std::move(label), std::move(forms));
}

Subscheme Subscheme::parse_list(std::string label, const std::string& generators,
                                std::size_t n) {
  std::vector<std::string> parts;
  std::stringstream ss(generators);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parse(std::move(label), parts, n);
}

std::uint32_t Subscheme::min_degree() const {
  std::uint32_t d = generators_.front().degree();
  for (const auto& g : generators_) d = std::min(d, g.degree());
  return d;
}

std::uint32_t Subscheme::max_degree() const {
  std::uint32_t d = 0;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

bool Subscheme::is_monomial() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const HomogeneousForm& g) { return g.is_monomial(); });
}

bool Subscheme::is_linear() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const HomogeneousForm& g) { return g.degree() == 1; });
}

namespace {

std::vector<HomogeneousForm> dedupe(std::vector<HomogeneousForm> forms) {
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

}  // namespace

Subscheme intersection_scheme(const Subscheme& x, const Subscheme& y) {
  auto gens = x.generators();
  gens.insert(gens.end(), y.generators().begin(), y.generators().end());
  return Subscheme(x.label() + "&" + y.label(), dedupe(std::move(gens)));
}

Subscheme sum_scheme(const Subscheme& x, const Subscheme& y) {
  std::vector<HomogeneousForm> gens;
  for (const auto& a : x.generators()) {
    for (const auto& b : y.generators()) gens.push_back(a * b);
  }
  return Subscheme(x.label() + "+" + y.label(), dedupe(std::move(gens)));
}

Subscheme power_scheme(const Subscheme& y, std::uint32_t m) {
  if (m == 0) throw InvalidArgument("power of an ideal must be positive");
  return Subscheme(y.label() + "^" + std::to_string(m),
                   power_products(y, m, m * y.max_degree()));
}

Subscheme linear_change(const Subscheme& y, const std::vector<std::vector<Rational>>& matrix) {
  const std::size_t nv = y.nvars();
  if (matrix.size() != nv) throw DimensionMismatch("substitution matrix has wrong size");
  std::vector<HomogeneousForm> images;
  for (const auto& row : matrix) {
    if (row.size() != nv) throw DimensionMismatch("substitution matrix has wrong size");
    HomogeneousForm f(nv, 1);
    for (std::size_t j = 0; j < nv; ++j) f += HomogeneousForm::variable(j, nv) * row[j];
    images.push_back(f);
  }
  std::vector<HomogeneousForm> gens;
  for (const auto& g : y.generators()) gens.push_back(g.substitute(images));
  return Subscheme(y.label(), std::move(gens), y.codim_hint());
}

// ---------------------------------------------------------------------------

GradedPiece::GradedPiece(std::size_t n, std::uint32_t degree)
    : n_(n), degree_(degree), index_(MonomialIndex::get(n + 1, degree)), space_(index_->size()) {}

GradedPiece::GradedPiece(std::size_t n, std::uint32_t degree, linalg::Subspace space)
    : n_(n), degree_(degree), index_(MonomialIndex::get(n + 1, degree)), space_(std::move(space)) {}

GradedPiece GradedPiece::span(std::span<const HomogeneousForm> forms, std::size_t n,
                              std::uint32_t degree) {
  GradedPiece piece(n, degree);
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    if (f.nvars() != n + 1 || f.degree() != degree) {
      throw InvalidArgument("form does not live in the requested graded piece");
    }
    piece.space_.insert(f.coefficients(*piece.index_));
  }
  return piece;
}

GradedPiece GradedPiece::whole(std::size_t n, std::uint32_t degree) {
  GradedPiece piece(n, degree);
  piece.space_ = linalg::Subspace::whole(piece.index_->size());
  return piece;
}

std::vector<HomogeneousForm> GradedPiece::basis() const {
  std::vector<HomogeneousForm> out;
  for (const auto& row : space_.basis()) {
    out.push_back(HomogeneousForm::from_coefficients(row, *index_));
  }
  return out;
}

bool GradedPiece::contains(const HomogeneousForm& f) const {
  if (f.is_zero()) return true;
  if (f.nvars() != n_ + 1 || f.degree() != degree_) return false;
  return space_.contains(f.coefficients(*index_));
}

bool GradedPiece::contains(const GradedPiece& other) const {
  if (other.n_ != n_ || other.degree_ != degree_) throw DimensionMismatch("different pieces");
  return space_.contains(other.space_);
}

GradedPiece GradedPiece::intersect(const GradedPiece& other) const {
  if (other.n_ != n_ || other.degree_ != degree_) throw DimensionMismatch("different pieces");
  return GradedPiece(n_, degree_, space_.intersect(other.space_));
}

GradedPiece GradedPiece::sum(const GradedPiece& other) const {
  if (other.n_ != n_ || other.degree_ != degree_) throw DimensionMismatch("different pieces");
  return GradedPiece(n_, degree_, space_.sum(other.space_));
}

// ---------------------------------------------------------------------------

std::uint64_t dim_full(std::uint32_t degree, std::size_t n) {
  return binomial(degree + n, n).get_ui();
}

std::size_t span_rank(std::span<const HomogeneousForm> forms) {
  std::vector<const HomogeneousForm*> nonzero;
  std::size_t nvars = 0;
  std::optional<std::uint32_t> degree;
  for (const auto& f : forms) {
    if (nvars == 0) nvars = f.nvars();
    if (f.nvars() != nvars) throw DimensionMismatch("forms in different variable counts");
    if (f.is_zero()) continue;
    if (degree && *degree != f.degree()) throw InvalidArgument("span_rank needs a common degree");
    degree = f.degree();
    nonzero.push_back(&f);
  }
  if (nonzero.empty()) return 0;
  const auto index = MonomialIndex::get(nvars, *degree);
  std::vector<linalg::RationalVector> rows;
  rows.reserve(nonzero.size());
  for (const auto* f : nonzero) rows.push_back(f->coefficients(*index));
  return linalg::rank(rows, index->size());
}

namespace {

void collect_products(const std::vector<HomogeneousForm>& gens, std::size_t start,
                      std::uint32_t remaining, std::uint32_t max_degree,
                      const HomogeneousForm& acc, std::vector<HomogeneousForm>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i < gens.size(); ++i) {
    // Generators are sorted by degree, so later ones only overshoot further.
    if (acc.degree() + remaining * gens[i].degree() > max_degree) break;
    collect_products(gens, i, remaining - 1, max_degree, acc * gens[i], out);
  }
}

}  // namespace

std::vector<HomogeneousForm> power_products(const Subscheme& y, std::uint32_t m,
                                            std::uint32_t max_degree) {
  auto gens = y.generators();
  std::stable_sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
    return a.degree() < b.degree();
  });
  std::vector<HomogeneousForm> out;
  collect_products(gens, 0, m, max_degree, HomogeneousForm::constant(1, y.nvars()), out);
  return dedupe(std::move(out));
}

std::vector<HomogeneousForm> degree_span(std::span<const HomogeneousForm> generators,
                                         std::uint32_t degree) {
  std::vector<HomogeneousForm> out;
  for (const auto& g : generators) {
    if (g.degree() > degree) continue;
    const auto index = MonomialIndex::get(g.nvars(), degree - g.degree());
    if (g.is_monomial()) {
      // Monomial generators: shift exponents directly.
      const auto& [gm, gc] = *g.terms().begin();
      std::vector<std::uint32_t> e(g.nvars());
      for (const auto& m : index->monomials()) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = gm[i] + m[i];
        out.push_back(HomogeneousForm::monomial(Monomial(e), 1));
      }
      continue;
    }
    for (const auto& m : index->monomials()) out.push_back(g * HomogeneousForm::monomial(m));
  }
  return out;
}

std::size_t graded_dim_ideal_power(const Subscheme& y, std::uint32_t m, std::uint32_t degree) {
  if (m == 0) return dim_full(degree, y.n());
  const auto products = power_products(y, m, degree);
  const auto spanning = degree_span(products, degree);
  return span_rank(spanning);
}

GradedPiece graded_piece_ideal_power(const Subscheme& y, std::uint32_t m, std::uint32_t degree) {
  if (m == 0) return GradedPiece::whole(y.n(), degree);
  const auto products = power_products(y, m, degree);
  return GradedPiece::span(degree_span(products, degree), y.n(), degree);
}

std::vector<HomogeneousForm> filtration_ideal_generators(std::span<const Subscheme> ys,
                                                         const WeightVector& t,
                                                         const Rational& x,
                                                         std::uint32_t degree) {
  if (ys.empty()) throw InvalidArgument("need at least one subscheme");
  if (ys.size() != t.size()) throw DimensionMismatch("one weight per subscheme required");
  const std::size_t nvars = ys.front().nvars();
  for (const auto& y : ys) {
    if (y.nvars() != nvars) throw DimensionMismatch("subschemes in different ambient spaces");
  }
  const SaturatedSet minimal = threshold_set(t, x);
  std::map<std::pair<std::size_t, std::uint32_t>, std::vector<HomogeneousForm>> cache;
  std::vector<HomogeneousForm> out;
  for (const auto& b : minimal.generators()) {
    std::uint64_t least = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      least += static_cast<std::uint64_t>(b[i]) * ys[i].min_degree();
    }
    if (least > degree) continue;
    std::vector<HomogeneousForm> acc{HomogeneousForm::constant(1, nvars)};
    for (std::size_t i = 0; i < ys.size() && !acc.empty(); ++i) {
      if (b[i] == 0) continue;
      auto it = cache.find({i, b[i]});
      if (it == cache.end()) {
        it = cache.emplace(std::pair{i, b[i]}, power_products(ys[i], b[i], degree)).first;
      }
      std::vector<HomogeneousForm> next;
      for (const auto& a : acc) {
        for (const auto& p : it->second) {
          if (a.degree() + p.degree() <= degree) next.push_back(a * p);
        }
      }
      acc = dedupe(std::move(next));
    }
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return dedupe(std::move(out));
}

std::size_t graded_dim_filtration_ideal(std::span<const Subscheme> ys, const WeightVector& t,
                                        const Rational& x, std::uint32_t degree) {
  if (x == 0) return dim_full(degree, ys.front().n());
  const auto gens = filtration_ideal_generators(ys, t, x, degree);
  return span_rank(degree_span(gens, degree));
}

GradedPiece graded_piece_filtration_ideal(std::span<const Subscheme> ys, const WeightVector& t,
                                          const Rational& x, std::uint32_t degree) {
  if (x == 0) return GradedPiece::whole(ys.front().n(), degree);
  const auto gens = filtration_ideal_generators(ys, t, x, degree);
  return GradedPiece::span(degree_span(gens, degree), ys.front().n(), degree);
}

std::vector<HomogeneousForm> monomial_ideal_generators(std::span<const HomogeneousForm> phis,
                                                       const SaturatedSet& set,
                                                       std::uint32_t degree) {
  if (phis.size() != set.dimension()) throw DimensionMismatch("one form per coordinate required");
  std::vector<HomogeneousForm> out;
  for (const auto& b : set.generators()) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < phis.size(); ++i) d += std::uint64_t{b[i]} * phis[i].degree();
    if (d > degree) continue;
    HomogeneousForm acc = HomogeneousForm::constant(1, phis.front().nvars());
    for (std::size_t i = 0; i < phis.size(); ++i) {
      if (b[i] != 0) acc = acc * power(phis[i], b[i]);
    }
    out.push_back(std::move(acc));
  }
  return dedupe(std::move(out));
}

}  // namespace dioph
