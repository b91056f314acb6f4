#include "dioph/position.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "dioph/errors.hpp"

namespace dioph {

CatalogKind catalog_kind(const Subscheme& y) {
  if (y.is_linear()) return CatalogKind::Linear;
  if (y.generators().size() == 1) return CatalogKind::Hypersurface;
  throw Unsupported("subscheme '" + y.label() +
                    "' is neither linear nor a hypersurface; support geometry unavailable");
}

namespace {

using linalg::RationalVector;

linalg::Subspace linear_equations(const Subscheme& y) {
  const auto index = MonomialIndex::get(y.nvars(), 1);
  linalg::Subspace rows(y.nvars());
  for (const auto& g : y.generators()) rows.insert(g.coefficients(*index));
  return rows;
}

// Kernel of the row space: vectors v with row . v = 0 for all rows.
std::vector<RationalVector> kernel(const linalg::Subspace& rows) {
  const std::size_t n = rows.ambient_dim();
  std::vector<std::size_t> pivots;
  for (const auto& r : rows.basis()) {
    pivots.push_back(static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; }) - r.begin()));
  }
  std::vector<RationalVector> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    RationalVector v(n);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows.basis()[k][free];
    out.push_back(std::move(v));
  }
  return out;
}

HomogeneousForm derivative(const HomogeneousForm& f, std::size_t i) {
  HomogeneousForm out(f.nvars(), f.degree() - 1);
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    auto e = m.entries();
    --e[i];
    out += HomogeneousForm::monomial(Monomial(e), c * e[i] + c);
  }
  return out;
}

// If f = c * l^e for a linear form l, the coefficient vector of l. All
// derivatives of order e - 1 of such an f are multiples of l.
std::optional<RationalVector> linear_root(const HomogeneousForm& f) {
  if (f.degree() == 0) return std::nullopt;
  std::vector<HomogeneousForm> layer{f};
  for (std::uint32_t k = 1; k < f.degree(); ++k) {
    const auto index = MonomialIndex::get(f.nvars(), f.degree() - k);
    linalg::Subspace span(index->size());
    std::vector<HomogeneousForm> next;
    for (const auto& g : layer) {
      for (std::size_t i = 0; i < f.nvars(); ++i) {
        auto d = derivative(g, i);
        if (d.is_zero()) continue;
        if (span.insert(d.coefficients(*index))) next.push_back(std::move(d));
      }
    }
    if (span.dim() != 1) return std::nullopt;
    layer = std::move(next);
  }
  const auto index = MonomialIndex::get(f.nvars(), 1);
  const HomogeneousForm l = layer.front();
  const HomogeneousForm p = power(l, f.degree());
  // f is a scalar multiple of l^e?
  const Rational ratio = f.terms().begin()->second / p.terms().begin()->second;
  if (!(p * ratio == f)) return std::nullopt;
  return l.coefficients(*index);
}

// Univariate polynomials over Q, coefficients low to high.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Binary forms g(s0, s1): is there a common zero in P^1?
bool binary_forms_share_zero(const std::vector<HomogeneousForm>& forms) {
  // Zero at [0:1] iff s0 divides every form, i.e. no pure s1^e term.
  const bool all_vanish_at_infinity = std::all_of(forms.begin(), forms.end(), [](const auto& g) {
    std::vector<std::uint32_t> e{0, g.degree()};
    return g.terms().find(Monomial(e)) == g.terms().end();
  });
  if (all_vanish_at_infinity) return true;
  Poly acc;
  bool first = true;
  for (const auto& g : forms) {
    Poly p(g.degree() + 1);
    for (const auto& [m, c] : g.terms()) p[m[1]] += c;  // s0 = 1
    trim(p);
    acc = first ? p : poly_gcd(acc, p);
    first = false;
  }
  trim(acc);
  return acc.size() >= 2;
}

}  // namespace

std::size_t catalog_codim(const Subscheme& y) {
  if (catalog_kind(y) == CatalogKind::Hypersurface) return 1;
  return linear_equations(y).dim();
}

std::optional<int> support_intersection_dim(std::span<const Subscheme> ys,
                                            std::span<const std::size_t> members) {
  if (members.empty()) throw InvalidArgument("empty member set");
  const std::size_t nvars = ys[members.front()].nvars();
  linalg::Subspace eqs(nvars);
  std::vector<const HomogeneousForm*> hypersurfaces;
  for (std::size_t i : members) {
    const Subscheme& y = ys[i];
    if (y.nvars() != nvars) throw DimensionMismatch("subschemes in different ambient spaces");
    if (catalog_kind(y) == CatalogKind::Linear) {
      eqs = eqs.sum(linear_equations(y));
    } else if (auto root = linear_root(y.generators().front())) {
      eqs.insert(std::move(*root));
    } else {
      hypersurfaces.push_back(&y.generators().front());
    }
  }
  const auto span = kernel(eqs);  // affine cone of the linear part
  if (span.empty()) return std::nullopt;
  const int k = static_cast<int>(span.size()) - 1;

  // Restrict hypersurfaces to the linear part: x = sum_j s_j * span[j].
  std::vector<HomogeneousForm> images;
  for (std::size_t i = 0; i < nvars; ++i) {
    HomogeneousForm f(span.size(), 1);
    for (std::size_t j = 0; j < span.size(); ++j) {
      f += HomogeneousForm::variable(j, span.size()) * span[j][i];
    }
    images.push_back(f);
  }
  std::vector<HomogeneousForm> restricted;
  for (const auto* h : hypersurfaces) {
    HomogeneousForm r = h->substitute(images);
    if (!r.is_zero()) restricted.push_back(std::move(r));
  }
  if (restricted.empty()) return k;
  if (k == 0) return std::nullopt;  // nonzero multiple of s0^e
  if (restricted.size() == 1) return k - 1;
  if (k == 1) return binary_forms_share_zero(restricted) ? std::optional<int>(0) : std::nullopt;
  throw Unsupported("intersection of several hypersurfaces in dimension >= 2");
}

std::optional<int> support_intersection_dim(std::span<const Subscheme> ys) {
  std::vector<std::size_t> all(ys.size());
  std::iota(all.begin(), all.end(), 0);
  return support_intersection_dim(ys, all);
}

GeneralPositionReport check_general_position(std::span<const Subscheme> ys) {
  if (ys.empty()) return {};
  if (ys.size() > 20) throw Unsupported("general position check limited to 20 subschemes");
  const int n = static_cast<int>(ys.front().n());
  std::vector<std::size_t> codims;
  for (const auto& y : ys) codims.push_back(catalog_codim(y));

  std::vector<std::vector<std::size_t>> subsets;
  for (std::uint32_t mask = 1; mask < (1u << ys.size()); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& s : subsets) {
    const auto dim = support_intersection_dim(ys, s);
    if (!dim) continue;  // dim of the empty set is -infinity
    const std::size_t codim = static_cast<std::size_t>(n - *dim);
    std::size_t required = 0;
    for (std::size_t i : s) required += codims[i];
    if (codim < required) return {false, s, codim, required};
  }
  return {};
}

bool is_regular_sequence(std::span<const Subscheme> ys) {
  if (ys.empty()) return true;
  std::size_t count = 0;
  std::vector<Subscheme> pieces;
  for (const auto& y : ys) {
    count += y.generators().size();
    for (const auto& g : y.generators()) pieces.emplace_back(y.label(), std::vector{g});
  }
  const std::size_t nvars = ys.front().nvars();
  if (count > nvars) return false;
  const auto dim = support_intersection_dim(pieces);
  // Height of the ideal equals the codimension of its affine cone.
  const std::size_t height = dim ? nvars - 1 - static_cast<std::size_t>(*dim) : nvars;
  return height == count;
}

}  // namespace dioph
