#include "dioph/monomial_order.hpp"

#include <algorithm>
#include <sstream>

#include "dioph/errors.hpp"

namespace dioph {

ExponentVector::ExponentVector(std::vector<std::uint32_t> entries) : e_(std::move(entries)) {
  if (e_.empty()) throw InvalidArgument("exponent vector must have length >= 1");
}

ExponentVector::ExponentVector(std::initializer_list<std::uint32_t> entries)
    : ExponentVector(std::vector<std::uint32_t>(entries)) {}

ExponentVector ExponentVector::zero(std::size_t length) {
  return ExponentVector(std::vector<std::uint32_t>(length, 0));
}

std::uint64_t ExponentVector::total() const {
  std::uint64_t s = 0;
  for (auto x : e_) s += x;
  return s;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  if (other.size() != size()) throw DimensionMismatch("exponent vectors of different length");
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::join(const ExponentVector& other) const {
  if (other.size() != size()) throw DimensionMismatch("exponent vectors of different length");
  std::vector<std::uint32_t> out(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) out[i] = std::max(e_[i], other.e_[i]);
  return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::plus_unit(std::size_t i) const {
  auto out = e_;
  ++out.at(i);
  return ExponentVector(std::move(out));
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e_.size(); ++i) os << (i ? "," : "") << e_[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

WeightVector::WeightVector(std::vector<Rational> entries) : t_(std::move(entries)) {
  if (t_.empty()) throw InvalidArgument("weight vector must be nonempty");
  bool positive = false;
  for (const auto& x : t_) {
    if (x < 0) throw InvalidArgument("weights must be nonnegative");
    positive = positive || x > 0;
  }
  if (!positive) throw InvalidArgument("weights must not all vanish");
}

WeightVector WeightVector::parse(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return WeightVector(std::move(out));
}

Rational WeightVector::dot(const ExponentVector& b) const {
  if (b.size() != t_.size()) throw DimensionMismatch("weight and exponent lengths differ");
  Rational s = 0;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (b[i] != 0) s += t_[i] * b[i];
  }
  return s;
}

WeightVector WeightVector::scaled(const Rational& u) const {
  if (u <= 0) throw InvalidArgument("scale factor must be positive");
  auto out = t_;
  for (auto& x : out) x *= u;
  return WeightVector(std::move(out));
}

WeightVector WeightVector::blend(const WeightVector& other, const Rational& lambda) const {
  if (other.size() != size()) throw DimensionMismatch("weight vectors of different length");
  if (lambda < 0 || lambda > 1) throw InvalidArgument("blend parameter outside [0,1]");
  std::vector<Rational> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = lambda * t_[i] + (1 - lambda) * other.t_[i];
  return WeightVector(std::move(out));
}

std::string WeightVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < t_.size(); ++i) s += (i ? "," : "") + dioph::to_string(t_[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------

std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < family.size() && !dominated; ++j) {
      dominated = j != i && family[j].divides(family[i]);
    }
    if (!dominated) out.push_back(family[i]);
  }
  return out;
}

SaturatedSet::SaturatedSet(std::size_t dimension, std::vector<ExponentVector> generators)
    : dim_(dimension) {
  if (dimension == 0) throw InvalidArgument("saturated set needs dimension >= 1");
  for (const auto& g : generators) {
    if (g.size() != dim_) throw DimensionMismatch("generator length differs from dimension");
  }
  gens_ = minimal_elements(std::move(generators));
}

SaturatedSet SaturatedSet::whole(std::size_t dimension) {
  return SaturatedSet(dimension, {ExponentVector::zero(dimension)});
}

bool SaturatedSet::contains(const ExponentVector& b) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const ExponentVector& g) { return g.divides(b); });
}

namespace {

// Enumerates minimal elements over the positive-weight coordinates.
void enumerate_threshold(const std::vector<Rational>& w, const Rational& x, std::size_t pos,
                         const Rational& partial, std::vector<std::uint32_t>& cur,
                         std::vector<std::vector<std::uint32_t>>& out) {
  const Rational need = x - partial;
  if (pos + 1 == w.size()) {
    const Integer c = need <= 0 ? Integer(0) : ceil_of(need / w[pos]);
    cur[pos] = static_cast<std::uint32_t>(c.get_ui());
    out.push_back(cur);
    return;
  }
  const Integer hi = need <= 0 ? Integer(0) : ceil_of(need / w[pos]);
  for (unsigned long b = 0; b <= hi.get_ui(); ++b) {
    cur[pos] = static_cast<std::uint32_t>(b);
    enumerate_threshold(w, x, pos + 1, partial + w[pos] * b, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

SaturatedSet threshold_set(const WeightVector& t, const Rational& x) {
  if (x < 0) throw InvalidArgument("threshold must be nonnegative");
  const std::size_t r = t.size();
  if (r == 0) throw InvalidArgument("empty weight vector");
  if (x == 0) return SaturatedSet::whole(r);
  std::vector<std::size_t> positive;
  std::vector<Rational> w;
  for (std::size_t i = 0; i < r; ++i) {
    if (t[i] > 0) {
      positive.push_back(i);
      w.push_back(t[i]);
    }
  }
  if (positive.empty()) throw EmptyThresholdSet("all weights zero with positive threshold");

  std::vector<std::vector<std::uint32_t>> sub;
  std::vector<std::uint32_t> cur(w.size(), 0);
  enumerate_threshold(w, x, 0, Rational(0), cur, sub);

  std::vector<ExponentVector> gens;
  for (const auto& s : sub) {
    // Minimal iff dropping one unit from any positive entry falls below x.
    Rational total = 0;
    for (std::size_t k = 0; k < s.size(); ++k) total += w[k] * s[k];
    if (total < x) continue;
    bool minimal = true;
    for (std::size_t k = 0; k < s.size() && minimal; ++k) {
      minimal = s[k] == 0 || total - w[k] < x;
    }
    if (!minimal) continue;
    std::vector<std::uint32_t> full(r, 0);
    for (std::size_t k = 0; k < s.size(); ++k) full[positive[k]] = s[k];
    gens.emplace_back(std::move(full));
  }
  return SaturatedSet(r, std::move(gens));
}

SaturatedSet intersect_saturated(const SaturatedSet& m, const SaturatedSet& n) {
  if (m.dimension() != n.dimension()) throw DimensionMismatch("saturated sets of different rank");
  std::vector<ExponentVector> joins;
  joins.reserve(m.generators().size() * n.generators().size());
  for (const auto& a : m.generators()) {
    for (const auto& b : n.generators()) joins.push_back(a.join(b));
  }
  return SaturatedSet(m.dimension(), std::move(joins));
}

WeightVector expand_weights(const WeightVector& t, std::span<const std::uint32_t> eps) {
  if (eps.size() != t.size()) throw DimensionMismatch("multiplicity list length differs");
  std::vector<Rational> out;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (eps[j] == 0) throw InvalidArgument("multiplicities must be positive");
    for (std::uint32_t k = 0; k < eps[j]; ++k) out.push_back(t[j]);
  }
  return WeightVector(std::move(out));
}

namespace {

// All compositions of `total` into `parts` nonnegative entries.
void compositions(std::uint32_t total, std::uint32_t parts, std::vector<std::uint32_t>& cur,
                  std::vector<std::vector<std::uint32_t>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::uint32_t a = 0; a <= total; ++a) {
    cur.push_back(a);
    compositions(total - a, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SaturatedSet split_blocks(const SaturatedSet& s, std::span<const std::uint32_t> eps) {
  if (eps.size() != s.dimension()) throw DimensionMismatch("block list length differs");
  std::size_t m = 0;
  for (auto e : eps) {
    if (e == 0) throw InvalidArgument("block sizes must be positive");
    m += e;
  }
  std::vector<ExponentVector> images;
  for (const auto& g : s.generators()) {
    std::vector<std::vector<std::uint32_t>> acc{{}};
    for (std::size_t j = 0; j < eps.size(); ++j) {
      std::vector<std::vector<std::uint32_t>> parts;
      std::vector<std::uint32_t> cur;
      compositions(g[j], eps[j], cur, parts);
      std::vector<std::vector<std::uint32_t>> next;
      for (const auto& prefix : acc) {
        for (const auto& p : parts) {
          auto v = prefix;
          v.insert(v.end(), p.begin(), p.end());
          next.push_back(std::move(v));
        }
      }
      acc = std::move(next);
    }
    for (auto& v : acc) images.emplace_back(std::move(v));
  }
  return SaturatedSet(m, std::move(images));
}

}  // namespace dioph
