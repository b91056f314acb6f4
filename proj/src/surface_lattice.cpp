#include "dioph/surface_lattice.hpp"

#include <cctype>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

void check_k(std::size_t k) {
  if (k > kMaxBlownUpPoints) throw Unsupported("blow-ups of more than three points are not supported");
}

void check_same(const PicardClass& c, const PicardClass& d) {
  if (c.k() != d.k()) throw DimensionMismatch("classes on different blow-ups");
}

}  // namespace

PicardClass::PicardClass(std::int64_t a, std::vector<std::int64_t> b) : a_(a), b_(std::move(b)) {
  check_k(b_.size());
}

PicardClass PicardClass::hyperplane(std::size_t k) { return {1, std::vector<std::int64_t>(k, 0)}; }

PicardClass PicardClass::exceptional(std::size_t i, std::size_t k) {
  if (i >= k) throw InvalidArgument("exceptional curve index out of range");
  std::vector<std::int64_t> b(k, 0);
  b[i] = 1;
  return {0, b};
}

PicardClass PicardClass::parse(std::string_view text, std::size_t k) {
  check_k(k);
  std::int64_t a = 0;
  std::vector<std::int64_t> b(k, 0);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad class literal '" + std::string(text) + "': " + why);
  };
  bool any = false;
  skip();
  while (pos < text.size()) {
    std::int64_t sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (any) {
      throw fail("expected '+' or '-'");
    }
    std::int64_t coef = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coef = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coef = coef * 10 + (text[pos++] - '0');
        if (coef > (std::int64_t{1} << 40)) throw fail("coefficient too large");
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
    }
    if (pos >= text.size()) throw fail("missing generator");
    const char g = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos++])));
    if (g == 'H') {
      a += sign * coef;
    } else if (g == 'E') {
      std::size_t idx = 0;
      bool digits = false;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        idx = idx * 10 + static_cast<std::size_t>(text[pos++] - '0');
        digits = true;
      }
      if (!digits || idx == 0 || idx > k) throw fail("exceptional index must be in 1.." + std::to_string(k));
      b[idx - 1] += sign * coef;
    } else {
      throw fail("unknown generator");
    }
    any = true;
    skip();
  }
  if (!any) throw fail("empty");
  return {a, b};
}

PicardClass& PicardClass::operator+=(const PicardClass& o) {
  check_same(*this, o);
  a_ += o.a_;
  for (std::size_t i = 0; i < b_.size(); ++i) b_[i] += o.b_[i];
  return *this;
}

PicardClass& PicardClass::operator-=(const PicardClass& o) {
  check_same(*this, o);
  a_ -= o.a_;
  for (std::size_t i = 0; i < b_.size(); ++i) b_[i] -= o.b_[i];
  return *this;
}

PicardClass operator*(std::int64_t c, PicardClass x) {
  x.a_ *= c;
  for (auto& v : x.b_) v *= c;
  return x;
}

std::string PicardClass::to_string() const {
  std::string out;
  auto term = [&](std::int64_t c, const std::string& g) {
    if (c == 0) return;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::int64_t m = c < 0 ? -c : c;
    if (m != 1) out += std::to_string(m);
    out += g;
  };
  term(a_, "H");
  for (std::size_t i = 0; i < b_.size(); ++i) term(b_[i], "E" + std::to_string(i + 1));
  return out.empty() ? "0" : out;
}

std::int64_t intersect(const PicardClass& c, const PicardClass& d) {
  check_same(c, d);
  std::int64_t v = c.a() * d.a();
  for (std::size_t i = 0; i < c.k(); ++i) v -= c.b()[i] * d.b()[i];
  return v;
}

// ---------------------------------------------------------------------------

SurfaceModel::SurfaceModel(std::size_t k) : k_(k) {
  check_k(k);
  const auto h = PicardClass::hyperplane(k);
  auto e = [&](std::size_t i) { return PicardClass::exceptional(i, k); };
  for (std::size_t i = 0; i < k; ++i) neg_.push_back(e(i));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) neg_.push_back(h - e(i) - e(j));
  }
  nef_.push_back(h);
  switch (k) {
    case 0:
      mori_ = {h};
      break;
    case 1:
      mori_ = {e(0), h - e(0)};
      nef_.push_back(h - e(0));
      break;
    case 2:
      mori_ = neg_;
      nef_.push_back(h - e(0));
      nef_.push_back(h - e(1));
      break;
    default:
      mori_ = neg_;
      for (std::size_t i = 0; i < 3; ++i) nef_.push_back(h - e(i));
      nef_.push_back(2 * h - e(0) - e(1) - e(2));
      break;
  }
}

PicardClass SurfaceModel::canonical() const {
  return PicardClass(-3, std::vector<std::int64_t>(k_, 1));
}

NefReport is_nef(const SurfaceModel& s, const PicardClass& d) {
  for (const auto& c : s.mori_generators()) {
    if (intersect(d, c) < 0) return {false, c};
  }
  return {};
}

NefReport is_nef_combination(const SurfaceModel& s, const PicardClass& a, const Rational& gamma,
                             const PicardClass& d) {
  for (const auto& c : s.mori_generators()) {
    if (intersect(a, c) - gamma * intersect(d, c) < 0) return {false, c};
  }
  return {};
}

SeshadriReport seshadri(const SurfaceModel& s, const PicardClass& a, const PicardClass& d) {
  if (!is_nef(s, a).nef) throw InvalidArgument("Seshadri constant needs a nef class, got " + a.to_string());
  SeshadriReport out;
  for (const auto& c : s.mori_generators()) {
    const std::int64_t dc = intersect(d, c);
    if (dc <= 0) continue;
    Rational ratio(intersect(a, c), dc);
    ratio.canonicalize();
    if (!out.value || ratio < *out.value) {
      out.value = ratio;
      out.tight_curve = c;
    }
  }
  return out;
}

std::int64_t zariski_h0(const SurfaceModel& s, const PicardClass& d) {
  PicardClass p = d;
  const std::int64_t start = -intersect(p, s.canonical());
  // Each subtraction lowers -K.D by one, and -K is nef, so this terminates.
  for (std::int64_t guard = 0; guard <= std::max<std::int64_t>(start, 0) + 1; ++guard) {
    for (const auto& n : s.nef_generators()) {
      if (intersect(p, n) < 0) return 0;
    }
    bool reduced = false;
    for (const auto& c : s.mori_generators()) {
      if (intersect(c, c) < 0 && intersect(p, c) < 0) {
        p -= c;
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      const std::int64_t twice_chi = intersect(p, p - s.canonical());
      return twice_chi / 2 + 1;
    }
  }
  throw Unsupported("base-locus reduction did not converge for " + d.to_string());
}

Rational beta_closed_form(const SurfaceModel& s, const PicardClass& a, const PicardClass& d) {
  if (intersect(d, d) != 0) throw Unsupported("closed form needs D^2 = 0");
  const std::int64_t ad = intersect(a, d);
  if (ad <= 0) throw InvalidArgument("closed form needs A.D > 0");
  if (!is_nef(s, a).nef) throw InvalidArgument("closed form needs a nef class A");
  const Rational a2(intersect(a, a));
  if (a2 <= 0) throw InvalidArgument("closed form needs A big (A^2 > 0)");
  const Rational xi = a2 / (2 * Rational(ad));
  Rational beta = (Rational(2, 3) * xi * a2 - Rational(1, 3) * ad * xi * xi) / a2;
  beta.canonicalize();
  return beta;
}

Rational beta_surface_truncated(const SurfaceModel& s, const PicardClass& a, const PicardClass& d,
                                std::uint32_t level) {
  if (level == 0) throw InvalidArgument("truncation level must be positive");
  if (!is_nef(s, a).nef || intersect(a, a) <= 0) throw InvalidArgument("A must be nef and big");
  const auto na = static_cast<std::int64_t>(level) * a;
  Integer total = 0;
  for (std::int64_t m = 1;; ++m) {
    const std::int64_t h = zariski_h0(s, na - m * d);
    if (h == 0) break;
    total += static_cast<long>(h);
  }
  Rational out(total, Integer(static_cast<long>(level)) * static_cast<long>(zariski_h0(s, na)));
  out.canonicalize();
  return out;
}

BetaSeshadriComparison compare_beta_seshadri(const SurfaceModel& s, const PicardClass& a,
                                             const PicardClass& d, unsigned r, unsigned n,
                                             std::uint32_t level) {
  BetaSeshadriComparison out;
  if (intersect(d, d) == 0) {
    out.beta = beta_closed_form(s, a, d);
    out.beta_exact = true;
  } else {
    out.beta = beta_surface_truncated(s, a, d, level);
  }
  const auto eps = seshadri(s, a, d);
  out.seshadri = eps.value;
  if (eps.value) {
    out.bound = Rational(r, n + 1) * *eps.value;
    out.bound->canonicalize();
  }
  return out;
}

PicardClass three_point_polarization(std::int64_t l) {
  if (l < 1) throw InvalidArgument("l must be positive");
  return PicardClass(3 * l + 1, {-l, -l, -l});
}

PicardClass pencil_class(std::size_t i) {
  return PicardClass::hyperplane(3) - PicardClass::exceptional(i, 3);
}

}  // namespace dioph
