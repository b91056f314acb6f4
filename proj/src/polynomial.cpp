#include "dioph/polynomial.hpp"

#include <cctype>
#include <mutex>
#include <optional>
#include <sstream>
#include <tuple>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

void enumerate_monomials(std::size_t nvars, std::uint32_t remaining, std::size_t pos,
                         std::vector<std::uint32_t>& cur, std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (std::uint32_t a = remaining + 1; a-- > 0;) {
    cur[pos] = a;
    enumerate_monomials(nvars, remaining - a, pos + 1, cur, out);
  }
}

}  // namespace

MonomialIndex::MonomialIndex(std::size_t nvars, std::uint32_t degree)
    : nvars_(nvars), degree_(degree) {
  if (nvars == 0) throw InvalidArgument("need at least one variable");
  std::vector<std::uint32_t> cur(nvars, 0);
  enumerate_monomials(nvars, degree, 0, cur, monomials_);
  for (std::size_t i = 0; i < monomials_.size(); ++i) lookup_.emplace(monomials_[i], i);
}

std::shared_ptr<const MonomialIndex> MonomialIndex::get(std::size_t nvars, std::uint32_t degree) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::uint32_t>, std::shared_ptr<const MonomialIndex>>
      cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{nvars, degree}];
  if (!slot) slot = std::make_shared<const MonomialIndex>(nvars, degree);
  return slot;
}

std::size_t MonomialIndex::index_of(const Monomial& m) const {
  const auto it = lookup_.find(m);
  if (it == lookup_.end()) throw InvalidArgument("monomial outside index: " + m.to_string());
  return it->second;
}

// ---------------------------------------------------------------------------

HomogeneousForm::HomogeneousForm(std::size_t nvars, std::uint32_t degree)
    : nvars_(nvars), degree_(degree) {
  if (nvars == 0) throw InvalidArgument("need at least one variable");
}

HomogeneousForm HomogeneousForm::monomial(Monomial exponents, Rational coefficient) {
  HomogeneousForm f(exponents.size(), static_cast<std::uint32_t>(exponents.total()));
  f.add_term(exponents, coefficient);
  return f;
}

HomogeneousForm HomogeneousForm::variable(std::size_t index, std::size_t nvars) {
  if (index >= nvars) throw InvalidArgument("variable index out of range");
  std::vector<std::uint32_t> e(nvars, 0);
  e[index] = 1;
  return monomial(Monomial(std::move(e)));
}

HomogeneousForm HomogeneousForm::constant(const Rational& c, std::size_t nvars) {
  return monomial(Monomial::zero(nvars), c);
}

HomogeneousForm HomogeneousForm::from_coefficients(const linalg::RationalVector& coeffs,
                                                   const MonomialIndex& index) {
  if (coeffs.size() != index.size()) throw DimensionMismatch("coefficient vector length");
  HomogeneousForm f(index.nvars(), index.degree());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) f.terms_.emplace(index[i], coeffs[i]);
  }
  return f;
}

void HomogeneousForm::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void HomogeneousForm::check_compatible(const HomogeneousForm& other) const {
  if (other.nvars_ != nvars_) throw DimensionMismatch("forms in different variable counts");
  if (other.degree_ != degree_ && !other.is_zero() && !is_zero()) {
    throw InvalidArgument("adding forms of different degree");
  }
}

HomogeneousForm& HomogeneousForm::operator+=(const HomogeneousForm& other) {
  check_compatible(other);
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

HomogeneousForm& HomogeneousForm::operator-=(const HomogeneousForm& other) {
  check_compatible(other);
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

HomogeneousForm& HomogeneousForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("forms in different variable counts");
  HomogeneousForm out(a.nvars_, a.degree_ + b.degree_);
  std::vector<std::uint32_t> e(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ma[i] + mb[i];
      out.add_term(Monomial(e), ca * cb);
    }
  }
  return out;
}

bool operator<(const HomogeneousForm& a, const HomogeneousForm& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) { return std::tie(x.first, x.second) < std::tie(y.first, y.second); });
}

HomogeneousForm power(const HomogeneousForm& a, std::uint32_t e) {
  HomogeneousForm out = HomogeneousForm::constant(1, a.nvars());
  for (std::uint32_t i = 0; i < e; ++i) out = out * a;
  return out;
}

linalg::RationalVector HomogeneousForm::coefficients(const MonomialIndex& index) const {
  if (index.nvars() != nvars_) throw DimensionMismatch("index variable count differs");
  linalg::RationalVector v(index.size());
  if (is_zero()) return v;
  if (index.degree() != degree_) throw InvalidArgument("index degree differs from form degree");
  for (const auto& [m, c] : terms_) v[index.index_of(m)] = c;
  return v;
}

Rational HomogeneousForm::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("point has wrong number of coordinates");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t k = 0; k < m[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

Rational HomogeneousForm::evaluate(std::span<const Integer> point) const {
  std::vector<Rational> q(point.begin(), point.end());
  return evaluate(std::span<const Rational>(q));
}

HomogeneousForm HomogeneousForm::substitute(std::span<const HomogeneousForm> images) const {
  if (images.size() != nvars_) throw DimensionMismatch("substitution needs one image per variable");
  const std::size_t target = images.front().nvars();
  const std::uint32_t image_degree = images.front().degree();
  HomogeneousForm out(target, degree_ * image_degree);
  for (const auto& [m, c] : terms_) {
    HomogeneousForm t = HomogeneousForm::constant(c, target);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] != 0) t = t * power(images[i], m[i]);
    }
    out += t;
  }
  return out;
}

Rational HomogeneousForm::coefficient_l1() const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) s += abs(c);
  return s;
}

std::string HomogeneousForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print in index order (x0^D first).
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (a != 1 || m.total() == 0) {
      os << a.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << (wrote ? "*" : "") << 'x' << i;
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser: expr := [sign] term (sign term)* ; term := factor ('*'? factor)* ;
// factor := integer ['/' integer] | 'x' index ['^' exponent].

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, std::size_t nvars) : s_(text), nvars_(nvars) {}

  HomogeneousForm parse() {
    std::map<Monomial, Rational> acc;
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [mono, coeff] = term();
      auto& slot = acc.try_emplace(mono, 0).first->second;
      slot += sign * coeff;
      first = false;
      skip();
    }
    if (first) fail("empty polynomial");
    std::optional<std::uint64_t> degree;
    HomogeneousForm out;
    std::vector<std::pair<Monomial, Rational>> kept;
    for (auto& [m, c] : acc) {
      if (c == 0) continue;
      if (degree && *degree != m.total()) fail("polynomial is not homogeneous");
      degree = m.total();
      kept.emplace_back(m, c);
    }
    HomogeneousForm f(nvars_, static_cast<std::uint32_t>(degree.value_or(0)));
    for (auto& [m, c] : kept) f += HomogeneousForm::monomial(m, c);
    return f;
  }

 private:
  std::pair<Monomial, Rational> term() {
    std::vector<std::uint32_t> e(nvars_, 0);
    Rational coeff = 1;
    bool any = false;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= number();
      } else if (c == 'x' || c == 'X') {
        ++pos_;
        const auto idx = digits("variable index");
        if (idx >= nvars_) {
          fail("variable x" + std::to_string(idx) + " outside x0..x" + std::to_string(nvars_ - 1));
        }
        std::uint64_t exp = 1;
        skip();
        if (pos_ < s_.size() && peek() == '^') {
          ++pos_;
          skip();
          exp = digits("exponent");
        }
        e[idx] += static_cast<std::uint32_t>(exp);
      } else {
        break;
      }
      any = true;
      skip();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      if (pos_ < s_.size() && (peek() == 'x' || peek() == 'X' ||
                               std::isdigit(static_cast<unsigned char>(peek())))) {
        continue;  // implicit product such as "2x0"
      }
      break;
    }
    if (!any) fail("expected a term");
    return {Monomial(std::move(e)), coeff};
  }

  Rational number() {
    const Integer n = integer();
    skip();
    if (pos_ < s_.size() && peek() == '/') {
      ++pos_;
      skip();
      const Integer d = integer();
      if (d == 0) fail("zero denominator");
      Rational r(n, d);
      r.canonicalize();
      return r;
    }
    return Rational(n);
  }

  Integer integer() {
    const std::size_t begin = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == begin) fail("expected a number");
    return Integer(std::string(s_.substr(begin, pos_ - begin)), 10);
  }

  std::uint64_t digits(const char* what) {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(std::string("expected ") + what);
    }
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(take() - '0');
      if (v > 1000000) fail(std::string(what) + " too large");
    }
    return v;
  }

  char peek() const { return s_[pos_]; }
  char take() { return s_[pos_++]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial '" + std::string(s_) + "': " + what);
  }

  std::string_view s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

HomogeneousForm HomogeneousForm::parse(std::string_view text, std::size_t nvars) {
  return FormParser(text, nvars).parse();
}

}  // namespace dioph
