#include "dioph/heights.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "dioph/errors.hpp"
#include "dioph/linalg.hpp"

namespace dioph {

namespace {

double log_of(const Integer& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    out.push_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

LogRational::LogRational(Rational r) : r_(std::move(r)) {
  r_.canonicalize();
  if (r_ <= 0) throw InvalidArgument("log of a nonpositive rational");
}

double LogRational::to_double() const { return log_of(r_.get_num()) - log_of(r_.get_den()); }

std::string LogRational::to_string() const {
  if (r_ == 1) return "0";
  return "log(" + dioph::to_string(r_) + ")";
}

LogRational& LogRational::operator+=(const LogRational& o) {
  r_ *= o.r_;
  return *this;
}

LogRational& LogRational::operator-=(const LogRational& o) {
  r_ /= o.r_;
  return *this;
}

LogRational operator*(long k, const LogRational& a) {
  Rational base = k >= 0 ? a.r_ : 1 / a.r_;
  const unsigned long e = static_cast<unsigned long>(k >= 0 ? k : -k);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return LogRational(Rational(num, den));
}

// ---------------------------------------------------------------------------

Place Place::prime(const Integer& p) {
  if (!is_prime(p)) throw InvalidArgument("not a prime: " + dioph::to_string(p));
  Place v;
  v.archimedean_ = false;
  v.p_ = p;
  return v;
}

Place Place::parse(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  Integer p;
  if (text.empty() || p.set_str(std::string(text), 10) != 0 || p < 2) {
    throw ParseError("bad place '" + std::string(text) + "'");
  }
  return prime(p);
}

std::string Place::to_string() const { return archimedean_ ? "inf" : dioph::to_string(p_); }

PlaceSet::PlaceSet(std::vector<Place> places) : places_(std::move(places)) {
  std::sort(places_.begin(), places_.end());
  places_.erase(std::unique(places_.begin(), places_.end()), places_.end());
  if (places_.empty() || !places_.front().archimedean()) {
    throw InvalidArgument("place set must contain the archimedean place");
  }
}

PlaceSet PlaceSet::parse(std::string_view csv) {
  std::vector<Place> places;
  for (auto part : split(csv, ',')) places.push_back(Place::parse(part));
  return PlaceSet(std::move(places));
}

std::string PlaceSet::to_string() const {
  std::string out;
  for (const auto& v : places_) out += (out.empty() ? "" : ",") + v.to_string();
  return out;
}

// ---------------------------------------------------------------------------

ProjectivePoint::ProjectivePoint(std::vector<Rational> coords) {
  if (coords.size() < 2) throw InvalidArgument("projective point needs at least two coordinates");
  Integer lcm = 1;
  for (auto& c : coords) {
    c.canonicalize();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> ints;
  for (const auto& c : coords) ints.push_back(Integer(c * lcm));
  *this = ProjectivePoint(ints);
}

ProjectivePoint::ProjectivePoint(const std::vector<Integer>& coords) : coords_(coords) {
  if (coords_.size() < 2) throw InvalidArgument("projective point needs at least two coordinates");
  Integer g = 0;
  for (const auto& c : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw InvalidArgument("projective point with all coordinates zero");
  const auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Integer& c) { return c != 0; });
  if (*lead < 0) g = -g;
  for (auto& c : coords_) c /= g;
}

ProjectivePoint ProjectivePoint::parse(std::string_view text) {
  std::vector<Rational> coords;
  for (auto part : split(text, ':')) coords.push_back(parse_rational(trim(part)));
  try {
    return ProjectivePoint(coords);
  } catch (const InvalidArgument& e) {
    throw ParseError("bad point '" + std::string(text) + "': " + e.what());
  }
}

std::string ProjectivePoint::to_string() const {
  std::string out;
  for (const auto& c : coords_) out += (out.empty() ? "" : ":") + dioph::to_string(c);
  return out;
}

Rational norm(const Rational& x, const Place& v) {
  if (x == 0) throw InvalidArgument("norm of zero");
  if (v.archimedean()) return abs(x);
  const long ord = p_adic_order(x, v.p());
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), v.p().get_mpz_t(), static_cast<unsigned long>(ord >= 0 ? ord : -ord));
  return ord >= 0 ? Rational(1, 1) / Rational(pk) : Rational(pk);
}

Rational coordinate_norm(const ProjectivePoint& pt, const Place& v) {
  Rational best = 0;
  for (const auto& c : pt.coords()) {
    if (c == 0) continue;
    const Rational n = norm(Rational(c), v);
    if (n > best) best = n;
  }
  return best;
}

LogRational height(const ProjectivePoint& pt) { return LogRational(coordinate_norm(pt, Place::infinity())); }

namespace {

Rational power_of(const Rational& r, std::uint32_t e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), e);
  return Rational(num, den);
}

void check_point(const Subscheme& y, const ProjectivePoint& pt) {
  if (pt.coords().size() != y.nvars()) throw DimensionMismatch("point and subscheme in different P^n");
}

}  // namespace

bool on_support(const Subscheme& y, const ProjectivePoint& pt) {
  check_point(y, pt);
  return std::all_of(y.generators().begin(), y.generators().end(),
                     [&](const HomogeneousForm& g) { return g.evaluate(pt.coords()) == 0; });
}

LogRational weil(const Subscheme& y, const Place& v, const ProjectivePoint& pt) {
  check_point(y, pt);
  const Rational size = coordinate_norm(pt, v);
  std::optional<Rational> best;
  for (const auto& g : y.generators()) {
    const Rational value = g.evaluate(pt.coords());
    if (value == 0) continue;
    const Rational ratio = power_of(size, g.degree()) / norm(value, v);
    if (!best || ratio < *best) best = ratio;
  }
  if (!best) throw SupportHit("point " + pt.to_string() + " lies on the support of " + y.label());
  return LogRational(*best);
}

LogRational proximity(const Subscheme& y, const PlaceSet& s, const ProjectivePoint& pt) {
  LogRational total;
  for (const auto& v : s.places()) total += weil(y, v, pt);
  return total;
}

std::vector<Place> relevant_places(const Subscheme& y, const ProjectivePoint& pt) {
  check_point(y, pt);
  std::set<Integer> primes;
  for (const auto& g : y.generators()) {
    const Rational value = g.evaluate(pt.coords());
    if (value == 0) continue;
    for (const auto& p : prime_factors(abs(value.get_num()))) primes.insert(p);
    for (const auto& p : prime_factors(value.get_den())) primes.insert(p);
  }
  std::vector<Place> out{Place::infinity()};
  for (const auto& p : primes) out.push_back(Place::prime(p));
  return out;
}

Rational coefficient_size(const HomogeneousForm& f, const Place& v) {
  if (v.archimedean()) return f.coefficient_l1();
  Rational best = 0;
  for (const auto& [m, c] : f.terms()) {
    const Rational n = norm(c, v);
    if (n > best) best = n;
  }
  return best;
}

LogRational nonnegativity_constant(const Subscheme& y, const Place& v) {
  Rational best = 0;
  for (const auto& g : y.generators()) best = std::max(best, coefficient_size(g, v));
  return LogRational(best);
}

// ---------------------------------------------------------------------------

std::optional<ContainmentCertificate> find_containment(const Subscheme& x, const Subscheme& y) {
  if (x.nvars() != y.nvars()) throw DimensionMismatch("subschemes in different P^n");
  const std::size_t nvars = x.nvars();
  ContainmentCertificate cert;
  for (const auto& psi : y.generators()) {
    const std::uint32_t d = psi.degree();
    const auto index = MonomialIndex::get(nvars, d);
    // Columns: phi_i * (monomial of degree d - deg phi_i).
    std::vector<linalg::RationalVector> columns;
    std::vector<std::pair<std::size_t, Monomial>> labels;
    for (std::size_t i = 0; i < x.generators().size(); ++i) {
      const auto& phi = x.generators()[i];
      if (phi.degree() > d) continue;
      for (const auto& m : MonomialIndex::get(nvars, d - phi.degree())->monomials()) {
        columns.push_back((phi * HomogeneousForm::monomial(m)).coefficients(*index));
        labels.emplace_back(i, m);
      }
    }
    const auto coeffs = linalg::solve_combination(columns, psi.coefficients(*index));
    if (!coeffs) return std::nullopt;
    std::vector<std::optional<HomogeneousForm>> row(x.generators().size());
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if ((*coeffs)[j] == 0) continue;
      const auto& [i, m] = labels[j];
      const auto term = HomogeneousForm::monomial(m, (*coeffs)[j]);
      if (row[i]) {
        *row[i] += term;
      } else {
        row[i] = term;
      }
    }
    cert.cofactors.push_back(std::move(row));
  }
  return cert;
}

bool verify_containment(const ContainmentCertificate& c, const Subscheme& x, const Subscheme& y) {
  if (c.cofactors.size() != y.generators().size()) return false;
  for (std::size_t k = 0; k < c.cofactors.size(); ++k) {
    const auto& psi = y.generators()[k];
    if (c.cofactors[k].size() != x.generators().size()) return false;
    HomogeneousForm acc(psi.nvars(), psi.degree());
    for (std::size_t i = 0; i < x.generators().size(); ++i) {
      const auto& h = c.cofactors[k][i];
      if (!h) continue;
      if (h->degree() + x.generators()[i].degree() != psi.degree()) return false;
      acc += *h * x.generators()[i];
    }
    if (!(acc == psi)) return false;
  }
  return true;
}

LogRational containment_constant(const ContainmentCertificate& c, const Place& v) {
  Rational best = 0;
  for (const auto& row : c.cofactors) {
    Rational value = 0;
    for (const auto& h : row) {
      if (!h) continue;
      const Rational size = coefficient_size(*h, v);
      if (v.archimedean()) {
        value += size;
      } else {
        value = std::max(value, size);
      }
    }
    best = std::max(best, value);
  }
  if (best == 0) throw InvalidArgument("certificate has no nonzero cofactor");
  return LogRational(best);
}

}  // namespace dioph
