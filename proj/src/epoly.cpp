#include "latgenus/epoly.hpp"

namespace latgenus {

BivariatePolynomial BivariatePolynomial::constant(const Integer& c) { return monomial(c, 0, 0); }

BivariatePolynomial BivariatePolynomial::monomial(const Integer& c, long pu, long pv) {
  if (pu < 0 || pv < 0) throw DomainError("BivariatePolynomial: negative exponent");
  BivariatePolynomial r;
  r.add_term({pu, pv}, c);
  return r;
}

void BivariatePolynomial::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Integer BivariatePolynomial::coefficient(long pu, long pv) const {
  auto it = terms_.find({pu, pv});
  return it == terms_.end() ? Integer(0) : it->second;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned long e) const {
  BivariatePolynomial result = constant(1);
  BivariatePolynomial base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Integer BivariatePolynomial::evaluate(const Integer& u, const Integer& v) const {
  Integer total = 0;
  for (const auto& [e, c] : terms_) {
    Integer up, vp;
    mpz_pow_ui(up.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(e.first));
    mpz_pow_ui(vp.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(e.second));
    total += c * up * vp;
  }
  return total;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (e.first > 0) mono += e.first == 1 ? "u" : "u^" + std::to_string(e.first);
    if (e.second > 0) mono += e.second == 1 ? "v" : "v^" + std::to_string(e.second);
    if (mono.empty() || mag != 1) out += mag.get_str();
    out += mono;
  }
  return out;
}

BivariatePolynomial e_torus(unsigned long d) {
  const BivariatePolynomial t = BivariatePolynomial::monomial(1, 1, 1) - BivariatePolynomial::constant(1);
  return t.pow(d);
}

BivariatePolynomial e_toric(const std::vector<Integer>& fvector, unsigned long n) {
  if (fvector.size() != n + 1) throw DimensionMismatch("e_toric: f-vector must have n + 1 entries");
  BivariatePolynomial total;
  for (unsigned long d = 0; d <= n; ++d) total += e_torus(n - d) * fvector[d];
  return total;
}

BivariatePolynomial curve_e_expected(long g, long b, bool compact) {
  if (g < 0) throw DomainError("curve_e_expected: negative genus");
  if (b < 3) throw DomainError("curve_e_expected: a lattice polygon has at least 3 boundary points");
  BivariatePolynomial e = BivariatePolynomial::monomial(1, 1, 1);
  e -= (BivariatePolynomial::monomial(1, 1, 0) + BivariatePolynomial::monomial(1, 0, 1)) * Integer(g);
  e += BivariatePolynomial::constant(compact ? Integer(1) : Integer(-(b - 1)));
  return e;
}

Integer chi_y_from_E(const BivariatePolynomial& e, long p) {
  Integer total = 0;
  for (const auto& [exps, c] : e.terms())
    if (exps.first == p) total += c;
  return total;
}

}  // namespace latgenus
