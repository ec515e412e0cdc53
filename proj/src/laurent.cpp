#include "weylcc/laurent.hpp"

#include "weylcc/numeric.hpp"

namespace weylcc {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int exponent, const mpz_class& c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::u() { return monomial(1) - monomial(-1); }

mpz_class LaurentPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_degree() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  return coeffs_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = coeffs_.emplace(exponent, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e] = -c;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) p.add_term(ea + eb, ca * cb);
  return p;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e + k] = c;
  return p;
}

mpz_class LaurentPoly::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

std::vector<mpz_class> LaurentPoly::in_u_basis() const {
  std::vector<mpz_class> out;
  LaurentPoly rest = *this;
  while (!rest.is_zero()) {
    const int d = rest.max_degree();
    if (d < 0 || rest.min_degree() != -d)
      throw DomainError("polynomial " + to_string() + " is not in Z[v - v^-1]");
    if (out.size() < static_cast<std::size_t>(d) + 1) out.resize(d + 1, 0);
    const mpz_class c = rest.coeff(d);
    out[d] = c;
    LaurentPoly ud = 1;
    for (int k = 0; k < d; ++k) ud = ud * u();
    rest -= ud * LaurentPoly::monomial(0, c);
  }
  return out;
}

LaurentPoly LaurentPoly::from_u_basis(const std::vector<mpz_class>& c) {
  LaurentPoly p, power = 1;
  for (const auto& ck : c) {
    p += power * monomial(0, ck);
    power = power * u();
  }
  return p;
}

namespace {

std::string monomial_text(int e) {
  if (e == 1) return "v";
  return "v^" + std::to_string(e);
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    const mpz_class mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += monomial_text(e);
    } else {
      s += mag.get_str() + "*" + monomial_text(e);
    }
  }
  return s;
}

std::string to_string(const std::vector<mpz_class>& u_coeffs) {
  std::string s = "[";
  for (std::size_t k = 0; k < u_coeffs.size(); ++k) {
    if (k) s += ",";
    s += u_coeffs[k].get_str();
  }
  return s + "]";
}

}  // namespace weylcc
