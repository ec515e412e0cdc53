#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace weylcc {

// Laurent polynomial in v with arbitrary-precision integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  static LaurentPoly monomial(int exponent, const mpz_class& c = 1);
  static LaurentPoly u();  // v - v^-1

  const std::map<int, mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(int exponent) const;
  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const;
  int max_degree() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }

  LaurentPoly shift(int k) const;
  mpz_class eval_at_one() const;
  // Coefficients c_k with p = sum c_k (v - v^-1)^k; throws DomainError outside that span.
  std::vector<mpz_class> in_u_basis() const;
  static LaurentPoly from_u_basis(const std::vector<mpz_class>& c);

  // Descending exponents, e.g. "v^2 + 2 + v^-2", "v - v^-1", "0".
  std::string to_string() const;

 private:
  void add_term(int exponent, const mpz_class& c);
  std::map<int, mpz_class> coeffs_;
};

std::string to_string(const std::vector<mpz_class>& u_coeffs);

}  // namespace weylcc
