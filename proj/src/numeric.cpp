#include "weylcc/numeric.hpp"

#include <sstream>

namespace weylcc {

IMat identity_matrix(int n) {
  IMat m{};
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IVec mat_vec(const IMat& m, const IVec& v, int n) {
  IVec out{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

QVec mat_vec(const IMat& m, const QVec& v, int n) {
  QVec out{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m[i][j] != 0) out[i] += v[j] * m[i][j];
  return out;
}

IMat mat_mul(const IMat& a, const IMat& b, int n) {
  IMat out{};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

IVec add(const IVec& a, const IVec& b, int n) {
  IVec out{};
  for (int i = 0; i < n; ++i) out[i] = a[i] + b[i];
  return out;
}

IVec sub(const IVec& a, const IVec& b, int n) {
  IVec out{};
  for (int i = 0; i < n; ++i) out[i] = a[i] - b[i];
  return out;
}

IVec neg(const IVec& a, int n) {
  IVec out{};
  for (int i = 0; i < n; ++i) out[i] = -a[i];
  return out;
}

QVec add(const QVec& a, const QVec& b, int n) {
  QVec out{};
  for (int i = 0; i < n; ++i) out[i] = a[i] + b[i];
  return out;
}

QVec sub(const QVec& a, const QVec& b, int n) {
  QVec out{};
  for (int i = 0; i < n; ++i) out[i] = a[i] - b[i];
  return out;
}

QVec scale(const QVec& a, const Rational& c, int n) {
  QVec out{};
  for (int i = 0; i < n; ++i) out[i] = a[i] * c;
  return out;
}

QVec to_rational(const IVec& v) {
  QVec out{};
  for (int i = 0; i < kMaxRank; ++i) out[i] = v[i];
  return out;
}

bool is_integral(const QVec& v, int n) {
  for (int i = 0; i < n; ++i)
    if (v[i].get_den() != 1) return false;
  return true;
}

IVec to_integer(const QVec& v, int n) {
  IVec out{};
  for (int i = 0; i < n; ++i) {
    if (v[i].get_den() != 1) throw DomainError("vector is not integral");
    out[i] = v[i].get_num().get_si();
  }
  return out;
}

bool is_zero(const IVec& v, int n) {
  for (int i = 0; i < n; ++i)
    if (v[i] != 0) return false;
  return true;
}

bool is_zero(const QVec& v, int n) {
  for (int i = 0; i < n; ++i)
    if (v[i] != 0) return false;
  return true;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Rational ratio(Int num, Int den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Int floor_of(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const IVec& v, int n) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n; ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string to_string(const QVec& v, int n) {
  std::string s = "[";
  for (int i = 0; i < n; ++i) {
    if (i) s += ',';
    s += to_string(v[i]);
  }
  return s + "]";
}

std::vector<std::string> to_strings(const QVec& v, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(to_string(v[i]));
  return out;
}

}  // namespace weylcc
