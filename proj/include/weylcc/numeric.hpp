#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace weylcc {

inline constexpr int kMaxRank = 3;

using Int = std::int64_t;
using Rational = mpq_class;

// Fixed-capacity vectors; only the first `rank` entries are meaningful and
// the tail is kept at zero so that == and hashing stay componentwise.
using IVec = std::array<Int, kMaxRank>;
using QVec = std::array<Rational, kMaxRank>;
using IMat = std::array<IVec, kMaxRank>;
using QMat = std::array<QVec, kMaxRank>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

IMat identity_matrix(int n);
IVec mat_vec(const IMat& m, const IVec& v, int n);
QVec mat_vec(const IMat& m, const QVec& v, int n);
IMat mat_mul(const IMat& a, const IMat& b, int n);
IVec add(const IVec& a, const IVec& b, int n);
IVec sub(const IVec& a, const IVec& b, int n);
IVec neg(const IVec& a, int n);
QVec add(const QVec& a, const QVec& b, int n);
QVec sub(const QVec& a, const QVec& b, int n);
QVec scale(const QVec& a, const Rational& c, int n);
QVec to_rational(const IVec& v);
bool is_integral(const QVec& v, int n);
IVec to_integer(const QVec& v, int n);
bool is_zero(const IVec& v, int n);
bool is_zero(const QVec& v, int n);

// Canonical p/q; mpq_class(p, q) alone does not reduce.
Rational ratio(Int num, Int den);

Int floor_div(Int a, Int b);
Int floor_of(const Rational& r);

// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& r);
std::string to_string(const IVec& v, int n);
std::string to_string(const QVec& v, int n);
std::vector<std::string> to_strings(const QVec& v, int n);

}  // namespace weylcc
