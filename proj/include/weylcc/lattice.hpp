#pragma once

#include <optional>
#include <vector>

#include "weylcc/numeric.hpp"

namespace weylcc {

// Row-echelon basis of the sublattice of Z^n spanned by a set of generators.
// reduce() sends every vector to a canonical representative of its coset.
class HermiteLattice {
 public:
  HermiteLattice(std::vector<IVec> generators, int n);

  IVec reduce(IVec v) const;
  bool contains(const IVec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<IVec>& rows() const { return rows_; }

 private:
  int n_;
  std::vector<IVec> rows_;
  std::vector<int> pivots_;
};

// U * A * V = diag(d_1 | d_2 | ...), U and V unimodular. Only V is kept,
// which is what the coset map of the row lattice needs.
struct SmithForm {
  std::vector<Int> diagonal;
  IMat right{};
};

SmithForm smith_normal_form(const IMat& a, int n);

// Rational linear algebra on n x n systems.
std::vector<QVec> nullspace(const QMat& m, int n);
std::optional<QVec> solve(const QMat& m, const QVec& b, int n);
// Reduced row echelon form of the given row vectors (zero rows dropped).
std::vector<QVec> row_echelon(std::vector<QVec> rows, int n);

}  // namespace weylcc
