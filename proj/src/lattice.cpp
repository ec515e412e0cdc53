#include "weylcc/lattice.hpp"

#include <cstdlib>
#include <utility>

namespace weylcc {

namespace {

void axpy_row(IVec& target, Int q, const IVec& source, int n) {
  for (int k = 0; k < n; ++k) target[k] -= q * source[k];
}

}  // namespace

HermiteLattice::HermiteLattice(std::vector<IVec> generators, int n) : n_(n) {
  std::vector<IVec> rows;
  for (const IVec& g : generators)
    if (!is_zero(g, n)) rows.push_back(g);

  std::size_t r = 0;
  for (int col = 0; col < n && r < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        axpy_row(rows[i], rows[i][col] / rows[r][col], rows[r], n);
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (int k = 0; k < n; ++k) rows[r][k] = -rows[r][k];
    for (std::size_t i = 0; i < r; ++i)
      axpy_row(rows[i], floor_div(rows[i][col], rows[r][col]), rows[r], n);
    pivots_.push_back(col);
    ++r;
  }
  rows.resize(r);
  rows_ = std::move(rows);
}

IVec HermiteLattice::reduce(IVec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const int col = pivots_[k];
    axpy_row(v, floor_div(v[col], rows_[k][col]), rows_[k], n_);
  }
  return v;
}

bool HermiteLattice::contains(const IVec& v) const { return is_zero(reduce(v), n_); }

SmithForm smith_normal_form(const IMat& a, int n) {
  IMat d = a;
  IMat v = identity_matrix(n);
  auto swap_cols = [&](IMat& m, int c1, int c2) {
    for (int i = 0; i < n; ++i) std::swap(m[i][c1], m[i][c2]);
  };
  auto col_axpy = [&](IMat& m, int target, Int q, int source) {
    for (int i = 0; i < n; ++i) m[i][target] -= q * m[i][source];
  };

  SmithForm out;
  for (int t = 0; t < n; ++t) {
    while (true) {
      int bi = -1, bj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j)
          if (d[i][j] != 0 && (bi < 0 || std::llabs(d[i][j]) < std::llabs(d[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) break;
      std::swap(d[t], d[bi]);
      swap_cols(d, t, bj);
      swap_cols(v, t, bj);

      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (d[i][t] == 0) continue;
        axpy_row(d[i], d[i][t] / d[t][t], d[t], n);
        if (d[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (d[t][j] == 0) continue;
        const Int q = d[t][j] / d[t][t];
        col_axpy(d, j, q, t);
        col_axpy(v, j, q, t);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      int bad_row = -1;
      for (int i = t + 1; i < n && bad_row < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (d[i][j] % d[t][t] != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      for (int k = 0; k < n; ++k) d[t][k] += d[bad_row][k];
    }
    if (d[t][t] < 0) {
      for (int i = 0; i < n; ++i) {
        d[i][t] = -d[i][t];
        v[i][t] = -v[i][t];
      }
    }
    out.diagonal.push_back(d[t][t]);
  }
  out.right = v;
  return out;
}

std::vector<QVec> row_echelon(std::vector<QVec> rows, int n) {
  std::size_t r = 0;
  for (int col = 0; col < n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational lead = rows[r][col];
    for (int k = 0; k < n; ++k) rows[r][k] /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (int k = 0; k < n; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

namespace {

struct Reduced {
  std::vector<QVec> rows;
  std::vector<Rational> rhs;
  std::vector<int> pivots;
};

Reduced eliminate(const QMat& m, const QVec& b, int n) {
  Reduced out;
  std::vector<QVec> rows(m.begin(), m.begin() + n);
  std::vector<Rational> rhs(b.begin(), b.begin() + n);
  std::size_t r = 0;
  for (int col = 0; col < n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    std::swap(rhs[r], rhs[p]);
    const Rational lead = rows[r][col];
    for (int k = 0; k < n; ++k) rows[r][k] /= lead;
    rhs[r] /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (int k = 0; k < n; ++k) rows[i][k] -= f * rows[r][k];
      rhs[i] -= f * rhs[r];
    }
    out.pivots.push_back(col);
    ++r;
  }
  out.rows = std::move(rows);
  out.rhs = std::move(rhs);
  return out;
}

}  // namespace

std::vector<QVec> nullspace(const QMat& m, int n) {
  const Reduced red = eliminate(m, QVec{}, n);
  std::vector<bool> is_pivot(n, false);
  for (int p : red.pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QVec v{};
    v[free] = 1;
    for (std::size_t k = 0; k < red.pivots.size(); ++k) v[red.pivots[k]] = -red.rows[k][free];
    basis.push_back(v);
  }
  return basis;
}

std::optional<QVec> solve(const QMat& m, const QVec& b, int n) {
  const Reduced red = eliminate(m, b, n);
  for (std::size_t i = red.pivots.size(); i < red.rows.size(); ++i)
    if (red.rhs[i] != 0) return std::nullopt;
  QVec x{};
  for (std::size_t k = 0; k < red.pivots.size(); ++k) x[red.pivots[k]] = red.rhs[k];
  return x;
}

}  // namespace weylcc
