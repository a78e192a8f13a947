#include "trop/intlin.hpp"

#include <algorithm>

namespace trop {

namespace {

// Gaussian elimination over Q, in place.  Returns pivot columns.
std::vector<int> reduce(RatMat& m) {
  std::vector<int> pivots;
  size_t row = 0;
  size_t ncols = m.empty() ? 0 : m[0].size();
  for (size_t col = 0; col < ncols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat p = m[row][col];
    for (size_t j = col; j < ncols; ++j) m[row][j] /= p;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back((int)col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_rational(const RatMat& rows) {
  RatMat m = rows;
  return (int)reduce(m).size();
}

int rank_rational(const IntMat& rows) {
  RatMat m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_rat(r));
  return rank_rational(m);
}

LinearSolve solve_rational(const RatMat& a, const RatVec& b) {
  size_t m = a.size();
  size_t n = m == 0 ? 0 : a[0].size();
  RatMat aug(m, RatVec(n + 1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  std::vector<int> pivots = reduce(aug);
  // Inconsistent if some pivot landed in the augmented column.
  if (!pivots.empty() && pivots.back() == (int)n) return {LinearSolve::Inconsistent, {}};
  RatVec x(n, Rat(0));
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][n];
  LinearSolve::Kind kind = pivots.size() == n ? LinearSolve::Unique : LinearSolve::Underdetermined;
  return {kind, x};
}

Int det_int(const IntMat& m) {
  size_t n = m.size();
  for (const auto& r : m)
    if (r.size() != n) throw std::invalid_argument("det_int: matrix not square");
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t sel = k + 1;
      while (sel < n && a[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(a[k], a[sel]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num / prev;  // exact by Bareiss
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

// Row HNF with optional transform tracking: u * input = result.
IntMat hnf_impl(IntMat m, IntMat* u_out) {
  size_t rows = m.size();
  size_t cols = rows == 0 ? 0 : m[0].size();
  IntMat u;
  if (u_out) {
    u.assign(rows, IntVec(rows, 0));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;
  }
  auto rowop_sub = [&](size_t i, size_t j, const Int& q) {
    // row_i -= q * row_j
    for (size_t c = 0; c < cols; ++c) m[i][c] -= q * m[j][c];
    if (u_out)
      for (size_t c = 0; c < rows; ++c) u[i][c] -= q * u[j][c];
  };
  auto rowswap = [&](size_t i, size_t j) {
    std::swap(m[i], m[j]);
    if (u_out) std::swap(u[i], u[j]);
  };
  auto rownegate = [&](size_t i) {
    for (size_t c = 0; c < cols; ++c) m[i][c] = -m[i][c];
    if (u_out)
      for (size_t c = 0; c < rows; ++c) u[i][c] = -u[i][c];
  };

  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    // Euclidean reduction in this column below row r.
    while (true) {
      size_t best = rows;
      for (size_t i = r; i < rows; ++i)
        if (m[i][col] != 0 && (best == rows || boost::multiprecision::abs(m[i][col]) <
                                                   boost::multiprecision::abs(m[best][col])))
          best = i;
      if (best == rows) break;  // column empty below r
      rowswap(r, best);
      if (m[r][col] < 0) rownegate(r);
      bool live = false;
      for (size_t i = r + 1; i < rows; ++i) {
        if (m[i][col] == 0) continue;
        Int q = m[i][col] / m[r][col];
        // floor division so the remainder lands in [0, pivot)
        if (m[i][col] - q * m[r][col] < 0) q -= 1;
        rowop_sub(i, r, q);
        if (m[i][col] != 0) live = true;
      }
      if (!live) break;
    }
    if (r < rows && m[r][col] != 0) {
      // Reduce the rows above to canonical residues.
      for (size_t i = 0; i < r; ++i) {
        if (m[i][col] == 0) continue;
        Int q = m[i][col] / m[r][col];
        if (m[i][col] - q * m[r][col] < 0) q -= 1;
        rowop_sub(i, r, q);
      }
      ++r;
    }
  }
  if (u_out) *u_out = u;
  m.resize(r < rows ? rows : rows);  // keep all rows; caller strips zeros
  return m;
}

}  // namespace

IntMat hnf_rows(IntMat m) {
  IntMat h = hnf_impl(std::move(m), nullptr);
  IntMat out;
  for (auto& row : h)
    if (!is_zero(row)) out.push_back(std::move(row));
  return out;
}

IntMat integer_kernel(const IntMat& rows, int n) {
  // Transpose so each input row becomes a column; left-kernel rows of the
  // transpose are exactly the x with rows . x = 0.
  size_t k = rows.size();
  IntMat t((size_t)n, IntVec(k));
  for (size_t i = 0; i < k; ++i) {
    if ((int)rows[i].size() != n) throw std::invalid_argument("integer_kernel: ragged input");
    for (int j = 0; j < n; ++j) t[(size_t)j][i] = rows[i][(size_t)j];
  }
  IntMat u;
  IntMat h = hnf_impl(std::move(t), &u);
  IntMat kernel;
  for (size_t i = 0; i < h.size(); ++i)
    if (is_zero(h[i])) kernel.push_back(u[i]);
  return hnf_rows(std::move(kernel));
}

IntMat saturated_basis(const IntMat& rows, int n) {
  IntMat ortho = integer_kernel(rows, n);
  return integer_kernel(ortho, n);
}

std::vector<Int> smith_divisors(IntMat m) {
  using boost::multiprecision::abs;
  std::vector<Int> divisors;
  size_t top = 0;
  while (true) {
    size_t rows = m.size();
    size_t cols = rows == 0 ? 0 : m[0].size();
    if (top >= rows || top >= cols) break;
    // Find the entry of smallest absolute value in the working block.
    size_t pi = rows, pj = cols;
    for (size_t i = top; i < rows; ++i)
      for (size_t j = top; j < cols; ++j)
        if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;  // block is zero
    std::swap(m[top], m[pi]);
    for (size_t i = top; i < rows; ++i) std::swap(m[i][top], m[i][pj]);

    bool clean = true;
    for (size_t i = top + 1; i < rows; ++i) {
      if (m[i][top] == 0) continue;
      Int q = m[i][top] / m[top][top];
      for (size_t j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
      if (m[i][top] != 0) clean = false;
    }
    for (size_t j = top + 1; j < cols; ++j) {
      if (m[top][j] == 0) continue;
      Int q = m[top][j] / m[top][top];
      for (size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][top];
      if (m[top][j] != 0) clean = false;
    }
    if (!clean) continue;  // re-select a smaller pivot

    // Pivot must divide the rest of the block.
    bool divides = true;
    for (size_t i = top + 1; i < rows && divides; ++i)
      for (size_t j = top + 1; j < cols && divides; ++j)
        if (m[i][j] % m[top][top] != 0) {
          for (size_t c = top; c < cols; ++c) m[top][c] += m[i][c];
          divides = false;
        }
    if (!divides) continue;
    divisors.push_back(abs(m[top][top]));
    ++top;
  }
  return divisors;
}

Int sublattice_index(const IntMat& generators) {
  std::vector<Int> d = smith_divisors(generators);
  if (d.empty()) throw std::invalid_argument("sublattice_index: rank-0 generator set");
  Int idx = 1;
  for (const auto& x : d) idx *= x;
  return idx;
}

}  // namespace trop
