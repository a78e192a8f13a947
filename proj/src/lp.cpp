#include "trop/lp.hpp"

namespace trop {

std::optional<RatVec> lp_feasible_point(const RatMat& a_in, const RatVec& b_in) {
  size_t m = a_in.size();
  size_t n = m == 0 ? 0 : a_in[0].size();
  if (m == 0) return RatVec(n, Rat(0));

  // Tableau with one artificial variable per row; minimize their sum.
  RatMat a = a_in;
  RatVec b = b_in;
  for (size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      b[i] = -b[i];
      for (auto& v : a[i]) v = -v;
    }
  size_t total = n + m;
  RatMat t(m, RatVec(total + 1, Rat(0)));
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][total] = b[i];
    basis[i] = n + i;
  }
  // Objective row: sum of artificial rows (cost of artificials is 1).
  RatVec z(total + 1, Rat(0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= total; ++j) z[j] += t[i][j];
  for (size_t i = 0; i < m; ++i) z[n + i] = 0;

  while (true) {
    // Bland: entering = smallest index with positive reduced cost.
    size_t enter = total;
    for (size_t j = 0; j < total; ++j)
      if (z[j] > 0) {
        enter = j;
        break;
      }
    if (enter == total) break;
    // Ratio test, Bland ties by smallest basis index.
    size_t leave = m;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][total] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot happen in phase 1
    Rat piv = t[leave][enter];
    for (size_t j = 0; j <= total; ++j) t[leave][j] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
    }
    Rat fz = z[enter];
    if (fz != 0)
      for (size_t j = 0; j <= total; ++j) z[j] -= fz * t[leave][j];
    basis[leave] = enter;
  }

  Rat objective = 0;
  for (size_t i = 0; i < m; ++i)
    if (basis[i] >= n) objective += t[i][total];
  if (objective != 0) return std::nullopt;
  RatVec x(n, Rat(0));
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][total];
  return x;
}

bool in_convex_hull(const std::vector<IntVec>& points, const RatVec& p) {
  if (points.empty()) return false;
  size_t d = p.size();
  size_t k = points.size();
  // lambda >= 0, sum lambda = 1, sum lambda_i q_i = p
  RatMat a(d + 1, RatVec(k));
  RatVec b(d + 1);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < k; ++j) a[i][j] = Rat(points[j][i]);
    b[i] = p[i];
  }
  for (size_t j = 0; j < k; ++j) a[d][j] = 1;
  b[d] = 1;
  return lp_feasible_point(a, b).has_value();
}

}  // namespace trop
