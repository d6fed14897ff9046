#include "jaccomb/class_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

namespace jaccomb {

namespace {

using Matrix = std::vector<std::vector<Int>>;

// Smith normal form of an m x n matrix (m >= n here), tracking only the
// right (column) multiplier: row operations do not matter for solving
// x * A = e.  Returns the diagonal; A is consumed.
void smith_form(Matrix& a, std::vector<Int>& diag, Matrix& right) {
  std::size_t m = a.size();
  std::size_t n = m ? a[0].size() : 0;
  right.assign(n, std::vector<Int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) right[j][j] = 1;
  diag.clear();

  for (std::size_t t = 0; t < n && t < m; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing submatrix becomes the pivot.
      std::size_t pi = t, pj = t;
      bool found = false;
      Int best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (a[i][j] == 0) continue;
          Int cand = abs(a[i][j]);
          if (!found || cand < best) {
            pi = i;
            pj = j;
            best = cand;
            found = true;
          }
        }
      if (!found) return;  // rank reached
      std::swap(a[t], a[pi]);
      if (pj != t) {
        for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);
        std::swap(right[t], right[pj]);  // right is stored row-wise; columns swap as rows of R^T
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Int f = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= f * a[t][j];
        if (a[i][t] != 0) clean = false;  // remainder left; next round picks a smaller pivot
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Int f = a[t][j] / a[t][t];
        for (std::size_t i = 0; i < m; ++i) a[i][j] -= f * a[i][t];
        for (std::size_t k = 0; k < n; ++k) right[j][k] -= f * right[t][k];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: the pivot must divide the rest of the submatrix.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t jj = t; jj < n; ++jj) a[t][jj] += a[i][jj];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] < 0)
      for (std::size_t j = t; j < n; ++j) a[t][j] = -a[t][j];
    diag.push_back(a[t][t]);
  }
}

}  // namespace

ClassGroup build_class_group(const CurveGraph& g) {
  int n = g.gamma();
  ClassGroup cg;
  cg.gamma = n;
  cg.lattice_generators.assign(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    Int diag = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      cg.lattice_generators[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          make_int(g.intersection(i, j));
      diag += make_int(g.intersection(i, j));
    }
    cg.lattice_generators[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -diag;
  }

  // Project away the last coordinate: the generators all have zero sum, and
  // zero-sum vectors are determined by their first gamma-1 entries.
  Matrix a(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n - 1)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + 1 < n; ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          cg.lattice_generators[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

  smith_form(a, cg.snf_diag, cg.snf_right);
  if (static_cast<int>(cg.snf_diag.size()) != n - 1)
    fail(errc::invalid_input, "generator lattice has rank " + std::to_string(cg.snf_diag.size()) +
                                  ", expected gamma - 1 (curve not connected?)");

  cg.order = 1;
  for (const Int& d : cg.snf_diag) {
    cg.order *= d;
    if (d != 1) cg.invariant_factors.push_back(d);
  }
  return cg;
}

bool same_class(const ClassGroup& cg, const Multidegree& d1, const Multidegree& d2) {
  if (static_cast<int>(d1.size()) != cg.gamma || static_cast<int>(d2.size()) != cg.gamma)
    fail(errc::degree_mismatch, "multidegree length differs from gamma");
  if (total_degree(d1) != total_degree(d2))
    fail(errc::degree_mismatch, "multidegrees of different total degree are never equivalent");
  std::size_t n = static_cast<std::size_t>(cg.gamma) - 1;
  // f = e' * R for the projected difference e'; membership is divisibility
  // of f against the Smith diagonal.  snf_right stores R column-wise, so
  // row j of the array is the j-th column of R.
  for (std::size_t j = 0; j < n; ++j) {
    Int f = 0;
    for (std::size_t k = 0; k < n; ++k)
      f += make_int(d1[k] - d2[k]) * cg.snf_right[j][k];
    if (f % cg.snf_diag[j] != 0) return false;
  }
  return true;
}

Int spanning_tree_count(const CurveGraph& g) {
  int n = g.gamma() - 1;  // reduced Laplacian size
  if (n == 0) return 1;
  Matrix m(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    Int diag = 0;
    for (int j = 0; j < g.gamma(); ++j)
      if (j != i) diag += make_int(g.intersection(i, j));
    for (int j = 0; j < n; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i == j) ? diag : make_int(-g.intersection(i, j));
  }

  // Bareiss fraction-free elimination: every division is exact.
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == -1) return 0;
      std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                  m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num / prev;
      }
    prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  Int det = sign * m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return det;
}

}  // namespace jaccomb
