#pragma once

#include <vector>

#include "jaccomb/curve.hpp"
#include "jaccomb/rational.hpp"
#include "jaccomb/stability.hpp"

namespace jaccomb {

// The degree class group Δ_X^0 = Z_0^gamma / Λ_X, where Λ_X is spanned by the
// rows C_i (entry |C_i ∩ C_j| at j != i, minus the row sum on the diagonal).
// Zero-sum vectors are coordinatized by dropping the last entry, which turns
// the quotient into Z^(gamma-1) / rowspan(A) for the projected generator
// matrix A; its Smith normal form provides the invariant factors, the order
// c(X), and an exact membership test.
struct ClassGroup {
  int gamma = 0;
  std::vector<std::vector<Int>> lattice_generators;  // gamma x gamma rows C_i
  std::vector<Int> invariant_factors;                // nontrivial factors, divisibility chain
  Int order;                                         // c(X) = product of all factors

  std::vector<Int> snf_diag;                // gamma-1 positive diagonal entries
  std::vector<std::vector<Int>> snf_right;  // right multiplier R (stored column-wise) with U*A*R diagonal
};

ClassGroup build_class_group(const CurveGraph& g);

// d1 ≡ d2 iff d1 - d2 ∈ Λ_X, decided by divisibility against the Smith
// diagonal.  Requires |d1| = |d2| (classes of different totals never meet).
bool same_class(const ClassGroup& cg, const Multidegree& d1, const Multidegree& d2);

// Number of spanning trees of the dual multigraph: exact determinant of the
// reduced Laplacian via fraction-free (Bareiss) elimination.  Equals
// ClassGroup::order by the matrix-tree theorem.
Int spanning_tree_count(const CurveGraph& g);

}  // namespace jaccomb
