#pragma once

#include <optional>

#include "trop/numeric.hpp"

namespace trop {

// Exact linear algebra over Z and Q on small dense matrices.

int rank_rational(const RatMat& rows);
int rank_rational(const IntMat& rows);

struct LinearSolve {
  enum Kind { Unique, Underdetermined, Inconsistent } kind;
  RatVec solution;  // one solution when kind != Inconsistent
};

// Solves A x = b with A given row-wise (m x n).
LinearSolve solve_rational(const RatMat& a, const RatVec& b);

// Exact determinant of a square integer matrix (Bareiss).
Int det_int(const IntMat& m);

// Row-style Hermite normal form; returns the nonzero rows (a canonical
// basis of the integer row span).
IntMat hnf_rows(IntMat m);

// Basis of { x in Z^n : r . x = 0 for every row r }.  The result is a
// saturated lattice by construction.
IntMat integer_kernel(const IntMat& rows, int n);

// Basis of span_R(rows) intersected with Z^n (the saturation of the row
// lattice), computed as a double integer kernel.  Canonical (HNF) rows.
IntMat saturated_basis(const IntMat& rows, int n);

// Nonzero elementary divisors of an integer matrix.
std::vector<Int> smith_divisors(IntMat m);

// Index of the lattice generated by the rows inside its saturation:
// the product of the elementary divisors.  Throws on rank-0 input.
Int sublattice_index(const IntMat& generators);

}  // namespace trop
