#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hecke {

// Exact integer linear algebra on small lattices. All matrices are dense,
// row-major lists of rows; a "basis" is a list of row vectors spanning a
// sublattice of Z^n. Entries stay tiny in this project (ranks <= 6, inputs
// bounded by single digits), so plain 64-bit arithmetic is used throughout.

using Int = long long;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

Int dot(const IntVec& a, const IntVec& b);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scale(Int c, const IntVec& a);
bool is_zero(const IntVec& a);
std::string vec_str(const IntVec& a);

IntMat identity_matrix(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec row_times_mat(const IntVec& v, const IntMat& m);
IntMat transpose(const IntMat& a);
Int det(const IntMat& a);
// Inverse of a matrix with determinant +-1.
IntMat inverse_unimodular(const IntMat& a);

// Canonical Hermite normal form of the row span: echelon rows, positive
// pivots, entries above each pivot reduced into [0, pivot). Zero rows are
// dropped, so the result is a canonical basis of the lattice spanned by the
// input rows.
IntMat hnf_rows(IntMat rows);

// Smith normal form: unimodular U (m x m) and V (n x n) with U*A*V diagonal,
// diagonal entries d[0] | d[1] | ... (nonnegative).
struct Smith {
  IntVec d;
  IntMat U;
  IntMat V;
};
Smith smith_normal_form(const IntMat& a);

int rank_of(IntMat rows);

// Solves sum_i x_i * rows[i] = target over Z. Returns one solution (the
// solution when the rows are independent), or nullopt if none exists.
std::optional<IntVec> solve_in_lattice(const IntMat& rows, const IntVec& target);

bool in_lattice(const IntMat& rows, const IntVec& v);

// Canonical basis of {x in Z^n : <c, x> = 0 for every constraint row c}.
IntMat kernel_basis(const IntMat& constraints, int n);

// Canonical basis of (Q * rowspan) intersected with Z^n.
IntMat saturation(const IntMat& rows, int n);

}  // namespace hecke
