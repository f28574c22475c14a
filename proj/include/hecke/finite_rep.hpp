#pragma once

#include "hecke/finite_field.hpp"
#include "hecke/padic.hpp"

namespace hecke {

// The irreducible representation Sym^r tensor det^m of GL_2(F_p) on the
// monomial basis x^(r-i) y^i, i = 0..r. Its lowest weight is (m, m+r), inside
// the window -p < -r <= 0.
struct FiniteRep {
  Int p = 2;
  int r = 0;   // 0 <= r <= p-1
  Int m = 0;   // exponent of det, reduced mod p-1

  static FiniteRep make(Int p, int r, Int m);
  int dim() const { return r + 1; }
  const Fq& field() const { return Fq::get(p, 1); }
  // Index of the lowest-weight monomial y^r.
  int lowest_index() const { return r; }
  IntVec lowest_weight() const { return IntVec{m, m + r}; }

  // Action matrix of a residue matrix [[a, b], [c, d]] in GL_2(F_p).
  FqMat act_residue(Int a, Int b, Int c, Int d) const;
  // Action of an element of K via reduction mod p.
  FqMat act(const PAdicMatrix& k) const;
  bool operator==(const FiniteRep& o) const { return p == o.p && r == o.r && m == o.m; }
};

enum class InvariantSubgroup { LowerUnipotent, LambdaUnipotent };

// Basis of the invariants under the lower-triangular unipotent subgroup, or
// under the lambda-dependent opposite unipotent group (trivial when lambda is
// central, so the whole space comes back).
std::vector<std::vector<FqElem>> finite_rep_invariants(const FiniteRep& v,
                                                       InvariantSubgroup which,
                                                       const IntVec& lambda = {});

// The functional cutting out the coinvariants under the upper-triangular
// unipotent subgroup, normalized to 1 on the lowest-weight monomial.
std::vector<FqElem> upper_coinvariant_functional(const FiniteRep& v);

}  // namespace hecke
