#pragma once

#include <map>

#include "hecke/finite_rep.hpp"
#include "hecke/monoid_algebra.hpp"
#include "hecke/padic.hpp"

namespace hecke {

// A compactly supported bi-K-equivariant kernel G -> Hom(V1, V2) on
// GL_2(Q_p), stored by its values at the diagonal points lambda(pi) of its
// supporting double cosets; all other values follow by equivariance.
struct HeckeKernel {
  FiniteRep source;
  FiniteRep target;
  std::map<IntVec, FqMat> values;  // dominant lambda -> value at lambda(pi)

  Int p() const { return source.p; }
  const Fq& field() const { return source.field(); }
  bool is_zero() const { return values.empty(); }
  // Equivariant evaluation at an arbitrary group element (zero off support).
  FqMat at(const PAdicMatrix& g) const;
};

// The normalized kernel supported on one double coset: its value at
// lambda(pi) factors through the unipotent coinvariants and sends the
// lowest-weight vector of V1 to the lowest-weight vector of V2. For a central
// lambda the value is the identity and V1 = V2 is required.
HeckeKernel build_kernel(const FiniteRep& v1, const FiniteRep& v2, const IntVec& lambda);

// Kernel of the composed operator: (phi * psi)(u) = sum_y phi(y) psi(y^-1 u)
// over y in supp(phi)/K.
HeckeKernel convolve(const HeckeKernel& phi, const HeckeKernel& psi);

// An element of the compact induction from V: a finite formal sum of [g, v]
// with g a canonical coset representative.
struct InductionElement {
  FiniteRep rep;
  std::map<PAdicMatrix, std::vector<FqElem>> terms;

  static InductionElement unit(const FiniteRep& rep, std::vector<FqElem> v);
  void add_term(const PAdicMatrix& coset, const std::vector<FqElem>& v);
  bool operator==(const InductionElement& o) const { return terms == o.terms; }
};

InductionElement apply_to_induction(const HeckeKernel& phi, const InductionElement& f);

// Satake transform: S(phi)(lambda(pi)) = sum over the lower unipotent cosets
// of phi(lambda(pi) u), read on the lowest-weight lines. The unipotent sum is
// truncated by the support and re-run one level deeper as a stabilization
// check. Computes the dominant-cone part; for endomorphism kernels that is
// the whole transform, and it is an algebra homomorphism there.
MonoidAlgebraElement satake_transform(const HeckeKernel& phi, RootDatumPtr gl2);

struct ChangingWeightReport {
  Int p = 2;
  Int m = 0;
  bool pass = false;
  FqElem constant;
  MonoidAlgebraElement transform;
  std::string detail;
};

// Builds the two cross kernels between the weights (r=0, m) and
// (r=p-1, m), convolves, transforms, and checks the two-term shape
// c * (tau_(2,0) - tau_(1,1)).
ChangingWeightReport verify_changing_weight_identity(Int p, Int m, RootDatumPtr gl2);

// Deterministic pseudo-random element of K, for equivariance sampling.
PAdicMatrix random_k_element(Int p, unsigned long long& state);

}  // namespace hecke
