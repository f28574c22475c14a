#pragma once

#include <functional>
#include <map>
#include <optional>

#include "hecke/monoid_algebra.hpp"
#include "hecke/root_datum.hpp"

namespace hecke {

// An algebra homomorphism from the dominant monoid algebra to the coefficient
// field, in the standard (Levi, character) form: it vanishes off the
// sublattice orthogonal to the Levi's simple roots and restricts to a
// character with values in the unit group on that sublattice.
struct SatakeParameter {
  RootDatumPtr rd;
  const Fq* field = nullptr;
  ParabolicSubset levi;         // probes of these simple roots evaluate to 0
  IntMat lattice;               // Hermite basis of the orthogonal sublattice
  std::vector<FqElem> values;   // nonzero value per basis row

  // Character value on a lattice vector; NotInLattice outside.
  FqElem chi(const IntVec& lambda) const;
  // Value on tau_lambda for dominant lambda: chi on the lattice, 0 off it.
  FqElem evaluate(const IntVec& lambda) const;
  FqElem evaluate_element(const MonoidAlgebraElement& e) const;
  bool operator==(const SatakeParameter& o) const;
};

SatakeParameter make_satake_parameter(RootDatumPtr rd, const Fq& field,
                                      ParabolicSubset levi,
                                      std::vector<FqElem> values);

// Checks multiplicativity of `evaluate` on all dominant pairs in a box.
bool is_algebra_homomorphism_consistent(const SatakeParameter& chi, int bound);

// The parameter of lambda -> chi1(tau_lambda) * chi2(tau_lambda). Its Levi
// subset is the union of the two Levi subsets and its character is the
// product of the two restrictions.
SatakeParameter tensor(const SatakeParameter& chi1, const SatakeParameter& chi2);

// Recovers (levi, character) from an evaluation oracle: the Levi set is read
// off from the probe cocharacters, the character from a Hermite basis moved
// into the dominant cone.
SatakeParameter parameterize_from_oracle(
    RootDatumPtr rd, const Fq& field,
    const std::function<FqElem(const IntVec&)>& oracle);

struct RestrictedParameter {
  RootDatumPtr datum;       // same roots and coroots on the sublattice Y
  SatakeParameter param;
};

// Restriction along a sublattice Y of X_* containing every simple coroot.
RestrictedParameter restrict_to_sublattice(const SatakeParameter& chi,
                                           const IntMat& sublattice);

// Lattice criterion: tau_coroot - 1 is irreducible in the full group algebra
// unless the coroot is twice a lattice vector.
bool tau_coroot_minus_one_irreducible(const RootDatum& rd, int alpha);

// Laurent polynomials on Z^rank as finitely supported coefficient maps.
using LaurentElement = std::map<IntVec, FqElem>;

struct LaurentFactorization {
  LaurentElement left;
  LaurentElement right;
};

// Exhaustive search for a nontrivial factorization with both factors
// supported (after translation) in [0, support_bound]^rank. Complete for
// elements whose Newton polytope fits in that box, since Minkowski summands
// of a subpolytope of the box normalize into the box.
std::optional<LaurentFactorization> brute_force_laurent_factor_search(
    int rank, const LaurentElement& element, int support_bound, const Fq& field);

// tau_coroot - 1 as a Laurent element.
LaurentElement tau_coroot_minus_one(const RootDatum& rd, int alpha, const Fq& field);

}  // namespace hecke
