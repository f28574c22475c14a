#pragma once

#include "hecke/finite_field.hpp"
#include "hecke/lattice.hpp"

namespace hecke {

// A smooth character of GL_1(F) with values in the model of the coefficient
// field. Smooth characters into a field without p-torsion are trivial on
// 1 + piO, so a character is determined by its residue exponent on units and
// its value at the uniformizer; that pair is the stored datum.
struct SmoothCharacter {
  Int q = 2;               // size of the residue field of F
  Int unit_exponent = 0;   // exponent e of u -> ubar^e, reduced mod q-1
  FqElem pi_value;         // value at the uniformizer; never zero

  static SmoothCharacter trivial(Int q, const Fq& field);
  static SmoothCharacter make(Int q, Int unit_exponent, FqElem pi_value);
  bool is_trivial() const;
  SmoothCharacter operator*(const SmoothCharacter& o) const;
  SmoothCharacter power(Int e) const;
  bool operator==(const SmoothCharacter& o) const;
};

// A smooth character of a split torus, given on a basis of a sublattice Y of
// the cocharacter lattice: the character of T determined by one smooth
// character of F^x per basis cocharacter.
struct TorusCharacterDatum {
  Int q = 2;
  const Fq* field = nullptr;
  IntMat basis;  // rows: basis of Y inside Z^n
  std::vector<SmoothCharacter> chars;

  static TorusCharacterDatum make(Int q, const Fq& field, IntMat basis,
                                  std::vector<SmoothCharacter> chars);
  static TorusCharacterDatum trivial(Int q, const Fq& field, IntMat basis);
  // Multiplicative extension along the coordinates of lambda in the basis.
  SmoothCharacter compose_with_cocharacter(const IntVec& lambda) const;
  bool operator==(const TorusCharacterDatum& o) const;
};

}  // namespace hecke
