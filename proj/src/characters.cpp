#include "hecke/characters.hpp"

#include "hecke/errors.hpp"

namespace hecke {

namespace {

Int reduce_exponent(Int e, Int q) {
  Int m = q - 1;
  if (m <= 1) return 0;
  e %= m;
  if (e < 0) e += m;
  return e;
}

}  // namespace

SmoothCharacter SmoothCharacter::trivial(Int q, const Fq& field) {
  return SmoothCharacter{q, 0, field.one()};
}

SmoothCharacter SmoothCharacter::make(Int q, Int unit_exponent, FqElem pi_value) {
  if (pi_value.is_zero())
    throw Error(Errc::InvalidParameter, "character value at the uniformizer is zero");
  return SmoothCharacter{q, reduce_exponent(unit_exponent, q), std::move(pi_value)};
}

bool SmoothCharacter::is_trivial() const {
  return reduce_exponent(unit_exponent, q) == 0 && pi_value.is_one();
}

SmoothCharacter SmoothCharacter::operator*(const SmoothCharacter& o) const {
  if (q != o.q)
    throw Error(Errc::InvalidParameter, "characters of different residue fields");
  return make(q, unit_exponent + o.unit_exponent, pi_value * o.pi_value);
}

SmoothCharacter SmoothCharacter::power(Int e) const {
  return make(q, unit_exponent * e, pi_value.pow(e));
}

bool SmoothCharacter::operator==(const SmoothCharacter& o) const {
  return q == o.q &&
         reduce_exponent(unit_exponent, q) == reduce_exponent(o.unit_exponent, q) &&
         pi_value == o.pi_value;
}

TorusCharacterDatum TorusCharacterDatum::make(Int q, const Fq& field, IntMat basis,
                                              std::vector<SmoothCharacter> chars) {
  if (basis.size() != chars.size())
    throw Error(Errc::InvalidParameter,
                "need exactly one character per basis cocharacter");
  for (const auto& ch : chars)
    if (ch.pi_value.field != &field || ch.q != q)
      throw Error(Errc::InvalidParameter, "character does not match the datum");
  TorusCharacterDatum d;
  d.q = q;
  d.field = &field;
  d.basis = std::move(basis);
  d.chars = std::move(chars);
  return d;
}

TorusCharacterDatum TorusCharacterDatum::trivial(Int q, const Fq& field, IntMat basis) {
  std::vector<SmoothCharacter> chars(basis.size(), SmoothCharacter::trivial(q, field));
  return make(q, field, std::move(basis), std::move(chars));
}

SmoothCharacter TorusCharacterDatum::compose_with_cocharacter(const IntVec& lambda) const {
  auto coords = solve_in_lattice(basis, lambda);
  if (!coords)
    throw Error(Errc::NotInLattice,
                "cocharacter " + vec_str(lambda) + " is not in the lattice");
  SmoothCharacter acc = SmoothCharacter::trivial(q, *field);
  for (size_t i = 0; i < chars.size(); ++i)
    if ((*coords)[i] != 0) acc = acc * chars[i].power((*coords)[i]);
  return acc;
}

bool TorusCharacterDatum::operator==(const TorusCharacterDatum& o) const {
  return q == o.q && field == o.field && basis == o.basis && chars == o.chars;
}

}  // namespace hecke
