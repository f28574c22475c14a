#pragma once

#include <array>
#include <string>
#include <vector>

#include "hecke/lattice.hpp"

namespace hecke {

// Exact rational arithmetic for 2x2 matrices over Q_p. Intermediate values in
// this project stay far below 64-bit limits (entries are products of a few
// p-powers and small residues), so numerators and denominators are plain
// long long with gcd reduction on every operation.
struct Rat {
  Int num = 0;
  Int den = 1;  // always positive, gcd(num, den) = 1

  Rat() = default;
  Rat(Int n) : num(n), den(1) {}
  Rat(Int n, Int d);
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator-() const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const;
  bool is_zero() const { return num == 0; }
  // p-adic valuation; INT_MAX/2 for zero.
  int vp(Int p) const;
  // Residue mod p^k for p-integral values.
  Int residue_mod(Int p, int k = 1) const;
  std::string str() const;
};

struct PAdicMatrix {
  Int p = 2;
  std::array<std::array<Rat, 2>, 2> e;

  static PAdicMatrix from_ints(Int p, Int a, Int b, Int c, Int d);
  static PAdicMatrix identity(Int p);
  static PAdicMatrix diagonal_power(Int p, Int a, Int b);  // diag(p^a, p^b)
  static PAdicMatrix lower_unipotent(Int p, const Rat& c);
  static PAdicMatrix weyl_flip(Int p);  // antidiag(1, 1)

  Rat det() const;
  PAdicMatrix operator*(const PAdicMatrix& o) const;
  PAdicMatrix inverse() const;
  PAdicMatrix scaled(const Rat& s) const;
  bool is_p_integral() const;
  bool in_K() const;  // p-integral with unit determinant
  bool operator==(const PAdicMatrix& o) const;
  bool operator<(const PAdicMatrix& o) const;  // entry order, for map keys
  std::string str() const;
};

// Unique representative of the coset gK: an upper-triangular matrix
// [[p^x, b], [0, p^z]] with integer 0 <= b < p^x, primitive up to a global
// power of p.
PAdicMatrix coset_canonicalize(const PAdicMatrix& g);

// Elementary-divisor exponents (a >= b), possibly negative.
IntVec cartan_decompose(const PAdicMatrix& g);

struct CartanFactorization {
  PAdicMatrix k2;
  IntVec lambda;
  PAdicMatrix k1;
};

// g = k2 * diag(p^a, p^b) * k1 with k1, k2 in K, constructed by p-adic row
// and column reduction.
CartanFactorization cartan_factorize(const PAdicMatrix& g);

// Canonical representatives of the cosets in K * lambda(pi) * K / K for
// dominant lambda.
std::vector<PAdicMatrix> double_coset_points(Int p, const IntVec& lambda);

}  // namespace hecke
