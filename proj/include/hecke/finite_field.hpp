#pragma once

#include <string>
#include <vector>

#include "hecke/lattice.hpp"

namespace hecke {

// The coefficient field is modeled by a finite extension F_{p^k}, realized as
// F_p[x] modulo a fixed irreducible polynomial from a shipped table, so all
// encodings are reproducible. Operations never embed into a larger field
// silently; mixing fields raises ExtensionRequired.

class Fq;

struct FqElem {
  const Fq* field = nullptr;
  std::vector<int> c;  // coefficients of 1, x, ..., x^(k-1); values in [0, p)

  bool is_zero() const;
  bool is_one() const;
  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator-() const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem inverse() const;
  FqElem pow(Int e) const;
  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }
  bool operator<(const FqElem& o) const;  // coefficient order, for map keys
  std::string str() const;
};

class Fq {
 public:
  // Shared immutable field contexts; table covers p in {2,3,5,7}, k in 1..4.
  static const Fq& get(Int p, int k);

  Int p() const { return p_; }
  int degree() const { return k_; }
  Int order() const { return order_; }
  const std::vector<int>& modulus() const { return modulus_; }

  FqElem zero() const;
  FqElem one() const;
  FqElem from_int(Int a) const;
  FqElem from_coeffs(std::vector<int> c) const;
  // The class of x; a primitive element for every table entry.
  FqElem generator() const;
  std::vector<FqElem> all_elements() const;
  std::vector<FqElem> nonzero_elements() const;

 private:
  Fq(Int p, int k, std::vector<int> modulus);
  friend struct FqElem;
  Int p_;
  int k_;
  Int order_;
  std::vector<int> modulus_;  // monic, degree k, lowest coefficient first
};

// Dense matrix over one Fq, just big enough for this project's linear algebra.
struct FqMat {
  const Fq* field = nullptr;
  int rows = 0, cols = 0;
  std::vector<FqElem> a;

  static FqMat zero(const Fq& f, int rows, int cols);
  static FqMat identity(const Fq& f, int n);
  FqElem& at(int r, int c) { return a[r * cols + c]; }
  const FqElem& at(int r, int c) const { return a[r * cols + c]; }
  FqMat operator*(const FqMat& o) const;
  FqMat operator+(const FqMat& o) const;
  FqMat operator-(const FqMat& o) const;
  FqMat scaled(const FqElem& s) const;
  std::vector<FqElem> apply(const std::vector<FqElem>& v) const;
  bool is_zero() const;
  bool operator==(const FqMat& o) const;
};

// Basis of the right null space {v : m v = 0}.
std::vector<std::vector<FqElem>> null_space(const FqMat& m);
// Row space basis in reduced echelon form.
std::vector<std::vector<FqElem>> row_space(const FqMat& m);
// Solves m x = b; nullopt when inconsistent.
std::optional<std::vector<FqElem>> solve(const FqMat& m, const std::vector<FqElem>& b);

}  // namespace hecke
