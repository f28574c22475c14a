#include "hecke/finite_rep.hpp"

#include "hecke/errors.hpp"

namespace hecke {

FiniteRep FiniteRep::make(Int p, int r, Int m) {
  if (r < 0 || r > p - 1)
    throw Error(Errc::InvalidParameter, "need 0 <= r <= p-1 for irreducibility");
  Int mm = p > 2 ? ((m % (p - 1)) + (p - 1)) % (p - 1) : 0;
  return FiniteRep{p, r, mm};
}

FqMat FiniteRep::act_residue(Int a, Int b, Int c, Int d) const {
  const Fq& f = field();
  auto fp = [&](Int x) { return f.from_int(x); };
  FqElem det = fp(a) * fp(d) - fp(b) * fp(c);
  if (det.is_zero())
    throw Error(Errc::InternalCheckFailed, "residue matrix is singular");
  // Basis images: x -> a x + c y, y -> b x + d y. The monomial x^(r-i) y^i
  // maps to (a x + c y)^(r-i) (b x + d y)^i, expanded by convolution.
  FqMat mat = FqMat::zero(f, dim(), dim());
  // Rows of Pascal-style expansions: pow1[j] = coeff of x^(deg-j) y^j.
  for (int i = 0; i <= r; ++i) {
    std::vector<FqElem> acc{f.one()};
    for (int t = 0; t < r - i; ++t) {
      std::vector<FqElem> next(acc.size() + 1, f.zero());
      for (size_t j = 0; j < acc.size(); ++j) {
        next[j] = next[j] + acc[j] * fp(a);
        next[j + 1] = next[j + 1] + acc[j] * fp(c);
      }
      acc = next;
    }
    for (int t = 0; t < i; ++t) {
      std::vector<FqElem> next(acc.size() + 1, f.zero());
      for (size_t j = 0; j < acc.size(); ++j) {
        next[j] = next[j] + acc[j] * fp(b);
        next[j + 1] = next[j + 1] + acc[j] * fp(d);
      }
      acc = next;
    }
    for (int j = 0; j <= r; ++j) mat.at(j, i) = acc[j];
  }
  FqElem twist = det.pow(m);
  return mat.scaled(twist);
}

FqMat FiniteRep::act(const PAdicMatrix& k) const {
  if (!k.in_K())
    throw Error(Errc::InternalCheckFailed, "action only defined for elements of K");
  return act_residue(k.e[0][0].residue_mod(p), k.e[0][1].residue_mod(p),
                     k.e[1][0].residue_mod(p), k.e[1][1].residue_mod(p));
}

std::vector<std::vector<FqElem>> finite_rep_invariants(const FiniteRep& v,
                                                       InvariantSubgroup which,
                                                       const IntVec& lambda) {
  const Fq& f = v.field();
  if (which == InvariantSubgroup::LambdaUnipotent) {
    if (lambda.size() != 2)
      throw Error(Errc::InvalidParameter, "lambda must be a cocharacter of rank 2");
    if (lambda[0] == lambda[1]) {
      // Central lambda: the relevant unipotent group is trivial.
      std::vector<std::vector<FqElem>> whole;
      for (int i = 0; i < v.dim(); ++i) {
        std::vector<FqElem> e(v.dim(), f.zero());
        e[i] = f.one();
        whole.push_back(e);
      }
      return whole;
    }
  }
  // Invariants under all lower unipotent elements [[1,0],[c,1]].
  FqMat stacked = FqMat::zero(f, v.dim() * static_cast<int>(v.p - 1), v.dim());
  int row = 0;
  for (Int c = 1; c < v.p; ++c) {
    FqMat diff = v.act_residue(1, 0, c, 1) - FqMat::identity(f, v.dim());
    for (int i = 0; i < v.dim(); ++i)
      for (int j = 0; j < v.dim(); ++j) stacked.at(row + i, j) = diff.at(i, j);
    row += v.dim();
  }
  return null_space(stacked);
}

std::vector<FqElem> upper_coinvariant_functional(const FiniteRep& v) {
  const Fq& f = v.field();
  // Span of (u - 1)V over the upper unipotent subgroup; the functional is the
  // one vanishing on it, normalized at the lowest-weight monomial.
  std::vector<std::vector<FqElem>> gens;
  for (Int b = 1; b < v.p; ++b) {
    FqMat diff = v.act_residue(1, b, 0, 1) - FqMat::identity(f, v.dim());
    for (int col = 0; col < v.dim(); ++col) {
      std::vector<FqElem> w(v.dim());
      for (int i = 0; i < v.dim(); ++i) w[i] = diff.at(i, col);
      gens.push_back(w);
    }
  }
  if (v.p == 2 && gens.empty())
    throw Error(Errc::InternalCheckFailed, "unipotent group has no generators");
  FqMat m = FqMat::zero(f, static_cast<int>(gens.size()), v.dim());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int j = 0; j < v.dim(); ++j) m.at(static_cast<int>(i), j) = gens[i][j];
  auto functionals = null_space(m);  // functionals vanishing on the image
  if (functionals.size() != 1)
    throw Error(Errc::InternalCheckFailed,
                "coinvariants are not one-dimensional");
  std::vector<FqElem> ell = functionals[0];
  FqElem at_lowest = ell[v.lowest_index()];
  if (at_lowest.is_zero())
    throw Error(Errc::InternalCheckFailed,
                "lowest-weight vector dies in the coinvariants");
  FqElem inv = at_lowest.inverse();
  for (auto& x : ell) x = x * inv;
  return ell;
}

}  // namespace hecke
