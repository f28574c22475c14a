#include "hecke/hecke_gl2.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

FqMat HeckeKernel::at(const PAdicMatrix& g) const {
  IntVec la = cartan_decompose(g);
  auto it = values.find(la);
  if (it == values.end())
    return FqMat::zero(field(), target.dim(), source.dim());
  CartanFactorization f = cartan_factorize(g);
  return target.act(f.k2) * it->second * source.act(f.k1);
}

HeckeKernel build_kernel(const FiniteRep& v1, const FiniteRep& v2,
                         const IntVec& lambda) {
  if (v1.p != v2.p) throw Error(Errc::InvalidParameter, "different primes");
  Int p = v1.p;
  if (lambda.size() != 2 || lambda[0] < lambda[1])
    throw Error(Errc::NotDominant, "lambda must be a dominant cocharacter of GL2");
  const Fq& f = v1.field();
  HeckeKernel k{v1, v2, {}};
  if (lambda[0] == lambda[1]) {
    if (!(v1 == v2))
      throw Error(Errc::IncompatibleWeights,
                  "a central coset needs equal source and target");
    k.values[lambda] = FqMat::identity(f, v1.dim());
    return k;
  }
  // Regular lambda: the torus weights of the lowest-weight lines must agree
  // modulo p-1.
  IntVec w1 = v1.lowest_weight(), w2 = v2.lowest_weight();
  Int mod = p - 1;
  auto same = [&](Int a, Int b) { return mod <= 1 || ((a - b) % mod + mod) % mod == 0; };
  if (!same(w1[0], w2[0]) || !same(w1[1], w2[1]))
    throw Error(Errc::IncompatibleWeights,
                "lowest-weight characters differ on the torus of GL2(F_p)");
  // Value: V1 ->> upper-unipotent coinvariants -> lowest-weight line of V2,
  // normalized lowest to lowest.
  std::vector<FqElem> ell = upper_coinvariant_functional(v1);
  FqMat val = FqMat::zero(f, v2.dim(), v1.dim());
  for (int j = 0; j < v1.dim(); ++j) val.at(v2.lowest_index(), j) = ell[j];
  k.values[lambda] = val;
  (void)p;
  return k;
}

namespace {

// Dominant mu below lambda in the dominance order with the same total
// valuation: mu = lambda - n * (1, -1).
std::vector<IntVec> dominance_chain(const IntVec& lambda) {
  std::vector<IntVec> out;
  IntVec mu = lambda;
  while (mu[0] >= mu[1]) {
    out.push_back(mu);
    mu = IntVec{mu[0] - 1, mu[1] + 1};
  }
  return out;
}

}  // namespace

HeckeKernel convolve(const HeckeKernel& phi, const HeckeKernel& psi) {
  if (!(psi.target == phi.source))
    throw Error(Errc::InvalidParameter, "target of psi must be the source of phi");
  Int p = phi.p();
  const Fq& f = phi.field();
  HeckeKernel out{psi.source, phi.target, {}};
  if (phi.is_zero() || psi.is_zero()) return out;
  // Candidate supports: dominant mu below the sum of supporting cosets.
  std::vector<IntVec> candidates;
  for (const auto& [la, va] : phi.values)
    for (const auto& [mu, vb] : psi.values) {
      for (const auto& c : dominance_chain(vec_add(la, mu)))
        if (std::find(candidates.begin(), candidates.end(), c) == candidates.end())
          candidates.push_back(c);
    }
  for (const auto& mu : candidates) {
    PAdicMatrix t = PAdicMatrix::diagonal_power(p, mu[0], mu[1]);
    FqMat acc = FqMat::zero(f, phi.target.dim(), psi.source.dim());
    for (const auto& [la, va] : phi.values) {
      for (const auto& y : double_coset_points(p, la)) {
        FqMat right = psi.at(y.inverse() * t);
        if (right.is_zero()) continue;
        acc = acc + phi.at(y) * right;
      }
    }
    if (!acc.is_zero()) out.values[mu] = acc;
  }
  return out;
}

InductionElement InductionElement::unit(const FiniteRep& rep, std::vector<FqElem> v) {
  InductionElement e{rep, {}};
  e.add_term(PAdicMatrix::identity(rep.p), v);
  return e;
}

void InductionElement::add_term(const PAdicMatrix& coset, const std::vector<FqElem>& v) {
  PAdicMatrix can = coset_canonicalize(coset);
  // Normalize [x k, v] = [x, k v].
  PAdicMatrix k = can.inverse() * coset;
  std::vector<FqElem> moved = rep.act(k).apply(v);
  auto it = terms.find(can);
  if (it == terms.end()) {
    bool zero = std::all_of(moved.begin(), moved.end(),
                            [](const FqElem& x) { return x.is_zero(); });
    if (!zero) terms.emplace(can, moved);
    return;
  }
  for (size_t i = 0; i < moved.size(); ++i) it->second[i] = it->second[i] + moved[i];
  bool zero = std::all_of(it->second.begin(), it->second.end(),
                          [](const FqElem& x) { return x.is_zero(); });
  if (zero) terms.erase(it);
}

InductionElement apply_to_induction(const HeckeKernel& phi, const InductionElement& f) {
  if (!(phi.source == f.rep))
    throw Error(Errc::InvalidParameter, "kernel source must match the induction");
  Int p = phi.p();
  InductionElement out{phi.target, {}};
  // phi * [g, v] = sum over x in K lambda(pi)^-1 K / K of [g x, phi(x^-1) v].
  for (const auto& [la, val] : phi.values) {
    IntVec inv_la{-la[1], -la[0]};
    for (const auto& [g, v] : f.terms) {
      for (const auto& x : double_coset_points(p, inv_la)) {
        std::vector<FqElem> w = phi.at(x.inverse()).apply(v);
        out.add_term(g * x, w);
      }
    }
  }
  return out;
}

MonoidAlgebraElement satake_transform(const HeckeKernel& phi, RootDatumPtr gl2) {
  const Fq& f = phi.field();
  Int p = phi.p();
  MonoidAlgebraElement result(gl2, f);
  if (phi.is_zero()) return result;
  int depth = 0;
  std::vector<IntVec> candidates;
  for (const auto& [la, v] : phi.values) {
    depth = std::max<int>(depth, static_cast<int>(la[0] - la[1]));
    for (const auto& c : dominance_chain(la))
      if (std::find(candidates.begin(), candidates.end(), c) == candidates.end())
        candidates.push_back(c);
  }
  int src_low = phi.source.lowest_index();
  int tgt_low = phi.target.lowest_index();
  auto coefficient_at = [&](const IntVec& mu, int levels) {
    PAdicMatrix t = PAdicMatrix::diagonal_power(p, mu[0], mu[1]);
    FqMat acc = FqMat::zero(f, phi.target.dim(), phi.source.dim());
    Int denom = 1;
    for (int i = 0; i < levels; ++i) denom *= p;
    for (Int j = 0; j < denom; ++j) {
      PAdicMatrix u = PAdicMatrix::lower_unipotent(p, Rat(j, denom));
      acc = acc + phi.at(t * u);
    }
    // Apply to the lowest-weight line and read off the lowest-weight
    // coordinate of the target; other coordinates must vanish.
    std::vector<FqElem> v(phi.source.dim(), f.zero());
    v[src_low] = f.one();
    std::vector<FqElem> img = acc.apply(v);
    for (int i = 0; i < phi.target.dim(); ++i)
      if (i != tgt_low && !img[i].is_zero())
        throw Error(Errc::InternalCheckFailed,
                    "transform does not preserve the lowest-weight line");
    return img[tgt_low];
  };
  for (const auto& mu : candidates) {
    FqElem c = coefficient_at(mu, depth);
    FqElem wide = coefficient_at(mu, depth + 1);
    if (!(c == wide))
      throw Error(Errc::InternalCheckFailed,
                  "unipotent truncation did not stabilize");
    result.add_term(mu, c);
  }
  return result;
}

ChangingWeightReport verify_changing_weight_identity(Int p, Int m, RootDatumPtr gl2) {
  const Fq& f = Fq::get(p, 1);
  FiniteRep v1 = FiniteRep::make(p, 0, m);
  FiniteRep v2 = FiniteRep::make(p, static_cast<int>(p - 1), m);
  IntVec lambda{1, 0};
  HeckeKernel phi21 = build_kernel(v1, v2, lambda);
  HeckeKernel phi12 = build_kernel(v2, v1, lambda);
  HeckeKernel conv = convolve(phi12, phi21);
  MonoidAlgebraElement s = satake_transform(conv, gl2);
  ChangingWeightReport rep{p, m, false, f.zero(), s, ""};
  IntVec top{2, 0}, low{1, 1};
  FqElem c = s.coeff(top);
  bool shape = !c.is_zero() && s.coeff(low) == -c && s.support_size() == 2;
  rep.pass = shape;
  rep.constant = c;
  if (!shape) rep.detail = "transform is not of the form c (tau_(2,0) - tau_(1,1))";
  return rep;
}

PAdicMatrix random_k_element(Int p, unsigned long long& state) {
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  Int bound = p * p * p;
  while (true) {
    Int a = static_cast<Int>(next() % bound);
    Int b = static_cast<Int>(next() % bound);
    Int c = static_cast<Int>(next() % bound);
    Int d = static_cast<Int>(next() % bound);
    PAdicMatrix g = PAdicMatrix::from_ints(p, a, b, c, d);
    if (!g.det().is_zero() && g.in_K()) return g;
  }
}

}  // namespace hecke
