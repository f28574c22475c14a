#include <doctest.h>

#include <set>

#include "hecke/builtin_data.hpp"
#include "hecke/errors.hpp"
#include "hecke/hecke_gl2.hpp"

using namespace hecke;

TEST_CASE("rational arithmetic and valuations") {
  Rat a(3, 6);
  CHECK(a.num == 1);
  CHECK(a.den == 2);
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
  CHECK(Rat(4, 9).vp(3) == -2);
  CHECK(Rat(18).vp(3) == 2);
  CHECK(Rat(5, 7).residue_mod(3) == (5 * 1) % 3);  // 7^-1 = 1 mod 3
  CHECK(Rat(1, 2).residue_mod(5) == 3);            // 2^-1 = 3 mod 5
}

TEST_CASE("coset canonicalization") {
  Int p = 3;
  PAdicMatrix id = PAdicMatrix::identity(p);
  CHECK(coset_canonicalize(id) == id);

  // Right multiplication by K never changes the representative.
  unsigned long long seed = 42;
  PAdicMatrix t = PAdicMatrix::diagonal_power(p, 1, 0);
  PAdicMatrix expect = coset_canonicalize(t);
  for (int i = 0; i < 100; ++i) {
    PAdicMatrix k = random_k_element(p, seed);
    CHECK(coset_canonicalize(t * k) == expect);
  }

  // Distinct cosets get distinct representatives.
  PAdicMatrix g1 = PAdicMatrix::from_ints(p, p, 0, 0, 1);
  PAdicMatrix g2 = PAdicMatrix::from_ints(p, p, 1, 0, 1);
  CHECK_FALSE(coset_canonicalize(g1) == coset_canonicalize(g2));
  // ... while column-equivalent matrices agree.
  PAdicMatrix h1 = PAdicMatrix::from_ints(p, 1, 0, 0, p);
  PAdicMatrix h2 = PAdicMatrix::from_ints(p, 1, 1, 0, p);
  CHECK(coset_canonicalize(h1) == coset_canonicalize(h2));

  // Negative powers of p are carried as a global scale.
  PAdicMatrix frac = PAdicMatrix::diagonal_power(p, -1, 0);
  PAdicMatrix can = coset_canonicalize(frac);
  CHECK((frac.inverse() * can).in_K());
}

TEST_CASE("cartan decomposition") {
  Int p = 5;
  CHECK(cartan_decompose(PAdicMatrix::diagonal_power(p, 1, 0)) == IntVec{1, 0});
  CHECK(cartan_decompose(PAdicMatrix::from_ints(p, p, 1, 0, 1)) == IntVec{1, 0});
  CHECK(cartan_decompose(PAdicMatrix::diagonal_power(p, 1, 1)) == IntVec{1, 1});
  CHECK(cartan_decompose(PAdicMatrix::diagonal_power(p, 0, -2)) == IntVec{0, -2});

  unsigned long long seed = 7;
  for (int i = 0; i < 50; ++i) {
    PAdicMatrix k1 = random_k_element(p, seed);
    PAdicMatrix k2 = random_k_element(p, seed);
    PAdicMatrix g = k2 * PAdicMatrix::diagonal_power(p, 2, -1) * k1;
    CHECK(cartan_decompose(g) == IntVec{2, -1});
    CartanFactorization f = cartan_factorize(g);
    CHECK(f.lambda == IntVec{2, -1});
    CHECK(f.k1.in_K());
    CHECK(f.k2.in_K());
    CHECK(f.k2 * PAdicMatrix::diagonal_power(p, 2, -1) * f.k1 == g);
  }
}

TEST_CASE("double coset points") {
  // lambda = (1,0): the p+1 standard representatives.
  for (Int p : {2, 3, 5}) {
    auto pts = double_coset_points(p, {1, 0});
    CHECK(pts.size() == static_cast<size_t>(p + 1));
    std::set<PAdicMatrix> uniq(pts.begin(), pts.end());
    CHECK(uniq.size() == pts.size());
    for (const auto& x : pts) {
      CHECK(cartan_decompose(x) == IntVec{1, 0});
      CHECK(coset_canonicalize(x) == x);
    }
  }
  CHECK(double_coset_points(3, {1, 1}).size() == 1);
  CHECK(double_coset_points(2, {2, 0}).size() == 6);  // p^2 + p
  CHECK(double_coset_points(3, {2, 0}).size() == 12);
  CHECK(double_coset_points(3, {0, -1}).size() == 4);

  // Orbit-count oracle: canonicalize k * lambda(pi) over lifts of
  // GL2(Z/p^(a-b)); the set of cosets must match exactly.
  for (Int p : {2, 3}) {
    for (const IntVec& la : {IntVec{1, 0}, IntVec{1, 1}, IntVec{2, 0}}) {
      Int mod = 1;
      for (Int i = 0; i < la[0] - la[1]; ++i) mod *= p;
      PAdicMatrix t = PAdicMatrix::diagonal_power(p, la[0], la[1]);
      std::set<PAdicMatrix> orbit;
      if (mod == 1) {
        orbit.insert(coset_canonicalize(t));
      } else {
        for (Int a = 0; a < mod; ++a)
          for (Int b = 0; b < mod; ++b)
            for (Int c = 0; c < mod; ++c)
              for (Int d = 0; d < mod; ++d) {
                PAdicMatrix k = PAdicMatrix::from_ints(p, a, b, c, d);
                if (!k.det().is_zero() && k.in_K())
                  orbit.insert(coset_canonicalize(k * t));
              }
      }
      auto pts = double_coset_points(p, la);
      std::set<PAdicMatrix> expected(pts.begin(), pts.end());
      CHECK(orbit == expected);
    }
  }
}

TEST_CASE("kernel construction and equivariance") {
  for (Int p : {2, 3, 5}) {
    FiniteRep triv = FiniteRep::make(p, 0, 0);
    HeckeKernel t10 = build_kernel(triv, triv, {1, 0});
    CHECK(t10.values.at(IntVec{1, 0}).at(0, 0).is_one());

    FiniteRep big = FiniteRep::make(p, static_cast<int>(p - 1), 0);
    HeckeKernel cross = build_kernel(triv, big, {1, 0});
    CHECK_FALSE(cross.is_zero());
    // Lowest weight goes to lowest weight.
    CHECK(cross.values.at(IntVec{1, 0}).at(big.lowest_index(), 0).is_one());

    // Bi-K-equivariance on random triples.
    unsigned long long seed = 1234 + static_cast<unsigned long long>(p);
    for (const HeckeKernel& ker : {t10, cross}) {
      for (int i = 0; i < 100; ++i) {
        PAdicMatrix k1 = random_k_element(p, seed);
        PAdicMatrix k2 = random_k_element(p, seed);
        const auto& pts = double_coset_points(p, {1, 0});
        const PAdicMatrix& x = pts[i % pts.size()];
        FqMat lhs = ker.at(k2 * x * k1);
        FqMat rhs = ker.target.act(k2) * ker.at(x) * ker.source.act(k1);
        CHECK(lhs == rhs);
      }
    }
  }
  // Weight mismatch: r=1 against r=2 at a regular coset.
  CHECK_THROWS_AS(build_kernel(FiniteRep::make(5, 1, 0), FiniteRep::make(5, 2, 0),
                               IntVec{1, 0}),
                  Error);
  // Central cosets need equal representations.
  CHECK_THROWS_AS(build_kernel(FiniteRep::make(5, 0, 0), FiniteRep::make(5, 4, 0),
                               IntVec{1, 1}),
                  Error);
}

TEST_CASE("invariant subspaces") {
  FiniteRep v = FiniteRep::make(3, 2, 0);
  auto inv = finite_rep_invariants(v, InvariantSubgroup::LowerUnipotent);
  REQUIRE(inv.size() == 1);
  CHECK(inv[0][2].is_one());  // the line through y^2
  CHECK(inv[0][0].is_zero());
  CHECK(inv[0][1].is_zero());

  FiniteRep ch = FiniteRep::make(3, 0, 1);
  CHECK(finite_rep_invariants(ch, InvariantSubgroup::LowerUnipotent).size() == 1);

  // Central lambda: the whole space.
  CHECK(finite_rep_invariants(v, InvariantSubgroup::LambdaUnipotent, {1, 1}).size() ==
        3);
  CHECK(finite_rep_invariants(v, InvariantSubgroup::LambdaUnipotent, {1, 0}).size() ==
        1);
}

TEST_CASE("convolution") {
  Int p = 3;
  auto gl2 = builtin_root_datum("GL2");
  FiniteRep triv = FiniteRep::make(p, 0, 0);
  HeckeKernel central = build_kernel(triv, triv, {1, 1});
  HeckeKernel sq = convolve(central, central);
  REQUIRE(sq.values.size() == 1);
  CHECK(sq.values.begin()->first == IntVec{2, 2});
  CHECK(sq.values.begin()->second.at(0, 0).is_one());

  // Identity kernel is neutral.
  HeckeKernel unit = build_kernel(triv, triv, {0, 0});
  HeckeKernel t10 = build_kernel(triv, triv, {1, 0});
  CHECK(convolve(t10, unit).values == t10.values);
  CHECK(convolve(unit, t10).values == t10.values);

  // The changing-weight pair composes to a kernel supported on one coset.
  FiniteRep big = FiniteRep::make(p, static_cast<int>(p - 1), 0);
  HeckeKernel phi21 = build_kernel(triv, big, {1, 0});
  HeckeKernel phi12 = build_kernel(big, triv, {1, 0});
  HeckeKernel conv = convolve(phi12, phi21);
  REQUIRE(conv.values.size() == 1);
  CHECK(conv.values.begin()->first == IntVec{2, 0});
  (void)gl2;
}

TEST_CASE("convolution agrees with operator composition on inductions") {
  // The kernel of the composed operator and the two-step action on compactly
  // induced elements are computed along disjoint code paths.
  for (Int p : {2, 3}) {
    FiniteRep triv = FiniteRep::make(p, 0, 0);
    FiniteRep big = FiniteRep::make(p, static_cast<int>(p - 1), 0);
    const Fq& f = triv.field();
    HeckeKernel phi21 = build_kernel(triv, big, {1, 0});
    HeckeKernel phi12 = build_kernel(big, triv, {1, 0});
    HeckeKernel t11 = build_kernel(triv, triv, {1, 1});

    std::vector<FqElem> v{f.one()};
    InductionElement base = InductionElement::unit(triv, v);

    InductionElement two_step = apply_to_induction(phi12, apply_to_induction(phi21, base));
    InductionElement direct = apply_to_induction(convolve(phi12, phi21), base);
    CHECK(two_step == direct);

    InductionElement mixed =
        apply_to_induction(t11, apply_to_induction(convolve(phi12, phi21), base));
    InductionElement folded =
        apply_to_induction(convolve(t11, convolve(phi12, phi21)), base);
    CHECK(mixed == folded);
  }
}

TEST_CASE("satake transform") {
  auto gl2 = builtin_root_datum("GL2");
  for (Int p : {2, 3, 5}) {
    FiniteRep triv = FiniteRep::make(p, 0, 0);
    const Fq& f = triv.field();

    MonoidAlgebraElement s11 =
        satake_transform(build_kernel(triv, triv, {1, 1}), gl2);
    CHECK(s11 == MonoidAlgebraElement::tau(gl2, f, {1, 1}));

    MonoidAlgebraElement s10 =
        satake_transform(build_kernel(triv, triv, {1, 0}), gl2);
    CHECK(s10 == MonoidAlgebraElement::tau(gl2, f, {1, 0}));

    HeckeKernel zero{triv, triv, {}};
    CHECK(satake_transform(zero, gl2).is_zero());

    // Multiplicativity on sampled pairs.
    HeckeKernel t10 = build_kernel(triv, triv, {1, 0});
    HeckeKernel t11 = build_kernel(triv, triv, {1, 1});
    for (const auto& [a, b] :
         std::vector<std::pair<HeckeKernel, HeckeKernel>>{{t10, t10},
                                                          {t10, t11},
                                                          {t11, t11}}) {
      MonoidAlgebraElement lhs = satake_transform(convolve(a, b), gl2);
      MonoidAlgebraElement rhs =
          satake_transform(a, gl2) * satake_transform(b, gl2);
      CHECK(lhs == rhs);
    }

  }
}

TEST_CASE("central determinant twists leave normalized transforms unchanged") {
  // The twisting character evaluates to 1 on every diagonal p-power with the
  // same total valuation as the support, and the residual determinant factors
  // of a Cartan factorization multiply to 1, so the normalized kernels give
  // identical transforms term by term.
  auto gl2 = builtin_root_datum("GL2");
  Int p = 5;
  for (Int m : {1, 2}) {
    for (int r : {0, 2}) {
      FiniteRep plain = FiniteRep::make(p, r, 0);
      FiniteRep twisted = FiniteRep::make(p, r, m);
      for (const IntVec& la : {IntVec{1, 0}, IntVec{1, 1}, IntVec{2, 0}}) {
        MonoidAlgebraElement s0 =
            satake_transform(build_kernel(plain, plain, la), gl2);
        MonoidAlgebraElement s1 =
            satake_transform(build_kernel(twisted, twisted, la), gl2);
        CHECK(s0 == s1);
      }
    }
  }
}

TEST_CASE("apply to induction matches the coset-sum formula") {
  for (Int p : {2, 3}) {
    FiniteRep triv = FiniteRep::make(p, 0, 0);
    FiniteRep big = FiniteRep::make(p, static_cast<int>(p - 1), 0);
    const Fq& f = triv.field();
    IntVec la{1, 0};
    PAdicMatrix t = PAdicMatrix::diagonal_power(p, 1, 0);
    PAdicMatrix tinv = t.inverse();
    PAdicMatrix s = PAdicMatrix::weyl_flip(p);

    // For the trivial source the stabilizer of the lowest weight is all of W:
    // phi * [1, v] = sum over w in W/W_lambda and a in the unipotent cosets.
    HeckeKernel phi21 = build_kernel(triv, big, la);
    std::vector<FqElem> v{f.one()};
    InductionElement lhs = apply_to_induction(phi21, InductionElement::unit(triv, v));

    std::vector<FqElem> vbig(big.dim(), f.zero());
    vbig[big.lowest_index()] = f.one();
    InductionElement rhs{big, {}};
    for (Int c = 0; c < p; ++c)  // w = e: a runs over N(O)/t^-1 N(O) t
      rhs.add_term(PAdicMatrix::lower_unipotent(p, Rat(c)) * tinv, vbig);
    rhs.add_term(s * tinv, vbig);  // w = s: a trivial
    CHECK(lhs == rhs);

    // For the big source the stabilizer is trivial: only w = e survives.
    HeckeKernel phi12 = build_kernel(big, triv, la);
    InductionElement lhs2 =
        apply_to_induction(phi12, InductionElement::unit(big, vbig));
    InductionElement rhs2{triv, {}};
    for (Int c = 0; c < p; ++c)
      rhs2.add_term(PAdicMatrix::lower_unipotent(p, Rat(c)) * tinv, v);
    CHECK(lhs2 == rhs2);
  }
}

TEST_CASE("changing weight identity") {
  auto gl2 = builtin_root_datum("GL2");
  for (Int p : {2, 3}) {
    ChangingWeightReport rep = verify_changing_weight_identity(p, 0, gl2);
    CHECK(rep.pass);
    CHECK_FALSE(rep.constant.is_zero());
    CHECK(rep.transform.support_size() == 2);
  }
  ChangingWeightReport twisted = verify_changing_weight_identity(5, 2, gl2);
  CHECK(twisted.pass);
}

TEST_CASE("cross-kernel composition is the normalized spherical kernel") {
  // The composition of the two normalized cross kernels equals, as a kernel,
  // the normalized endomorphism kernel on K lambda(pi)^2 K; the two-term
  // transform shape follows from this identity plus triangularity.
  for (Int p : {2, 3, 5}) {
    for (Int m : {0, 1}) {
      FiniteRep small = FiniteRep::make(p, 0, m);
      FiniteRep big = FiniteRep::make(p, static_cast<int>(p - 1), m);
      HeckeKernel phi21 = build_kernel(small, big, {1, 0});
      HeckeKernel phi12 = build_kernel(big, small, {1, 0});
      HeckeKernel conv = convolve(phi12, phi21);
      HeckeKernel square = build_kernel(small, small, {2, 0});
      CHECK(conv.values == square.values);
    }
  }
}
