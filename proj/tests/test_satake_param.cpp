#include <doctest.h>

#include "hecke/builtin_data.hpp"
#include "hecke/characters.hpp"
#include "hecke/errors.hpp"
#include "hecke/satake_param.hpp"

using namespace hecke;

namespace {

std::vector<IntVec> dominant_box(const RootDatum& rd, int bound) {
  std::vector<IntVec> out;
  IntVec v(rd.rank(), -bound);
  while (true) {
    if (rd.dominant_cocharacter(v)) out.push_back(v);
    int i = rd.rank() - 1;
    while (i >= 0 && v[i] == bound) {
      v[i] = -bound;
      --i;
    }
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

// Every parameter over the datum with values drawn from the units of f.
std::vector<SatakeParameter> all_parameters(RootDatumPtr rd, const Fq& f) {
  std::vector<SatakeParameter> out;
  auto units = f.nonzero_elements();
  for (unsigned mask = 0; mask < (1u << rd->num_simple()); ++mask) {
    ParabolicSubset levi = ParabolicSubset::from_mask(mask, rd->num_simple());
    size_t dim = orthogonal_sublattice(*rd, levi).size();
    std::vector<size_t> digits(dim, 0);
    while (true) {
      std::vector<FqElem> values;
      for (size_t i = 0; i < dim; ++i) values.push_back(units[digits[i]]);
      out.push_back(make_satake_parameter(rd, f, levi, values));
      size_t i = 0;
      while (i < dim && digits[i] + 1 == units.size()) digits[i++] = 0;
      if (i == dim) break;
      ++digits[i];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("monoid algebra arithmetic") {
  auto gl2 = builtin_root_datum("GL2");
  const Fq& f3 = Fq::get(3, 1);
  auto tau = [&](IntVec la) { return MonoidAlgebraElement::tau(gl2, f3, la); };
  CHECK(tau({2, 1}) * tau({1, 0}) == tau({3, 1}));
  MonoidAlgebraElement s = tau({2, 1}) + tau({1, 1});
  CHECK(s * MonoidAlgebraElement::one(gl2, f3) == s);
  CHECK_THROWS_AS(tau({0, 1}), Error);  // not dominant

  // Frobenius in characteristic 2: squaring kills the cross terms.
  const Fq& f2 = Fq::get(2, 1);
  auto tau2 = [&](IntVec la) { return MonoidAlgebraElement::tau(gl2, f2, la); };
  MonoidAlgebraElement t = tau2({1, 0}) + tau2({1, 1});
  CHECK(t * t == tau2({2, 0}) + tau2({2, 2}));
}

TEST_CASE("evaluation rule") {
  auto gl2 = builtin_root_datum("GL2");
  const Fq& f5 = Fq::get(5, 1);
  FqElem c = f5.from_int(3);
  SatakeParameter chi = make_satake_parameter(gl2, f5, ParabolicSubset({0}), {c});
  CHECK(chi.evaluate({1, 1}) == c);
  CHECK(chi.evaluate({1, 0}).is_zero());
  CHECK_THROWS_AS(chi.evaluate({0, 1}), Error);

  // Torus-type parameter evaluates multiplicatively everywhere, matching the
  // uniformizer values of the corresponding torus character.
  FqElem g = f5.generator();
  SatakeParameter tor =
      make_satake_parameter(gl2, f5, ParabolicSubset{}, {g, c});
  TorusCharacterDatum nu = TorusCharacterDatum::make(
      5, f5, identity_matrix(2),
      {SmoothCharacter::make(5, 0, g), SmoothCharacter::make(5, 0, c)});
  for (const auto& la : dominant_box(*gl2, 3)) {
    CHECK(tor.evaluate(la) == g.pow(la[0]) * c.pow(la[1]));
    CHECK(tor.evaluate(la) == nu.compose_with_cocharacter(la).pi_value);
  }

  // Linear extension to algebra elements.
  MonoidAlgebraElement elt = MonoidAlgebraElement::tau(gl2, f5, {2, 0}) +
                             MonoidAlgebraElement::tau(gl2, f5, {1, 1}).scaled(c);
  CHECK(tor.evaluate_element(elt) ==
        tor.evaluate({2, 0}) + c * tor.evaluate({1, 1}));

  CHECK_THROWS_AS(make_satake_parameter(gl2, f5, ParabolicSubset({0}), {f5.zero()}),
                  Error);
}

TEST_CASE("algebra homomorphism consistency") {
  auto gl2 = builtin_root_datum("GL2");
  const Fq& f3 = Fq::get(3, 1);
  for (const auto& chi : all_parameters(gl2, f3))
    CHECK(is_algebra_homomorphism_consistent(chi, 4));
  SatakeParameter full = make_satake_parameter(
      gl2, f3, ParabolicSubset({0}), {f3.one()});
  CHECK(is_algebra_homomorphism_consistent(full, 4));
}

TEST_CASE("tensor parameters") {
  auto gl2 = builtin_root_datum("GL2");
  const Fq& f5 = Fq::get(5, 1);
  FqElem g = f5.generator();
  SatakeParameter torus =
      make_satake_parameter(gl2, f5, ParabolicSubset{}, {g, g * g});
  SatakeParameter central =
      make_satake_parameter(gl2, f5, ParabolicSubset({0}), {f5.from_int(2)});

  // The product evaluation vanishes off the central lattice, so the Levi of
  // the tensor is the union of the Levis.
  SatakeParameter t = tensor(torus, central);
  CHECK(t.levi == ParabolicSubset({0}));
  for (const auto& la : dominant_box(*gl2, 4))
    CHECK(t.evaluate(la) == torus.evaluate(la) * central.evaluate(la));

  // Tensoring with the trivial central character changes nothing off-center.
  SatakeParameter triv_central =
      make_satake_parameter(gl2, f5, ParabolicSubset({0}), {f5.one()});
  SatakeParameter u = tensor(central, triv_central);
  CHECK(u == central);

  // Two torus parameters multiply pointwise.
  SatakeParameter torus2 =
      make_satake_parameter(gl2, f5, ParabolicSubset{}, {g * g, g});
  SatakeParameter w = tensor(torus, torus2);
  CHECK(w.levi == ParabolicSubset{});
  for (const auto& la : dominant_box(*gl2, 4))
    CHECK(w.evaluate(la) == torus.evaluate(la) * torus2.evaluate(la));
}

TEST_CASE("parameterization from an oracle") {
  auto gl2 = builtin_root_datum("GL2");
  const Fq& f3 = Fq::get(3, 1);
  // Constant oracle: torus type, trivial character.
  SatakeParameter triv = parameterize_from_oracle(
      gl2, f3, [&f3](const IntVec&) { return f3.one(); });
  CHECK(triv.levi == ParabolicSubset{});
  for (const auto& v : triv.values) CHECK(v.is_one());

  // Oracle vanishing off the center with value c at (1,1).
  FqElem c = f3.from_int(2);
  SatakeParameter sing = parameterize_from_oracle(
      gl2, f3, [&](const IntVec& la) {
        if (la[0] != la[1]) return f3.zero();
        return c.pow(la[0]);
      });
  CHECK(sing.levi == ParabolicSubset({0}));
  CHECK(sing.chi({1, 1}) == c);

  // Inconsistent oracle is rejected.
  CHECK_THROWS_AS(parameterize_from_oracle(
                      gl2, f3,
                      [&](const IntVec& la) {
                        return la[0] == 2 ? f3.from_int(2) : f3.one();
                      }),
                  Error);
}

TEST_CASE("round trip over all small parameters") {
  for (const auto& name : {"SL2", "GL2", "PGL2", "A1xA1", "SL3"}) {
    auto rd = builtin_root_datum(name);
    for (Int q : {3, 4}) {
      const Fq& f = q == 4 ? Fq::get(2, 2) : Fq::get(q, 1);
      for (const auto& chi : all_parameters(rd, f)) {
        SatakeParameter back = parameterize_from_oracle(
            rd, f, [&chi](const IntVec& la) { return chi.evaluate(la); });
        CHECK(back == chi);
      }
    }
  }
}

TEST_CASE("probe vanishing characterizes the Levi subset") {
  auto sl3 = builtin_root_datum("SL3");
  const Fq& f5 = Fq::get(5, 1);
  for (const auto& chi : all_parameters(sl3, f5)) {
    for (int a = 0; a < sl3->num_simple(); ++a) {
      IntVec probe = probe_cocharacter(*sl3, a);
      CHECK(chi.evaluate(probe).is_zero() == chi.levi.contains(a));
    }
  }
}

TEST_CASE("restriction to sublattices") {
  auto gl2 = builtin_root_datum("GL2");
  const Fq& f5 = Fq::get(5, 1);
  FqElem g = f5.generator();
  SatakeParameter torus = make_satake_parameter(gl2, f5, ParabolicSubset{}, {g, g.pow(3)});

  // Restrict to Z * coroot: an SL2-shaped datum; the character restricts to
  // its value on the coroot.
  RestrictedParameter res = restrict_to_sublattice(torus, IntMat{{1, -1}});
  CHECK(res.datum->rank() == 1);
  CHECK(res.datum->simple_root(0) == IntVec{2});
  CHECK(res.datum->simple_coroot(0) == IntVec{1});
  CHECK(res.param.levi == ParabolicSubset{});
  CHECK(res.param.chi({1}) == torus.chi({1, -1}));

  // The full lattice restricts to the same parameter.
  RestrictedParameter full = restrict_to_sublattice(torus, identity_matrix(2));
  CHECK(full.param.levi == torus.levi);
  CHECK(full.param.values == torus.values);

  // A central parameter stays central.
  SatakeParameter central =
      make_satake_parameter(gl2, f5, ParabolicSubset({0}), {g});
  RestrictedParameter resc = restrict_to_sublattice(central, identity_matrix(2));
  CHECK(resc.param.levi == ParabolicSubset({0}));

  CHECK_THROWS_AS(restrict_to_sublattice(torus, IntMat{{1, 1}}), Error);
}

TEST_CASE("irreducibility of tau_coroot - 1") {
  CHECK(tau_coroot_minus_one_irreducible(*builtin_root_datum("GL2"), 0));
  CHECK(tau_coroot_minus_one_irreducible(*builtin_root_datum("SL2"), 0));
  CHECK_FALSE(tau_coroot_minus_one_irreducible(*builtin_root_datum("PGL2"), 0));

  const Fq& f3 = Fq::get(3, 1);
  // PGL2: t^2 - 1 factors as (t - 1)(t + 1).
  auto pgl2 = builtin_root_datum("PGL2");
  auto fac = brute_force_laurent_factor_search(
      1, tau_coroot_minus_one(*pgl2, 0, f3), 2, f3);
  REQUIRE(fac.has_value());
  CHECK(fac->left.size() == 2);
  CHECK(fac->right.size() == 2);

  // GL2: no factorization of tau_coroot - 1.
  auto gl2 = builtin_root_datum("GL2");
  CHECK_FALSE(brute_force_laurent_factor_search(
                  2, tau_coroot_minus_one(*gl2, 0, f3), 2, f3)
                  .has_value());

  // Degree bound: t - 1 admits no nontrivial factorization.
  LaurentElement linear;
  linear[IntVec{1}] = f3.one();
  linear[IntVec{0}] = -f3.one();
  CHECK_FALSE(brute_force_laurent_factor_search(1, linear, 2, f3).has_value());

  // Oversized searches are refused rather than silently truncated.
  const Fq& f5 = Fq::get(5, 1);
  LaurentElement wide;
  wide[IntVec{0, 0}] = f5.one();
  wide[IntVec{3, 3}] = f5.one();
  CHECK_THROWS_AS(brute_force_laurent_factor_search(2, wide, 3, f5), Error);

  // Agreement between the criterion and the search on rank <= 2 data.
  for (const auto& name : {"SL2", "GL2", "PGL2", "A1xA1", "SL3", "B2", "SO5", "G2"}) {
    auto rd = builtin_root_datum(name);
    for (int a = 0; a < rd->num_simple(); ++a) {
      bool irr = tau_coroot_minus_one_irreducible(*rd, a);
      auto found = brute_force_laurent_factor_search(
          rd->rank(), tau_coroot_minus_one(*rd, a, f3), 2, f3);
      CHECK(irr == !found.has_value());
      if (found) {
        // The factors really multiply back to the element.
        LaurentElement f = tau_coroot_minus_one(*rd, a, f3);
        IntVec mins(rd->rank(), 0);
        for (const auto& [k, v] : f)
          for (int i = 0; i < rd->rank(); ++i) mins[i] = std::min(mins[i], k[i]);
        LaurentElement prod;
        for (const auto& [k1, c1] : found->left)
          for (const auto& [k2, c2] : found->right) {
            IntVec s = vec_add(k1, k2);
            auto it = prod.find(s);
            FqElem cur = it == prod.end() ? f3.zero() : it->second;
            cur = cur + c1 * c2;
            if (cur.is_zero())
              prod.erase(s);
            else
              prod[s] = cur;
          }
        LaurentElement shifted;
        for (const auto& [k, v] : f) shifted[vec_sub(k, mins)] = v;
        CHECK(prod == shifted);
      }
    }
  }
}
