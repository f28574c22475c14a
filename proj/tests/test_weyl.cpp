#include <doctest.h>

#include <algorithm>
#include <set>

#include "hecke/builtin_data.hpp"
#include "hecke/errors.hpp"
#include "hecke/weyl.hpp"

using namespace hecke;

namespace {

// Brute-force subword oracle: some subsequence of v's stored word multiplies
// to w and has the right length.
bool subword_oracle(const WeylGroup& wg, int w, int v) {
  const auto& word = wg.word(v);
  int n = static_cast<int>(word.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int prod = wg.identity();
    int letters = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        prod = wg.multiply(prod, wg.simple_reflection(word[i]));
        ++letters;
      }
    if (prod == w && letters == wg.length(w)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(WeylGroup::generate(builtin_root_datum("SL3")).size() == 6);
  CHECK(WeylGroup::generate(builtin_root_datum("G2")).size() == 12);
  CHECK(WeylGroup::generate(builtin_root_datum("A1xA1")).size() == 4);
  CHECK(WeylGroup::generate(builtin_root_datum("B2")).size() == 8);
  CHECK(WeylGroup::generate(builtin_root_datum("SO5")).size() == 8);
  CHECK(WeylGroup::generate(builtin_root_datum("GL4")).size() == 24);
  CHECK(WeylGroup::generate(builtin_root_datum("GL2")).size() == 2);
  CHECK_THROWS_AS(WeylGroup::generate(builtin_root_datum("GL4"), 10), Error);
}

TEST_CASE("simple reflections have order two and the stated action") {
  for (const auto& name : builtin_names()) {
    auto rd = builtin_root_datum(name);
    WeylGroup w = WeylGroup::generate(rd);
    for (int i = 0; i < rd->num_simple(); ++i) {
      int s = w.simple_reflection(i);
      CHECK(w.multiply(s, s) == w.identity());
      IntVec la{rd->simple_coroot(i)};
      // s_alpha(coroot_alpha) = -coroot_alpha.
      CHECK(w.apply_to_cochar(s, la) == vec_scale(-1, la));
    }
  }
}

TEST_CASE("length equals inversion count") {
  for (const auto& name : builtin_names()) {
    WeylGroup w = WeylGroup::generate(builtin_root_datum(name));
    for (int e = 0; e < w.size(); ++e) CHECK(w.length(e) == w.inversions(e));
  }
}

TEST_CASE("bruhat order examples and oracle") {
  auto sl3 = builtin_root_datum("SL3");
  WeylGroup w = WeylGroup::generate(sl3);
  int s1 = w.simple_reflection(0), s2 = w.simple_reflection(1);
  CHECK(w.bruhat_leq(w.identity(), w.multiply(s1, s2)));
  CHECK_FALSE(w.bruhat_leq(s1, s2));
  int s12 = w.multiply(s1, s2);
  int s121 = w.multiply(s12, s1);
  CHECK(w.bruhat_leq(s12, s121));

  for (const auto& name : {"SL3", "B2", "G2", "A1xA1"}) {
    WeylGroup wg = WeylGroup::generate(builtin_root_datum(name));
    for (int a = 0; a < wg.size(); ++a)
      for (int b = 0; b < wg.size(); ++b)
        CHECK(wg.bruhat_leq(a, b) == subword_oracle(wg, a, b));
  }

  // On rank-one products the order is containment of inversion sets.
  for (const auto& name : {"SL2", "A1xA1", "GL2xGL2"}) {
    auto rd = builtin_root_datum(name);
    WeylGroup wg = WeylGroup::generate(rd);
    auto inversion_set = [&](int e) {
      std::set<IntVec> out;
      for (const auto& root : wg.positive_roots())
        if (!wg.weight_vector_positive(wg.apply_to_weight(e, root)))
          out.insert(root);
      return out;
    };
    for (int a = 0; a < wg.size(); ++a)
      for (int b = 0; b < wg.size(); ++b) {
        auto ia = inversion_set(a), ib = inversion_set(b);
        bool contained =
            std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
        CHECK(wg.bruhat_leq(a, b) == contained);
      }
  }
}

TEST_CASE("minimal coset representatives") {
  auto sl2 = builtin_root_datum("SL2");
  WeylGroup w2 = WeylGroup::generate(sl2);
  CHECK(w2.min_coset_reps(ParabolicSubset({0})) == std::vector<int>{w2.identity()});

  auto sl3 = builtin_root_datum("SL3");
  WeylGroup w3 = WeylGroup::generate(sl3);
  CHECK(w3.min_coset_reps(ParabolicSubset({0})).size() == 3);
  CHECK(w3.min_coset_reps(ParabolicSubset{}).size() == 6);

  for (const auto& name : builtin_names()) {
    auto rd = builtin_root_datum(name);
    WeylGroup w = WeylGroup::generate(rd);
    for (unsigned mask = 0; mask < (1u << rd->num_simple()); ++mask) {
      ParabolicSubset theta = ParabolicSubset::from_mask(mask, rd->num_simple());
      size_t reps = w.min_coset_reps(theta).size();
      size_t sub = w.parabolic_subgroup(theta).size();
      CHECK(reps * sub == static_cast<size_t>(w.size()));
    }
  }
}

TEST_CASE("coset factorization") {
  auto sl3 = builtin_root_datum("SL3");
  WeylGroup w = WeylGroup::generate(sl3);
  ParabolicSubset theta({0});
  int s1 = w.simple_reflection(0), s2 = w.simple_reflection(1);
  auto [a0, a1] = w.coset_factorize(s1, theta);
  CHECK(a0 == w.identity());
  CHECK(a1 == s1);
  auto [b0, b1] = w.coset_factorize(w.multiply(s2, s1), theta);
  CHECK(b0 == s2);
  CHECK(b1 == s1);
  auto [c0, c1] = w.coset_factorize(w.identity(), theta);
  CHECK(c0 == w.identity());
  CHECK(c1 == w.identity());

  // Round trip with additive lengths, and uniqueness by enumeration.
  for (const auto& name : {"B2", "G2", "GL3"}) {
    auto rd = builtin_root_datum(name);
    WeylGroup wg = WeylGroup::generate(rd);
    for (unsigned mask = 0; mask < (1u << rd->num_simple()); ++mask) {
      ParabolicSubset th = ParabolicSubset::from_mask(mask, rd->num_simple());
      auto reps = wg.min_coset_reps(th);
      auto sub = wg.parabolic_subgroup(th);
      for (int e = 0; e < wg.size(); ++e) {
        auto [w0, w1] = wg.coset_factorize(e, th);
        CHECK(wg.multiply(w0, w1) == e);
        CHECK(wg.length(w0) + wg.length(w1) == wg.length(e));
        int count = 0;
        for (int r : reps)
          for (int s : sub)
            if (wg.multiply(r, s) == e &&
                wg.length(r) + wg.length(s) == wg.length(e))
              ++count;
        CHECK(count == 1);
      }
    }
  }
}

TEST_CASE("stabilizer subsets") {
  auto gl2 = builtin_root_datum("GL2");
  CHECK(stabilizer_subset(*gl2, {3, 3}) == ParabolicSubset({0}));
  CHECK(stabilizer_subset(*gl2, {0, -3}) == ParabolicSubset{});
  auto gl3 = builtin_root_datum("GL3");
  CHECK(stabilizer_subset(*gl3, {0, 0, -5}) == ParabolicSubset({0}));
  CHECK_THROWS_AS(stabilizer_subset(*gl3, {1, 0, 2}), Error);

  // The reflections of the subset generate the full stabilizer.
  for (const auto& name : {"SL3", "B2", "GL3"}) {
    auto rd = builtin_root_datum(name);
    WeylGroup w = WeylGroup::generate(rd);
    std::vector<IntVec> weights;
    IntVec v(rd->rank(), 0);
    for (Int a = -2; a <= 2; ++a)
      for (Int b = 0; b <= 2; ++b) {
        if (rd->rank() == 2) weights.push_back({a, a + b});
      }
    if (rd->rank() == 3)
      weights = {{0, 0, 0}, {1, 1, 1}, {2, 1, 0}, {1, 1, 0}, {2, 2, 1}};
    for (const auto& nu : weights) {
      if (!rd->dominant_weight(nu) && !rd->antidominant_weight(nu)) continue;
      ParabolicSubset pi_nu = stabilizer_subset(*rd, nu);
      std::set<int> generated;
      for (int e : w.parabolic_subgroup(pi_nu)) generated.insert(e);
      std::set<int> stab;
      for (int e = 0; e < w.size(); ++e)
        if (w.apply_to_weight(e, nu) == nu) stab.insert(e);
      CHECK(generated == stab);
    }
  }
}

TEST_CASE("coset bruhat lemma verifier") {
  auto sl3 = builtin_root_datum("SL3");
  WeylGroup w = WeylGroup::generate(sl3);
  auto rep = w.verify_coset_bruhat(ParabolicSubset({0}));
  CHECK(rep.pass());
  CHECK(rep.triples == 18);

  for (const auto& name : {"B2", "G2"}) {
    auto rd = builtin_root_datum(name);
    WeylGroup wg = WeylGroup::generate(rd);
    for (unsigned mask = 0; mask < (1u << rd->num_simple()); ++mask)
      CHECK(wg.verify_coset_bruhat(ParabolicSubset::from_mask(mask, rd->num_simple()))
                .pass());
  }
}
