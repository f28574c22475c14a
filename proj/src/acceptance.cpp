#include "hecke/acceptance.hpp"

#include <chrono>
#include <future>
#include <set>
#include <sstream>

#include "hecke/builtin_data.hpp"
#include "hecke/errors.hpp"
#include "hecke/hecke_gl2.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool pass = true;
  int failures = 0;
  std::ostringstream detail;
  void fail(const std::string& msg) {
    pass = false;
    if (++failures > 20) return;  // keep reports readable
    if (detail.tellp() > 0) detail << "; ";
    detail << msg;
  }
};

std::vector<std::string> rank_le2_names() {
  return {"SL2", "GL2", "PGL2", "A1xA1", "SL3", "B2", "SO5", "G2"};
}

// Every (levi, values) parameter over the datum with values in F_q^x.
std::vector<SatakeParameter> all_parameters(RootDatumPtr rd, const Fq& f) {
  std::vector<SatakeParameter> out;
  int k = rd->num_simple();
  auto units = f.nonzero_elements();
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    ParabolicSubset levi = ParabolicSubset::from_mask(mask, k);
    IntMat lattice = orthogonal_sublattice(*rd, levi);
    size_t dim = lattice.size();
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

CriterionResult criterion_changing_weight(int jobs) {
  CriterionResult r{1, "changing-weight convolution identity", false, 0, ""};
  Check chk;
  RootDatumPtr gl2 = builtin_root_datum("GL2");
  std::vector<std::pair<Int, Int>> cases;
  for (Int p : {2, 3, 5})
    for (Int m : {0, 1}) cases.emplace_back(p, m);
  auto run_case = [gl2](std::pair<Int, Int> pm) {
    return verify_changing_weight_identity(pm.first, pm.second, gl2);
  };
  std::vector<ChangingWeightReport> reports;
  if (jobs > 1) {
    std::vector<std::future<ChangingWeightReport>> futs;
    for (auto& pm : cases)
      futs.push_back(std::async(std::launch::async, run_case, pm));
    for (auto& fu : futs) reports.push_back(fu.get());
  } else {
    for (auto& pm : cases) reports.push_back(run_case(pm));
  }
  for (const auto& rep : reports) {
    if (!rep.pass || rep.constant.is_zero())
      chk.fail("p=" + std::to_string(rep.p) + " m=" + std::to_string(rep.m) +
               ": " + rep.detail);
    else
      chk.detail << "p=" << rep.p << ",m=" << rep.m << ":c=" << rep.constant.str()
                 << " ";
  }
  r.pass = chk.pass;
  r.detail = chk.detail.str();
  return r;
}

CriterionResult criterion_satake_leading_term() {
  CriterionResult r{2, "Satake leading-term shape", false, 0, ""};
  Check chk;
  RootDatumPtr gl2 = builtin_root_datum("GL2");
  for (Int p : {2, 3, 5}) {
    FiniteRep triv = FiniteRep::make(p, 0, 0);
    for (const IntVec& la : {IntVec{1, 0}, IntVec{1, 1}, IntVec{2, 0}}) {
      HeckeKernel t = build_kernel(triv, triv, la);
      MonoidAlgebraElement s = satake_transform(t, gl2);
      if (!s.coeff(la).is_one())
        chk.fail("p=" + std::to_string(p) + ": leading coefficient at " +
                 vec_str(la) + " is " + s.coeff(la).str());
      for (const auto& [mu, c] : s.terms())
        if (!dominance_leq(*gl2, mu, la))
          chk.fail("p=" + std::to_string(p) + ": term " + vec_str(mu) +
                   " outside the cone below " + vec_str(la));
    }
  }
  r.pass = chk.pass;
  r.detail = chk.detail.str();
  return r;
}

CriterionResult criterion_cone_lemmas() {
  CriterionResult r{3, "cone lemmas on the shipped catalog", false, 0, ""};
  Check chk;
  long long cases = 0;
  for (const auto& name : builtin_names()) {
    RootDatumPtr rd = builtin_root_datum(name);
    auto a = verify_cone_lemmas(*rd, ConeLemmaKind::DominanceSquare, 6);
    auto b = verify_cone_lemmas(*rd, ConeLemmaKind::OrthogonalCone, 6);
    cases += a.cases + b.cases;
    if (!a.pass())
      chk.fail(name + ": dominance-square found " +
               std::to_string(a.counterexamples.size()) + " counterexamples");
    if (!b.pass())
      chk.fail(name + ": orthogonal-cone found " +
               std::to_string(b.counterexamples.size()) + " counterexamples");
  }
  chk.detail << cases << " cases";
  r.pass = chk.pass;
  r.detail = chk.detail.str();
  return r;
}

CriterionResult criterion_coset_bruhat() {
  CriterionResult r{4, "Bruhat coset lemma on the shipped catalog", false, 0, ""};
  Check chk;
  long long triples = 0;
  for (const auto& name : builtin_names()) {
    RootDatumPtr rd = builtin_root_datum(name);
    WeylGroup w = WeylGroup::generate(rd);
    int k = rd->num_simple();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      auto rep = w.verify_coset_bruhat(ParabolicSubset::from_mask(mask, k));
      triples += rep.triples;
      if (!rep.pass())
        chk.fail(name + " theta=" + ParabolicSubset::from_mask(mask, k).str());
    }
  }
  chk.detail << triples << " triples";
  r.pass = chk.pass;
  r.detail = chk.detail.str();
  return r;
}

CriterionResult criterion_round_trip() {
  CriterionResult r{5, "Satake parameter round-trip", false, 0, ""};
  Check chk;
  long long count = 0;
  for (const auto& name : rank_le2_names()) {
    RootDatumPtr rd = builtin_root_datum(name);
    for (Int q : {2, 3, 4, 5}) {
      const Fq& f = q == 4 ? Fq::get(2, 2) : Fq::get(q, 1);
      for (const auto& chi : all_parameters(rd, f)) {
        ++count;
        auto oracle = [&chi](const IntVec& la) { return chi.evaluate(la); };
        SatakeParameter back = parameterize_from_oracle(rd, f, oracle);
        if (!(back == chi))
          chk.fail(name + " q=" + std::to_string(q) + ": round trip failed at levi " +
                   chi.levi.str());
      }
    }
  }
  chk.detail << count << " parameters";
  r.pass = chk.pass;
  r.detail = chk.detail.str();
  return r;
}

CriterionResult criterion_tensor_law() {
  CriterionResult r{6, "tensor parameter law", false, 0, ""};
  Check chk;
  long long pairs = 0;
  for (const auto& name : rank_le2_names()) {
    RootDatumPtr rd = builtin_root_datum(name);
    auto box = dominant_box(*rd, 4);
    for (Int q : {2, 3, 4, 5}) {
      const Fq& f = q == 4 ? Fq::get(2, 2) : Fq::get(q, 1);
      auto params = all_parameters(rd, f);
      for (const auto& c1 : params)
        for (const auto& c2 : params) {
          ++pairs;
          SatakeParameter t = tensor(c1, c2);
          if (!(t.levi == c1.levi.set_union(c2.levi))) {
            chk.fail(name + ": tensor Levi is not the union at " + c1.levi.str() +
                     " x " + c2.levi.str());
            continue;
          }
          for (const auto& la : box)
            if (t.evaluate(la) != c1.evaluate(la) * c2.evaluate(la)) {
              chk.fail(name + ": tensor evaluation mismatch at " + vec_str(la));
              break;
            }
        }
    }
  }
  chk.detail << pairs << " pairs";
  r.pass = chk.pass;
  r.detail = chk.detail.str();
  return r;
}

CriterionResult criterion_irreducibility() {
  CriterionResult r{7, "tau_coroot - 1 irreducibility criterion", false, 0, ""};
  Check chk;
  const Fq& f3 = Fq::get(3, 1);
  for (const auto& name : rank_le2_names()) {
    RootDatumPtr rd = builtin_root_datum(name);
    for (int a = 0; a < rd->num_simple(); ++a) {
      bool criterion = tau_coroot_minus_one_irreducible(*rd, a);
      auto factorization = brute_force_laurent_factor_search(
          rd->rank(), tau_coroot_minus_one(*rd, a, f3), 2, f3);
      if (criterion == factorization.has_value())
        chk.fail(name + " alpha=" + std::to_string(a) +
                 ": criterion and factor search disagree");
    }
  }
  RootDatumPtr sl2 = builtin_root_datum("SL2");
  RootDatumPtr gl2 = builtin_root_datum("GL2");
  RootDatumPtr pgl2 = builtin_root_datum("PGL2");
  if (!tau_coroot_minus_one_irreducible(*sl2, 0)) chk.fail("SL2 should be irreducible");
  if (!tau_coroot_minus_one_irreducible(*gl2, 0)) chk.fail("GL2 should be irreducible");
  if (tau_coroot_minus_one_irreducible(*pgl2, 0)) chk.fail("PGL2 should factor");
  r.pass = chk.pass;
  r.detail = chk.detail.str();
  return r;
}

CriterionResult criterion_principal_series() {
  CriterionResult r{8, "principal series length law", false, 0, ""};
  Check chk;
  long long checked = 0;
  for (const auto& name : {std::string("GL2"), std::string("GL3")}) {
    RootDatumPtr rd = builtin_root_datum(name);
    for (Int q : {3, 5}) {
      const Fq& f = Fq::get(q, 1);
      auto units = f.nonzero_elements();
      Int em = q - 1;
      // All characters of the full torus: per axis an exponent and a value.
      int n = rd->rank();
      std::vector<Int> exps(n, 0);
      std::vector<size_t> vals(n, 0);
      while (true) {
        std::vector<SmoothCharacter> chars;
        for (int i = 0; i < n; ++i)
          chars.push_back(SmoothCharacter::make(q, exps[i], units[vals[i]]));
        TorusCharacterDatum nu =
            TorusCharacterDatum::make(q, f, identity_matrix(n), chars);
        PrincipalSeriesReport rep = principal_series_analyze(rd, nu);
        ++checked;
        int expected_c = 0;
        for (int a = 0; a < rd->num_simple(); ++a)
          if (nu.compose_with_cocharacter(rd->simple_coroot(a)).is_trivial())
            ++expected_c;
        if (rep.trivial_coroot_count != expected_c ||
            rep.length != (1ll << expected_c) ||
            static_cast<long long>(rep.factors.size()) != rep.length)
          chk.fail(name + " q=" + std::to_string(q) + ": length law failed");
        std::set<std::string> keys;
        for (const auto& fac : rep.factors)
          keys.insert(fac.descriptor.identity_key());
        if (static_cast<long long>(keys.size()) != rep.length)
          chk.fail(name + " q=" + std::to_string(q) + ": factors not distinct");
        // Advance the odometer over (exponent, value) pairs.
        int i = 0;
        for (; i < n; ++i) {
          if (vals[i] + 1 < units.size()) {
            ++vals[i];
            break;
          }
          vals[i] = 0;
          if (exps[i] + 1 < em) {
            ++exps[i];
            break;
          }
          exps[i] = 0;
        }
        if (i == n) break;
      }
    }
  }
  chk.detail << checked << " characters";
  r.pass = chk.pass;
  r.detail = chk.detail.str();
  return r;
}

CriterionResult criterion_classification_enumeration() {
  CriterionResult r{9, "classification enumeration fixture", false, 0, ""};
  Check chk;
  RootDatumPtr gl3 = builtin_root_datum("GL3");
  auto data = gl3_fixture(gl3);
  EnumerationReport rep = enumerate_parameters(gl3, data);
  if (static_cast<long long>(rep.entries.size()) != rep.expected)
    chk.fail("count " + std::to_string(rep.entries.size()) + " != expected " +
             std::to_string(rep.expected));
  if (rep.expected != 11)
    chk.fail("fixture should predict 11 parameters, got " +
             std::to_string(rep.expected));
  if (!rep.injective) chk.fail("descriptors collide");
  chk.detail << rep.entries.size() << " parameters";
  r.pass = chk.pass;
  r.detail = chk.detail.str();
  return r;
}

CriterionResult criterion_quotient_datum() {
  CriterionResult r{10, "quotient root-datum isomorphism", false, 0, ""};
  Check chk;
  long long checked = 0;
  for (const auto& name : builtin_names()) {
    RootDatumPtr rd = builtin_root_datum(name);
    for (const auto& [p1, p2] : orthogonal_partitions(*rd)) {
      ++checked;
      if (!quotient_datum_isomorphic(*rd, p1, p2))
        chk.fail(name + ": partition " + p1.str() + " | " + p2.str());
    }
  }
  chk.detail << checked << " partitions";
  r.pass = chk.pass;
  r.detail = chk.detail.str();
  return r;
}

}  // namespace

std::vector<SupersingularDatum> gl3_fixture(RootDatumPtr gl3) {
  const Fq& f3 = Fq::get(3, 1);
  Int q = 3;
  FqElem one = f3.one();
  FqElem two = f3.from_int(2);
  auto torus = [&](std::vector<Int> exps, std::vector<FqElem> vals,
                   const ParabolicSubset& levi) {
    IntMat basis = orthogonal_sublattice(*gl3, levi);
    std::vector<SmoothCharacter> chars;
    for (size_t i = 0; i < basis.size(); ++i)
      chars.push_back(SmoothCharacter::make(q, exps[i], vals[i]));
    return TorusCharacterDatum::make(q, f3, basis, chars);
  };
  ParabolicSubset none, l0({0}), l1({1}), l01({0, 1});
  std::vector<SupersingularDatum> data;
  data.push_back(make_supersingular_datum(
      *gl3, none, torus({0, 0, 0}, {one, one, one}, none), "s1-trivial"));
  data.push_back(make_supersingular_datum(
      *gl3, none, torus({0, 0, 0}, {two, one, one}, none), "s2-pi-twist"));
  data.push_back(make_supersingular_datum(
      *gl3, none, torus({1, 0, 0}, {one, one, one}, none), "s3-unit-twist"));
  data.push_back(make_supersingular_datum(
      *gl3, l0, torus({0, 0}, {two, one}, l0), "s4-levi-01"));
  data.push_back(make_supersingular_datum(
      *gl3, l1, torus({0, 1}, {one, two}, l1), "s5-levi-12"));
  data.push_back(make_supersingular_datum(
      *gl3, l01, torus({1}, {two}, l01), "s6-full"));
  return data;
}

std::vector<CriterionResult> run_acceptance(int jobs) {
  std::vector<CriterionResult> out;
  auto timed = [&out](CriterionResult r, Clock::time_point start) {
    r.seconds =
        std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - start)
            .count();
    out.push_back(std::move(r));
  };
  {
    auto t0 = Clock::now();
    CriterionResult r = criterion_changing_weight(jobs);
    if (r.pass && std::chrono::duration_cast<std::chrono::duration<double>>(
                      Clock::now() - t0)
                          .count() > 60.0) {
      r.pass = false;
      r.detail += "; exceeded the 60 s budget";
    }
    timed(std::move(r), t0);
  }
  {
    auto t0 = Clock::now();
    timed(criterion_satake_leading_term(), t0);
  }
  {
    auto t0 = Clock::now();
    CriterionResult r = criterion_cone_lemmas();
    if (r.pass && std::chrono::duration_cast<std::chrono::duration<double>>(
                      Clock::now() - t0)
                          .count() > 10.0) {
      r.pass = false;
      r.detail += "; exceeded the 10 s budget";
    }
    timed(std::move(r), t0);
  }
  {
    auto t0 = Clock::now();
    CriterionResult r = criterion_coset_bruhat();
    if (r.pass && std::chrono::duration_cast<std::chrono::duration<double>>(
                      Clock::now() - t0)
                          .count() > 10.0) {
      r.pass = false;
      r.detail += "; exceeded the 10 s budget";
    }
    timed(std::move(r), t0);
  }
  {
    auto t0 = Clock::now();
    timed(criterion_round_trip(), t0);
  }
  {
    auto t0 = Clock::now();
    timed(criterion_tensor_law(), t0);
  }
  {
    auto t0 = Clock::now();
    timed(criterion_irreducibility(), t0);
  }
  {
    auto t0 = Clock::now();
    timed(criterion_principal_series(), t0);
  }
  {
    auto t0 = Clock::now();
    timed(criterion_classification_enumeration(), t0);
  }
  {
    auto t0 = Clock::now();
    timed(criterion_quotient_datum(), t0);
  }
  return out;
}

}  // namespace hecke
