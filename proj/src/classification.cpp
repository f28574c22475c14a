#include "hecke/classification.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

SupersingularDatum make_supersingular_datum(const RootDatum& rd, ParabolicSubset levi,
                                            TorusCharacterDatum central,
                                            std::string label) {
  IntMat expected = orthogonal_sublattice(rd, levi);
  if (central.basis != expected)
    throw Error(Errc::InvalidParameter,
                "central character must live on the Hermite basis of the "
                "Levi-orthogonal lattice");
  // Orthogonal simple coroots automatically lie in that lattice.
  for (int a = 0; a < rd.num_simple(); ++a) {
    bool orth = true;
    for (int i : levi.indices)
      if (rd.cartan(i, a) != 0) orth = false;
    if (orth && !in_lattice(central.basis, rd.simple_coroot(a)))
      throw Error(Errc::InternalCheckFailed,
                  "orthogonal coroot escapes the central lattice");
  }
  return SupersingularDatum{std::move(levi), std::move(central), std::move(label)};
}

ParabolicSubset pi_sigma(const RootDatum& rd, const SupersingularDatum& d) {
  std::vector<int> idx;
  for (int a = 0; a < rd.num_simple(); ++a) {
    bool orth = true;
    for (int i : d.levi.indices)
      if (rd.cartan(i, a) != 0) orth = false;
    if (!orth) continue;
    if (d.central.compose_with_cocharacter(rd.simple_coroot(a)).is_trivial())
      idx.push_back(a);
  }
  return ParabolicSubset(idx);
}

ParameterCheck validate_parameter(const RootDatum& rd,
                                  const ClassificationParameter& lam) {
  ParameterCheck out;
  if (!(lam.pi1 == lam.sigma1.levi)) {
    out.ok = false;
    out.violations.push_back("pi1 differs from the Levi of sigma1");
  }
  IntMat expected = orthogonal_sublattice(rd, lam.sigma1.levi);
  if (lam.sigma1.central.basis != expected) {
    out.ok = false;
    out.violations.push_back("central character lattice mismatch");
    return out;
  }
  ParabolicSubset ps = pi_sigma(rd, lam.sigma1);
  if (!lam.pi2.subset_of(ps)) {
    out.ok = false;
    out.violations.push_back("pi2 is not contained in pi_sigma");
  }
  return out;
}

std::string IrrRepDescriptor::identity_key() const {
  std::ostringstream os;
  os << "P" << inducing_parabolic.str() << "|L" << satake.levi.str() << "|";
  for (size_t i = 0; i < satake.lattice.size(); ++i)
    os << vec_str(satake.lattice[i]) << "=" << satake.values[i].str() << ",";
  os << "|S" << special_part.str() << "|U";
  for (const auto& [a, e] : coroot_unit_parts) os << a << ":" << e << ",";
  os << "|" << sigma1_label;
  return os.str();
}

IrrRepDescriptor build_descriptor(RootDatumPtr rd, const ClassificationParameter& lam) {
  ParameterCheck chk = validate_parameter(*rd, lam);
  if (!chk.ok) {
    std::string msg;
    for (const auto& v : chk.violations) msg += (msg.empty() ? "" : "; ") + v;
    throw Error(Errc::InvalidParameter, msg);
  }
  IrrRepDescriptor desc;
  desc.inducing_parabolic = lam.pi1.set_union(pi_sigma(*rd, lam.sigma1));
  desc.sigma1_label = lam.sigma1.label;
  desc.special_part = lam.pi2;
  std::vector<FqElem> values;
  IntMat lattice = orthogonal_sublattice(*rd, lam.pi1);
  for (const auto& b : lattice)
    values.push_back(lam.sigma1.central.compose_with_cocharacter(b).pi_value);
  desc.satake = make_satake_parameter(rd, *lam.sigma1.central.field, lam.pi1, values);
  for (int a = 0; a < rd->num_simple(); ++a) {
    bool orth = true;
    for (int i : lam.pi1.indices)
      if (rd->cartan(i, a) != 0) orth = false;
    if (orth)
      desc.coroot_unit_parts.emplace_back(
          a, lam.sigma1.central.compose_with_cocharacter(rd->simple_coroot(a))
                 .unit_exponent);
  }
  return desc;
}

std::vector<ClassificationParameter> induction_factors(const RootDatum& rd,
                                                       const ParabolicSubset& pi_m,
                                                       const SupersingularDatum& d) {
  if (!(d.levi == pi_m))
    throw Error(Errc::InvalidParameter, "datum Levi differs from the inducing Levi");
  ParabolicSubset ps = pi_sigma(rd, d);
  std::vector<ClassificationParameter> out;
  int k = static_cast<int>(ps.size());
  for (unsigned m = 0; m < (1u << k); ++m) {
    std::vector<int> idx;
    for (int i = 0; i < k; ++i)
      if (m & (1u << i)) idx.push_back(ps.indices[i]);
    out.push_back(ClassificationParameter{pi_m, ParabolicSubset(idx), d});
  }
  std::sort(out.begin(), out.end(),
            [](const ClassificationParameter& a, const ClassificationParameter& b) {
              return a.pi2.mask() < b.pi2.mask();
            });
  return out;
}

EnumerationReport enumerate_parameters(RootDatumPtr rd,
                                       const std::vector<SupersingularDatum>& data) {
  EnumerationReport rep;
  for (const auto& d : data) {
    ParabolicSubset ps = pi_sigma(*rd, d);
    rep.expected += 1ll << ps.size();
    for (auto& lam : induction_factors(*rd, d.levi, d))
      rep.entries.push_back({lam, build_descriptor(rd, lam)});
  }
  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const EnumerationEntry& a, const EnumerationEntry& b) {
              auto ka = std::make_tuple(a.parameter.pi1.mask(), a.parameter.pi2.mask(),
                                        a.parameter.sigma1.label);
              auto kb = std::make_tuple(b.parameter.pi1.mask(), b.parameter.pi2.mask(),
                                        b.parameter.sigma1.label);
              return ka < kb;
            });
  for (size_t i = 0; i < rep.entries.size(); ++i)
    for (size_t j = i + 1; j < rep.entries.size(); ++j)
      if (rep.entries[i].descriptor.identity_key() ==
          rep.entries[j].descriptor.identity_key()) {
        rep.injective = false;
        rep.collisions.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
  return rep;
}

PrincipalSeriesReport principal_series_analyze(RootDatumPtr rd,
                                               const TorusCharacterDatum& nu) {
  if (nu.basis != identity_matrix(rd->rank()))
    throw Error(Errc::InvalidParameter,
                "principal series characters live on the full cocharacter lattice");
  PrincipalSeriesReport rep;
  for (int a = 0; a < rd->num_simple(); ++a)
    if (nu.compose_with_cocharacter(rd->simple_coroot(a)).is_trivial())
      ++rep.trivial_coroot_count;
  rep.length = 1ll << rep.trivial_coroot_count;
  rep.irreducible = rep.trivial_coroot_count == 0;
  SupersingularDatum d =
      make_supersingular_datum(*rd, ParabolicSubset{}, nu, "nu");
  for (auto& lam : induction_factors(*rd, ParabolicSubset{}, d))
    rep.factors.push_back({lam, build_descriptor(rd, lam)});
  return rep;
}

bool changing_weight_applicable(const RootDatum& rd, const IntVec& nu, int alpha,
                                const SatakeParameter& chi) {
  if (rd.pair_coroot(nu, alpha) != 0) return false;
  if (chi.levi.contains(alpha)) return false;
  const IntVec& coroot = rd.simple_coroot(alpha);
  if (!in_lattice(chi.lattice, coroot)) return true;
  return !chi.chi(coroot).is_one();
}

MinimizeWeightResult minimize_weight(const RootDatum& rd, IntVec nu,
                                     const SatakeParameter& chi, Int q) {
  if (!is_derived_simply_connected(rd))
    throw Error(Errc::NotSimplyConnected,
                "weight minimization needs fundamental weights");
  auto in_window = [&](const IntVec& w) {
    for (int j = 0; j < rd.num_simple(); ++j) {
      Int p = rd.pair_coroot(w, j);
      if (!(-q < p && p <= 0)) return false;
    }
    return true;
  };
  if (!in_window(nu))
    throw Error(Errc::WindowViolated,
                "weight is outside the lowest-weight window");
  MinimizeWeightResult out;
  while (true) {
    int pick = -1;
    for (int a = 0; a < rd.num_simple() && pick < 0; ++a)
      if (changing_weight_applicable(rd, nu, a, chi)) pick = a;
    if (pick < 0) break;
    nu = vec_sub(nu, vec_scale(q - 1, fundamental_weight(rd, pick)));
    if (!in_window(nu))
      throw Error(Errc::WindowViolated, "step left the lowest-weight window");
    out.steps.emplace_back(pick, nu);
  }
  out.terminal = nu;
  return out;
}

bool is_supersingular_descriptor(const RootDatum& rd, const IrrRepDescriptor& desc) {
  return desc.satake.levi == ParabolicSubset::full(rd.num_simple());
}

std::vector<ParabolicSubset> trivial_parameter_factors(const RootDatum& rd) {
  std::vector<ParabolicSubset> out;
  int k = rd.num_simple();
  for (unsigned m = 0; m < (1u << k); ++m)
    out.push_back(ParabolicSubset::from_mask(m, k));
  return out;
}

bool character_extends(const RootDatum& rd, const TorusCharacterDatum& nu) {
  for (int a = 0; a < rd.num_simple(); ++a)
    if (!nu.compose_with_cocharacter(rd.simple_coroot(a)).is_trivial())
      return false;
  return true;
}

}  // namespace hecke
