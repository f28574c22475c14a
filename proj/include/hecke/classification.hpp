#pragma once

#include <string>
#include <vector>

#include "hecke/characters.hpp"
#include "hecke/satake_param.hpp"

namespace hecke {

// A supersingular representation of a standard Levi enters the classification
// only through its Levi subset, its central character and an identity label;
// distinct labels are treated as non-isomorphic.
struct SupersingularDatum {
  ParabolicSubset levi;           // Pi_1
  TorusCharacterDatum central;    // on the lattice orthogonal to the Levi roots
  std::string label;
};

SupersingularDatum make_supersingular_datum(const RootDatum& rd, ParabolicSubset levi,
                                            TorusCharacterDatum central,
                                            std::string label);

struct ClassificationParameter {
  ParabolicSubset pi1;
  ParabolicSubset pi2;
  SupersingularDatum sigma1;
};

// The descriptor of the irreducible representation attached to a parameter:
// inducing parabolic, special part, label and Satake parameter, plus the unit
// parts of the central character on the orthogonal simple coroots (these
// separate parameters that agree at the uniformizer).
struct IrrRepDescriptor {
  ParabolicSubset inducing_parabolic;  // Pi_1 union Pi_sigma
  std::string sigma1_label;
  ParabolicSubset special_part;        // Pi_2
  SatakeParameter satake;
  std::vector<std::pair<int, Int>> coroot_unit_parts;
  std::string identity_key() const;
};

// {alpha : <Pi_1 roots, coroot_alpha> = 0 and the central character composed
// with coroot_alpha is trivial}.
ParabolicSubset pi_sigma(const RootDatum& rd, const SupersingularDatum& d);

struct ParameterCheck {
  bool ok = true;
  std::vector<std::string> violations;
};
ParameterCheck validate_parameter(const RootDatum& rd,
                                  const ClassificationParameter& lam);

IrrRepDescriptor build_descriptor(RootDatumPtr rd, const ClassificationParameter& lam);

struct EnumerationEntry {
  ClassificationParameter parameter;
  IrrRepDescriptor descriptor;
};

struct EnumerationReport {
  std::vector<EnumerationEntry> entries;
  long long expected = 0;  // sum over data of 2^|pi_sigma|
  bool injective = true;
  std::vector<std::pair<int, int>> collisions;  // indices of equal descriptors
};

EnumerationReport enumerate_parameters(RootDatumPtr rd,
                                       const std::vector<SupersingularDatum>& data);

struct PrincipalSeriesReport {
  int trivial_coroot_count = 0;  // C
  long long length = 1;          // 2^C
  bool irreducible = true;
  std::vector<EnumerationEntry> factors;
};

// nu is a character of the full torus (basis = standard basis of X_*).
PrincipalSeriesReport principal_series_analyze(RootDatumPtr rd,
                                               const TorusCharacterDatum& nu);

// All parameters (Pi_M, Pi_2, d) with Pi_2 inside pi_sigma(d).
std::vector<ClassificationParameter> induction_factors(const RootDatum& rd,
                                                       const ParabolicSubset& pi_m,
                                                       const SupersingularDatum& d);

// <nu, coroot_alpha> = 0, alpha outside the Levi, and the parameter is
// nondegenerate at the coroot.
bool changing_weight_applicable(const RootDatum& rd, const IntVec& nu, int alpha,
                                const SatakeParameter& chi);

struct MinimizeWeightResult {
  IntVec terminal;
  std::vector<std::pair<int, IntVec>> steps;  // (alpha, weight after the step)
};

// Repeatedly applies nu -> nu - (q-1)*omega_alpha at the smallest applicable
// alpha; each step removes alpha from the stabilizer subset.
MinimizeWeightResult minimize_weight(const RootDatum& rd, IntVec nu,
                                     const SatakeParameter& chi, Int q);

bool is_supersingular_descriptor(const RootDatum& rd, const IrrRepDescriptor& desc);

// One special-representation descriptor per parabolic subset.
std::vector<ParabolicSubset> trivial_parameter_factors(const RootDatum& rd);

// True iff nu extends to a character of the group: every nu of a coroot is
// trivial.
bool character_extends(const RootDatum& rd, const TorusCharacterDatum& nu);

}  // namespace hecke
