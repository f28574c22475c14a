#pragma once

#include <string>
#include <vector>

#include "hecke/classification.hpp"

namespace hecke {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

// Runs the full verification battery: the changing-weight identity, the
// Satake leading-term shape, the exhaustive cone and coset lemma sweeps, the
// parameter round-trip, tensor and irreducibility laws, the principal-series
// length law, the classification enumeration fixture and the quotient-datum
// check. `jobs` > 1 parallelizes the independent Hecke cases.
std::vector<CriterionResult> run_acceptance(int jobs = 1);

// The six-datum classification fixture over GL3 used by criterion 9.
std::vector<SupersingularDatum> gl3_fixture(RootDatumPtr gl3);

}  // namespace hecke
