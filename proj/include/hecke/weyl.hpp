#pragma once

#include <map>
#include <string>
#include <vector>

#include "hecke/root_datum.hpp"

namespace hecke {

// Finite Weyl group generated by the simple reflections of a root datum.
// Elements are canonicalized by their action matrix on X_*; each carries one
// reduced word (the lexicographically smallest one) and its length.

class WeylGroup {
 public:
  struct Element {
    IntMat cochar_action;  // acts on X_* by la -> M * la (columns convention)
    IntMat weight_action;  // contragredient action on X*
    std::vector<int> word;
    int length = 0;
  };

  static WeylGroup generate(RootDatumPtr rd, std::size_t cap = 1152);

  const RootDatum& datum() const { return *rd_; }
  RootDatumPtr datum_ptr() const { return rd_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Element& element(int e) const { return elements_[e]; }
  int identity() const { return 0; }
  int simple_reflection(int i) const { return simple_[i]; }
  int length(int e) const { return elements_[e].length; }
  const std::vector<int>& word(int e) const { return elements_[e].word; }

  int multiply(int a, int b) const;
  int inverse(int a) const;
  IntVec apply_to_cochar(int e, const IntVec& la) const;
  IntVec apply_to_weight(int e, const IntVec& nu) const;

  // Subword criterion on the stored reduced words.
  bool bruhat_leq(int w, int v) const;
  // All u with u <= v, computed by one subword sweep.
  std::vector<char> bruhat_lower_set(int v) const;

  // Positive roots, as vectors in X* plus their simple-root coordinates.
  const IntMat& positive_roots() const { return pos_roots_; }
  // Number of positive roots sent negative; equals the length.
  int inversions(int e) const;
  // True if the weight vector is a nonnegative combination of simple roots.
  bool weight_vector_positive(const IntVec& root) const;

  // W(M) = {w : w(theta roots) > 0}; minimal length coset representatives.
  std::vector<int> min_coset_reps(const ParabolicSubset& theta) const;
  // Unique (w0, w1) with w = w0*w1, w0 in W(M), w1 in W_M, additive lengths.
  std::pair<int, int> coset_factorize(int w, const ParabolicSubset& theta) const;
  // Elements of the standard parabolic subgroup W_M.
  std::vector<int> parabolic_subgroup(const ParabolicSubset& theta) const;

  struct CosetBruhatReport {
    std::string datum;
    ParabolicSubset theta;
    long long triples = 0;
    std::vector<std::string> counterexamples;
    bool pass() const { return counterexamples.empty(); }
  };
  CosetBruhatReport verify_coset_bruhat(const ParabolicSubset& theta) const;

 private:
  WeylGroup() = default;
  int element_index(const IntMat& m) const;
  RootDatumPtr rd_;
  std::vector<Element> elements_;
  std::vector<int> simple_;
  std::map<IntMat, int> index_;
  IntMat pos_roots_;
};

// Pi_nu = {alpha : <nu, coroot_alpha> = 0}; nu must be dominant or
// anti-dominant.
ParabolicSubset stabilizer_subset(const RootDatum& rd, const IntVec& nu);

}  // namespace hecke
