#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecke/lattice.hpp"

namespace hecke {

// A split root datum presented on explicit lattices: X* = X_* = Z^n with the
// dot-product pairing, together with lists of simple roots (in X*) and simple
// coroots (in X_*). GL_n, SL_n and PGL_n variants are distinguished by the
// vectors, not by an abstract Cartan type.

class RootDatum;
using RootDatumPtr = std::shared_ptr<const RootDatum>;

struct ParabolicSubset {
  std::vector<int> indices;  // sorted, duplicate-free indices of simple roots

  ParabolicSubset() = default;
  explicit ParabolicSubset(std::vector<int> idx);
  bool contains(int i) const;
  size_t size() const { return indices.size(); }
  bool empty() const { return indices.empty(); }
  unsigned mask() const;
  static ParabolicSubset from_mask(unsigned mask, int num_simple);
  static ParabolicSubset full(int num_simple);
  ParabolicSubset set_union(const ParabolicSubset& o) const;
  ParabolicSubset set_intersection(const ParabolicSubset& o) const;
  bool subset_of(const ParabolicSubset& o) const;
  bool operator==(const ParabolicSubset& o) const { return indices == o.indices; }
  bool operator<(const ParabolicSubset& o) const { return indices < o.indices; }
  std::string str() const;
};

struct Weight {
  IntVec v;
};

struct Cocharacter {
  IntVec v;
};

class RootDatum {
 public:
  // Returns human-readable invariant violations; empty means valid.
  static std::vector<std::string> check(int rank, const IntMat& roots,
                                        const IntMat& coroots);
  // Throws Error(NonCartan) or Error(InfiniteType) on invalid input.
  static RootDatumPtr make(int rank, IntMat roots, IntMat coroots,
                           std::string name = "");

  int rank() const { return rank_; }
  int num_simple() const { return static_cast<int>(roots_.size()); }
  const std::string& name() const { return name_; }
  const IntMat& simple_roots() const { return roots_; }
  const IntMat& simple_coroots() const { return coroots_; }
  const IntVec& simple_root(int i) const { return roots_[i]; }
  const IntVec& simple_coroot(int i) const { return coroots_[i]; }
  Int cartan(int i, int j) const;  // <alpha_i, coroot_j>

  Int pair_root(int i, const IntVec& cochar) const;
  Int pair_coroot(const IntVec& weight, int j) const;
  bool dominant_cocharacter(const IntVec& la) const;
  bool dominant_weight(const IntVec& nu) const;
  bool antidominant_weight(const IntVec& nu) const;

 private:
  RootDatum(int rank, IntMat roots, IntMat coroots, std::string name)
      : rank_(rank), roots_(std::move(roots)), coroots_(std::move(coroots)),
        name_(std::move(name)) {}
  int rank_;
  IntMat roots_;
  IntMat coroots_;
  std::string name_;
};

// Decided by the lattice condition X_* cap Q.coroots = Z.coroots (Smith form).
bool is_derived_simply_connected(const RootDatum& rd);

// mu <= la iff la - mu is a nonnegative integer combination of simple coroots.
bool dominance_leq(const RootDatum& rd, const IntVec& mu, const IntVec& la);
// The coefficients of la - mu on the simple coroots, when mu <= la.
std::optional<IntVec> dominance_gap(const RootDatum& rd, const IntVec& mu,
                                    const IntVec& la);

// omega_alpha with <omega_alpha, coroot_beta> = delta_{alpha beta}. Canonical
// choice: minimal under (prefer all-nonnegative, then max-norm, then lex).
IntVec fundamental_weight(const RootDatum& rd, int alpha);

// Dominant lambda_alpha with <lambda_alpha, beta> = 0 for beta != alpha and
// <lambda_alpha, alpha> > 0, canonical under the same order.
IntVec probe_cocharacter(const RootDatum& rd, int alpha);

// Hermite basis of {la in X_* : <beta, la> = 0 for all beta in theta}.
IntMat orthogonal_sublattice(const RootDatum& rd, const ParabolicSubset& theta);

// Root-data isomorphism test: searches for a lattice isomorphism matching
// simple roots to simple roots and coroots to coroots.
bool root_data_isomorphic(const RootDatum& a, const RootDatum& b);

// Quotient datum with character lattice the orthogonal complement of the
// killed cocharacters and cocharacter lattice X_* modulo their saturation;
// the kept simple roots and coroots descend.
RootDatumPtr quotient_by_coroots(const RootDatum& rd, const ParabolicSubset& keep,
                                 const IntMat& killed, const std::string& name);

// Checks the partition preconditions, builds the quotient datum by both
// recipes and decides whether the results are isomorphic root data.
bool quotient_datum_isomorphic(const RootDatum& rd, const ParabolicSubset& pi1,
                               const ParabolicSubset& pi2);

enum class ConeLemmaKind { DominanceSquare, OrthogonalCone };

struct ConeCounterexample {
  IntVec lambda;
  IntVec mu;
  std::string note;
};

struct ConeLemmaReport {
  std::string lemma;
  std::string datum;
  std::string reading;  // for the orthogonal cone: which cone is asserted
  long long cases = 0;
  int lambda_box = 0;
  std::vector<ConeCounterexample> counterexamples;
  bool pass() const { return counterexamples.empty(); }
};

// For dominant mu with mu <= 2*lambda (coefficients <= bound): mu = 2*lambda
// or mu <= 2*lambda - coroot(alpha). lambda must pair to 0 with every simple
// root except alpha and positively with alpha.
ConeLemmaReport verify_dominance_square(const RootDatum& rd, int alpha,
                                        const IntVec& lambda, int bound);

// For dominant mu <= lambda with lambda orthogonal to pi2: the gap lies in the
// cone spanned by the pi1-coroots. (pi1, pi2) must partition the simple roots
// with <pi1 roots, pi2 coroots> = 0.
ConeLemmaReport verify_orthogonal_cone(const RootDatum& rd,
                                       const ParabolicSubset& pi1,
                                       const ParabolicSubset& pi2,
                                       const IntVec& lambda, int bound);

// Sweeps all probes (dominance-square) or all orthogonal partitions and a box
// of lambdas (orthogonal-cone) and aggregates.
ConeLemmaReport verify_cone_lemmas(const RootDatum& rd, ConeLemmaKind kind,
                                   int bound);

std::vector<std::pair<ParabolicSubset, ParabolicSubset>> orthogonal_partitions(
    const RootDatum& rd);

}  // namespace hecke
