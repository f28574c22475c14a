#include "hecke/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

// Reflection matrices in the column convention: vectors are columns, the
// action is la -> la - <alpha, la> * coroot (on X_*) and
// x -> x - <x, coroot> * alpha (on X*).
IntMat reflection_on_cochar(const RootDatum& rd, int i) {
  int n = rd.rank();
  IntMat m = identity_matrix(n);
  const IntVec& a = rd.simple_root(i);
  const IntVec& av = rd.simple_coroot(i);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[r][c] -= av[r] * a[c];
  return m;
}

IntMat reflection_on_weight(const RootDatum& rd, int i) {
  int n = rd.rank();
  IntMat m = identity_matrix(n);
  const IntVec& a = rd.simple_root(i);
  const IntVec& av = rd.simple_coroot(i);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[r][c] -= a[r] * av[c];
  return m;
}

IntVec apply(const IntMat& m, const IntVec& v) {
  int n = static_cast<int>(m.size());
  IntVec r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
  return r;
}

}  // namespace

WeylGroup WeylGroup::generate(RootDatumPtr rd, std::size_t cap) {
  WeylGroup w;
  w.rd_ = rd;
  int k = rd->num_simple();
  std::vector<IntMat> gen_c(k), gen_w(k);
  for (int i = 0; i < k; ++i) {
    gen_c[i] = reflection_on_cochar(*rd, i);
    gen_w[i] = reflection_on_weight(*rd, i);
  }
  Element id;
  id.cochar_action = identity_matrix(rd->rank());
  id.weight_action = identity_matrix(rd->rank());
  w.elements_.push_back(id);
  w.index_[id.cochar_action] = 0;
  // Closure by length levels; within a level children are visited in
  // (parent, letter) order, so the first word reaching an element is the
  // lexicographically smallest reduced word.
  std::vector<int> level{0};
  while (!level.empty()) {
    std::vector<int> next;
    for (int e : level) {
      for (int i = 0; i < k; ++i) {
        IntMat m = mat_mul(w.elements_[e].cochar_action, gen_c[i]);
        if (w.index_.count(m)) continue;
        if (w.elements_.size() >= cap)
          throw Error(Errc::GroupTooLarge,
                      "Weyl group exceeds cap " + std::to_string(cap));
        Element el;
        el.cochar_action = m;
        el.weight_action = mat_mul(w.elements_[e].weight_action, gen_w[i]);
        el.word = w.elements_[e].word;
        el.word.push_back(i);
        el.length = w.elements_[e].length + 1;
        w.index_[m] = static_cast<int>(w.elements_.size());
        next.push_back(static_cast<int>(w.elements_.size()));
        w.elements_.push_back(el);
      }
    }
    level = next;
  }
  // Sanity: closure visits s_i * longer elements too, but right multiplication
  // by generators from the identity covers the whole group.
  w.simple_.resize(k);
  for (int i = 0; i < k; ++i) w.simple_[i] = w.index_.at(gen_c[i]);

  // Positive roots: the orbit of the simple roots with nonnegative
  // simple-root coordinates.
  std::set<IntVec> roots;
  for (int i = 0; i < k; ++i) {
    for (const auto& el : w.elements_) roots.insert(apply(el.weight_action, rd->simple_root(i)));
  }
  for (const auto& root : roots)
    if (w.weight_vector_positive(root)) w.pos_roots_.push_back(root);
  return w;
}

bool WeylGroup::weight_vector_positive(const IntVec& root) const {
  auto coords = solve_in_lattice(rd_->simple_roots(), root);
  if (!coords) return false;
  for (Int c : *coords)
    if (c < 0) return false;
  return true;
}

int WeylGroup::element_index(const IntMat& m) const {
  auto it = index_.find(m);
  if (it == index_.end())
    throw Error(Errc::InternalCheckFailed, "element not in group table");
  return it->second;
}

int WeylGroup::multiply(int a, int b) const {
  return element_index(
      mat_mul(elements_[a].cochar_action, elements_[b].cochar_action));
}

int WeylGroup::inverse(int a) const {
  return element_index(inverse_unimodular(elements_[a].cochar_action));
}

IntVec WeylGroup::apply_to_cochar(int e, const IntVec& la) const {
  return apply(elements_[e].cochar_action, la);
}

IntVec WeylGroup::apply_to_weight(int e, const IntVec& nu) const {
  return apply(elements_[e].weight_action, nu);
}

int WeylGroup::inversions(int e) const {
  int count = 0;
  for (const auto& root : pos_roots_) {
    IntVec img = apply(elements_[e].weight_action, root);
    if (!weight_vector_positive(img)) ++count;
  }
  return count;
}

std::vector<char> WeylGroup::bruhat_lower_set(int v) const {
  std::vector<char> reach(elements_.size(), 0);
  reach[identity()] = 1;
  for (int letter : elements_[v].word) {
    std::vector<char> next = reach;
    for (int u = 0; u < size(); ++u) {
      if (!reach[u]) continue;
      int us = multiply(u, simple_[letter]);
      if (elements_[us].length > elements_[u].length) next[us] = 1;
    }
    reach = next;
  }
  return reach;
}

bool WeylGroup::bruhat_leq(int w, int v) const { return bruhat_lower_set(v)[w] != 0; }

std::vector<int> WeylGroup::min_coset_reps(const ParabolicSubset& theta) const {
  std::vector<int> reps;
  for (int e = 0; e < size(); ++e) {
    bool ok = true;
    for (int i : theta.indices) {
      IntVec img = apply_to_weight(e, rd_->simple_root(i));
      if (!weight_vector_positive(img)) {
        ok = false;
        break;
      }
    }
    if (ok) reps.push_back(e);
  }
  return reps;
}

std::vector<int> WeylGroup::parabolic_subgroup(const ParabolicSubset& theta) const {
  // Closure of the theta reflections.
  std::set<int> seen{identity()};
  std::deque<int> todo{identity()};
  while (!todo.empty()) {
    int e = todo.front();
    todo.pop_front();
    for (int i : theta.indices) {
      int f = multiply(e, simple_[i]);
      if (seen.insert(f).second) todo.push_back(f);
    }
  }
  return std::vector<int>(seen.begin(), seen.end());
}

std::pair<int, int> WeylGroup::coset_factorize(int w,
                                               const ParabolicSubset& theta) const {
  int x = w;
  std::vector<int> letters;
  while (true) {
    int found = -1;
    for (int i : theta.indices) {
      IntVec img = apply_to_weight(x, rd_->simple_root(i));
      if (!weight_vector_positive(img)) {
        found = i;
        break;
      }
    }
    if (found < 0) break;
    x = multiply(x, simple_[found]);
    letters.push_back(found);
  }
  int w1 = identity();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w1 = multiply(w1, simple_[*it]);
  if (multiply(x, w1) != w || length(x) + length(w1) != length(w))
    throw Error(Errc::InternalCheckFailed, "coset factorization failed");
  return {x, w1};
}

WeylGroup::CosetBruhatReport WeylGroup::verify_coset_bruhat(
    const ParabolicSubset& theta) const {
  CosetBruhatReport rep;
  rep.datum = rd_->name();
  rep.theta = theta;
  std::vector<int> wm = min_coset_reps(theta);
  std::vector<int> sub = parabolic_subgroup(theta);
  std::vector<std::vector<char>> lower(size());
  for (int v = 0; v < size(); ++v) lower[v] = bruhat_lower_set(v);
  for (int w : wm) {
    for (int v0 : wm) {
      for (int v1 : sub) {
        ++rep.triples;
        bool lhs = lower[multiply(v0, v1)][w] != 0;
        bool rhs = lower[v0][w] != 0;
        if (lhs != rhs)
          rep.counterexamples.push_back(
              "w=" + vec_str(IntVec(word(w).begin(), word(w).end())) +
              " v0=" + vec_str(IntVec(word(v0).begin(), word(v0).end())) +
              " v1=" + vec_str(IntVec(word(v1).begin(), word(v1).end())));
      }
    }
  }
  return rep;
}

ParabolicSubset stabilizer_subset(const RootDatum& rd, const IntVec& nu) {
  if (!rd.dominant_weight(nu) && !rd.antidominant_weight(nu))
    throw Error(Errc::NotDominantOrAntiDominant,
                "stabilizer subset needs a dominant or anti-dominant weight");
  std::vector<int> idx;
  for (int j = 0; j < rd.num_simple(); ++j)
    if (rd.pair_coroot(nu, j) == 0) idx.push_back(j);
  return ParabolicSubset(idx);
}

}  // namespace hecke
