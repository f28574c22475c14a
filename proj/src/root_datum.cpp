#include "hecke/root_datum.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

ParabolicSubset::ParabolicSubset(std::vector<int> idx) : indices(std::move(idx)) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
}

bool ParabolicSubset::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

unsigned ParabolicSubset::mask() const {
  unsigned m = 0;
  for (int i : indices) m |= 1u << i;
  return m;
}

ParabolicSubset ParabolicSubset::from_mask(unsigned mask, int num_simple) {
  std::vector<int> idx;
  for (int i = 0; i < num_simple; ++i)
    if (mask & (1u << i)) idx.push_back(i);
  return ParabolicSubset(idx);
}

ParabolicSubset ParabolicSubset::full(int num_simple) {
  std::vector<int> idx(num_simple);
  for (int i = 0; i < num_simple; ++i) idx[i] = i;
  return ParabolicSubset(idx);
}

ParabolicSubset ParabolicSubset::set_union(const ParabolicSubset& o) const {
  std::vector<int> idx = indices;
  idx.insert(idx.end(), o.indices.begin(), o.indices.end());
  return ParabolicSubset(idx);
}

ParabolicSubset ParabolicSubset::set_intersection(const ParabolicSubset& o) const {
  std::vector<int> idx;
  for (int i : indices)
    if (o.contains(i)) idx.push_back(i);
  return ParabolicSubset(idx);
}

bool ParabolicSubset::subset_of(const ParabolicSubset& o) const {
  return std::all_of(indices.begin(), indices.end(),
                     [&](int i) { return o.contains(i); });
}

std::string ParabolicSubset::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < indices.size(); ++i) {
    if (i) os << ',';
    os << indices[i];
  }
  os << '}';
  return os.str();
}

namespace {

// Finite type iff the generalized Cartan matrix has all principal minors
// positive (equivalently each indecomposable block is in the finite list).
bool all_principal_minors_positive(const IntMat& c) {
  int k = static_cast<int>(c.size());
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    IntMat sub(idx.size(), IntVec(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) sub[i][j] = c[idx[i]][idx[j]];
    if (det(sub) <= 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> RootDatum::check(int rank, const IntMat& roots,
                                          const IntMat& coroots) {
  std::vector<std::string> bad;
  // Rank 0 is the trivial torus; it shows up as a quotient.
  if (rank < 0) {
    bad.push_back("rank must be nonnegative");
    return bad;
  }
  if (roots.size() != coroots.size()) {
    bad.push_back("number of simple roots and simple coroots differ");
    return bad;
  }
  for (const auto& v : roots)
    if (static_cast<int>(v.size()) != rank) bad.push_back("root of wrong length");
  for (const auto& v : coroots)
    if (static_cast<int>(v.size()) != rank) bad.push_back("coroot of wrong length");
  if (!bad.empty()) return bad;

  int k = static_cast<int>(roots.size());
  IntMat c(k, IntVec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) c[i][j] = dot(roots[i], coroots[j]);
  for (int i = 0; i < k; ++i) {
    if (c[i][i] != 2)
      bad.push_back("NonCartan: <alpha_" + std::to_string(i) + ", coroot_" +
                    std::to_string(i) + "> = " + std::to_string(c[i][i]) +
                    " != 2");
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      if (c[i][j] > 0)
        bad.push_back("NonCartan: positive off-diagonal pairing at (" +
                      std::to_string(i) + "," + std::to_string(j) + ")");
      if ((c[i][j] == 0) != (c[j][i] == 0))
        bad.push_back("NonCartan: zero pattern not symmetric at (" +
                      std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  if (rank_of(roots) != k) bad.push_back("NonCartan: simple roots dependent");
  if (rank_of(coroots) != k) bad.push_back("NonCartan: simple coroots dependent");
  if (!bad.empty()) return bad;
  if (!all_principal_minors_positive(c))
    bad.push_back("InfiniteType: Cartan matrix is not of finite type");
  return bad;
}

RootDatumPtr RootDatum::make(int rank, IntMat roots, IntMat coroots,
                             std::string name) {
  auto bad = check(rank, roots, coroots);
  if (!bad.empty()) {
    std::string msg;
    for (const auto& s : bad) msg += (msg.empty() ? "" : "; ") + s;
    Errc code = msg.find("InfiniteType") != std::string::npos ? Errc::InfiniteType
                                                              : Errc::NonCartan;
    throw Error(code, msg);
  }
  return RootDatumPtr(
      new RootDatum(rank, std::move(roots), std::move(coroots), std::move(name)));
}

Int RootDatum::cartan(int i, int j) const { return dot(roots_[i], coroots_[j]); }

Int RootDatum::pair_root(int i, const IntVec& cochar) const {
  return dot(roots_[i], cochar);
}

Int RootDatum::pair_coroot(const IntVec& weight, int j) const {
  return dot(weight, coroots_[j]);
}

bool RootDatum::dominant_cocharacter(const IntVec& la) const {
  for (int i = 0; i < num_simple(); ++i)
    if (pair_root(i, la) < 0) return false;
  return true;
}

bool RootDatum::dominant_weight(const IntVec& nu) const {
  for (int j = 0; j < num_simple(); ++j)
    if (pair_coroot(nu, j) < 0) return false;
  return true;
}

bool RootDatum::antidominant_weight(const IntVec& nu) const {
  for (int j = 0; j < num_simple(); ++j)
    if (pair_coroot(nu, j) > 0) return false;
  return true;
}

bool is_derived_simply_connected(const RootDatum& rd) {
  IntMat sat = saturation(rd.simple_coroots(), rd.rank());
  IntMat span = hnf_rows(rd.simple_coroots());
  return sat == span;
}

std::optional<IntVec> dominance_gap(const RootDatum& rd, const IntVec& mu,
                                    const IntVec& la) {
  auto coeffs = solve_in_lattice(rd.simple_coroots(), vec_sub(la, mu));
  if (!coeffs) return std::nullopt;
  for (Int c : *coeffs)
    if (c < 0) return std::nullopt;
  return coeffs;
}

bool dominance_leq(const RootDatum& rd, const IntVec& mu, const IntVec& la) {
  return dominance_gap(rd, mu, la).has_value();
}

namespace {

// Enumerates integer vectors with max-norm <= radius in lexicographic order
// and returns the first satisfying `ok`, preferring all-nonnegative vectors in
// boxes of growing radius. This pins the canonical representative.
std::optional<IntVec> first_in_box(int n, int max_radius, bool nonneg,
                                   const std::function<bool(const IntVec&)>& ok) {
  for (int radius = 1; radius <= max_radius; ++radius) {
    IntVec v(n, nonneg ? 0 : -radius);
    Int lo = nonneg ? 0 : -radius;
    while (true) {
      if (ok(v)) return v;
      int i = n - 1;
      while (i >= 0 && v[i] == radius) {
        v[i] = lo;
        --i;
      }
      if (i < 0) break;
      ++v[i];
    }
  }
  return std::nullopt;
}

}  // namespace

IntVec fundamental_weight(const RootDatum& rd, int alpha) {
  if (!is_derived_simply_connected(rd))
    throw Error(Errc::NoIntegralLift,
                "fundamental weight needs a simply connected derived group");
  auto defining = [&](const IntVec& w) {
    for (int j = 0; j < rd.num_simple(); ++j)
      if (rd.pair_coroot(w, j) != (j == alpha ? 1 : 0)) return false;
    return true;
  };
  if (auto w = first_in_box(rd.rank(), 16, true, defining)) return *w;
  if (auto w = first_in_box(rd.rank(), 16, false, defining)) return *w;
  throw Error(Errc::NoIntegralLift, "no integral fundamental weight found");
}

IntVec probe_cocharacter(const RootDatum& rd, int alpha) {
  auto defining = [&](const IntVec& la) {
    for (int i = 0; i < rd.num_simple(); ++i) {
      Int p = rd.pair_root(i, la);
      if (i == alpha ? p <= 0 : p != 0) return false;
    }
    return true;
  };
  if (auto la = first_in_box(rd.rank(), 16, true, defining)) return *la;
  if (auto la = first_in_box(rd.rank(), 16, false, defining)) return *la;
  throw Error(Errc::InternalCheckFailed, "no probe cocharacter found");
}

IntMat orthogonal_sublattice(const RootDatum& rd, const ParabolicSubset& theta) {
  IntMat constraints;
  for (int i : theta.indices) constraints.push_back(rd.simple_root(i));
  return kernel_basis(constraints, rd.rank());
}

namespace {

// Tries to extend the per-simple-root matching `perm` to a unimodular map of
// character lattices. phi acts on row vectors: x -> x*phi, and must satisfy
// root_i * phi = root'_{perm(i)} together with phi * coroot'_{perm(i)}^T =
// coroot_i^T. Free directions are searched over a small box.
bool unimodular_match(const RootDatum& a, const RootDatum& b,
                      const std::vector<int>& perm) {
  int n = a.rank();
  int k = a.num_simple();
  int vars = n * n;
  IntMat eqs;  // rows: coefficients over phi entries; last column: rhs
  for (int i = 0; i < k; ++i) {
    for (int col = 0; col < n; ++col) {
      IntVec row(vars + 1, 0);
      for (int s = 0; s < n; ++s) row[s * n + col] = a.simple_root(i)[s];
      row[vars] = b.simple_root(perm[i])[col];
      eqs.push_back(row);
    }
    for (int r = 0; r < n; ++r) {
      IntVec row(vars + 1, 0);
      for (int t = 0; t < n; ++t) row[r * n + t] = b.simple_coroot(perm[i])[t];
      row[vars] = a.simple_coroot(i)[r];
      eqs.push_back(row);
    }
  }
  // Solve eqs * phi_vec = rhs over Z: particular solution plus kernel box.
  IntVec rhs;
  for (auto& e : eqs) rhs.push_back(e[vars]);
  IntMat sys(vars, IntVec(eqs.size()));
  for (size_t r = 0; r < eqs.size(); ++r)
    for (int v = 0; v < vars; ++v) sys[v][r] = eqs[r][v];
  auto part = solve_in_lattice(sys, rhs);
  if (!part) return false;
  IntMat constraints(eqs.size(), IntVec(vars));
  for (size_t r = 0; r < eqs.size(); ++r)
    for (int v = 0; v < vars; ++v) constraints[r][v] = eqs[r][v];
  IntMat ker = kernel_basis(constraints, vars);
  int d = static_cast<int>(ker.size());
  if (d > 8) d = 8;  // box-search cap, ample for the shipped catalog
  Int radius = d <= 6 ? 3 : 2;
  IntVec t(d, -radius);
  while (true) {
    IntVec phi_vec = *part;
    for (int j = 0; j < d; ++j)
      for (int v = 0; v < vars; ++v) phi_vec[v] += t[j] * ker[j][v];
    IntMat phi(n, IntVec(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) phi[r][c] = phi_vec[r * n + c];
    Int dt = det(phi);
    if (dt == 1 || dt == -1) return true;
    int i = d - 1;
    while (i >= 0 && t[i] == radius) {
      t[i] = -radius;
      --i;
    }
    if (i < 0) break;
    ++t[i];
  }
  return false;
}

}  // namespace

bool root_data_isomorphic(const RootDatum& a, const RootDatum& b) {
  if (a.rank() != b.rank() || a.num_simple() != b.num_simple()) return false;
  int k = a.num_simple();
  if (k == 0) return true;  // tori of equal rank
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  do {
    bool cartan_ok = true;
    for (int i = 0; i < k && cartan_ok; ++i)
      for (int j = 0; j < k && cartan_ok; ++j)
        if (a.cartan(i, j) != b.cartan(perm[i], perm[j])) cartan_ok = false;
    if (cartan_ok && unimodular_match(a, b, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

RootDatumPtr quotient_by_coroots(const RootDatum& rd, const ParabolicSubset& keep,
                                 const IntMat& killed, const std::string& name) {
  int n = rd.rank();
  IntMat charlat = kernel_basis(killed, n);  // rows: basis of the new X*
  int k = static_cast<int>(charlat.size());

  IntMat sat = saturation(killed, n);
  int r = static_cast<int>(sat.size());
  IntMat v;  // change of basis with sat -> first r coordinates
  if (r == 0) {
    v = identity_matrix(n);
  } else {
    Smith s = smith_normal_form(sat);
    v = s.V;
  }
  IntMat vinv = inverse_unimodular(v);
  // Quotient coordinates of x: the last n-r entries of x*V; representatives of
  // the quotient basis are the last n-r rows of V^-1.
  auto project = [&](const IntVec& x) {
    IntVec full = row_times_mat(x, v);
    return IntVec(full.begin() + r, full.end());
  };
  if (n - r != k)
    throw Error(Errc::InternalCheckFailed, "quotient rank mismatch");
  // Pairing matrix between the charlat rows and the quotient basis; the
  // pairing is perfect, so this must be unimodular.
  IntMat q(k, IntVec(k));
  for (int s = 0; s < k; ++s)
    for (int t = 0; t < k; ++t) q[s][t] = dot(charlat[s], vinv[r + t]);
  if (k > 0 && std::abs(det(q)) != 1)
    throw Error(Errc::InternalCheckFailed, "quotient pairing is not perfect");
  IntMat qt = transpose(q);

  IntMat new_roots, new_coroots;
  for (int i : keep.indices) {
    auto coords = solve_in_lattice(charlat, rd.simple_root(i));
    if (!coords)
      throw Error(Errc::InternalCheckFailed, "kept root not orthogonal to kill set");
    new_roots.push_back(*coords);
    new_coroots.push_back(row_times_mat(project(rd.simple_coroot(i)), qt));
  }
  return RootDatum::make(k, new_roots, new_coroots, name);
}

bool quotient_datum_isomorphic(const RootDatum& rd, const ParabolicSubset& pi1,
                               const ParabolicSubset& pi2) {
  if (!pi1.set_intersection(pi2).empty())
    throw Error(Errc::BadPartition, "subsets are not disjoint");
  if (!(pi1.set_union(pi2) == ParabolicSubset::full(rd.num_simple())))
    throw Error(Errc::BadPartition, "subsets do not cover the simple roots");
  for (int i : pi1.indices)
    for (int j : pi2.indices)
      if (rd.cartan(i, j) != 0)
        throw Error(Errc::BadPartition, "<pi1 roots, pi2 coroots> != 0");
  IntMat pi2_coroots;
  for (int j : pi2.indices) pi2_coroots.push_back(rd.simple_coroot(j));
  // G-side: kill the derived group of M_2 inside the full datum.
  RootDatumPtr g_side = quotient_by_coroots(rd, pi1, pi2_coroots, "G-side");
  // M_1-side: form the Levi M_1 on the same torus, then kill the subtorus
  // generated by the pi2 coroot images.
  IntMat m1_roots, m1_coroots;
  for (int i : pi1.indices) {
    m1_roots.push_back(rd.simple_root(i));
    m1_coroots.push_back(rd.simple_coroot(i));
  }
  RootDatumPtr levi = RootDatum::make(rd.rank(), m1_roots, m1_coroots, "M1");
  RootDatumPtr m_side = quotient_by_coroots(
      *levi, ParabolicSubset::full(levi->num_simple()), pi2_coroots, "M1-side");
  return root_data_isomorphic(*g_side, *m_side);
}

ConeLemmaReport verify_dominance_square(const RootDatum& rd, int alpha,
                                        const IntVec& lambda, int bound) {
  ConeLemmaReport rep;
  rep.lemma = "dominance-square";
  rep.datum = rd.name();
  int k = rd.num_simple();
  IntVec two_lambda = vec_scale(2, lambda);
  IntVec target_cap = vec_sub(two_lambda, rd.simple_coroot(alpha));
  IntVec n(k, 0);
  while (true) {
    IntVec gap(rd.rank(), 0);
    for (int i = 0; i < k; ++i)
      gap = vec_add(gap, vec_scale(n[i], rd.simple_coroot(i)));
    IntVec mu = vec_sub(two_lambda, gap);
    if (rd.dominant_cocharacter(mu)) {
      ++rep.cases;
      bool ok = (mu == two_lambda) || dominance_leq(rd, mu, target_cap);
      if (!ok) rep.counterexamples.push_back({lambda, mu, "mu fails both branches"});
    }
    int i = k - 1;
    while (i >= 0 && n[i] == bound) {
      n[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++n[i];
  }
  return rep;
}

std::vector<std::pair<ParabolicSubset, ParabolicSubset>> orthogonal_partitions(
    const RootDatum& rd) {
  std::vector<std::pair<ParabolicSubset, ParabolicSubset>> out;
  int k = rd.num_simple();
  for (unsigned m = 0; m < (1u << k); ++m) {
    ParabolicSubset p1 = ParabolicSubset::from_mask(m, k);
    ParabolicSubset p2 = ParabolicSubset::from_mask(~m & ((1u << k) - 1), k);
    bool orth = true;
    for (int i : p1.indices)
      for (int j : p2.indices)
        if (rd.cartan(i, j) != 0) orth = false;
    if (orth) out.emplace_back(p1, p2);
  }
  return out;
}

ConeLemmaReport verify_orthogonal_cone(const RootDatum& rd,
                                       const ParabolicSubset& pi1,
                                       const ParabolicSubset& pi2,
                                       const IntVec& lambda, int bound) {
  ConeLemmaReport rep;
  rep.lemma = "orthogonal-cone";
  rep.datum = rd.name();
  rep.reading = "coroot";
  if (!pi1.set_intersection(pi2).empty() ||
      !(pi1.set_union(pi2) == ParabolicSubset::full(rd.num_simple())))
    throw Error(Errc::BadPartition, "need a partition of the simple roots");
  for (int i : pi1.indices)
    for (int j : pi2.indices)
      if (rd.cartan(i, j) != 0)
        throw Error(Errc::BadPartition, "<pi1 roots, pi2 coroots> != 0");
  for (int j : pi2.indices)
    if (rd.pair_root(j, lambda) != 0)
      throw Error(Errc::BadPartition, "lambda not orthogonal to pi2");
  if (!rd.dominant_cocharacter(lambda))
    throw Error(Errc::BadPartition, "lambda not dominant");

  int k = rd.num_simple();
  IntVec n(k, 0);
  while (true) {
    IntVec gap(rd.rank(), 0);
    for (int i = 0; i < k; ++i)
      gap = vec_add(gap, vec_scale(n[i], rd.simple_coroot(i)));
    IntVec mu = vec_sub(lambda, gap);
    if (rd.dominant_cocharacter(mu)) {
      ++rep.cases;
      bool ok = true;
      for (int j : pi2.indices)
        if (n[j] != 0) ok = false;
      if (!ok)
        rep.counterexamples.push_back({lambda, mu, "gap uses a pi2 coroot"});
    }
    int i = k - 1;
    while (i >= 0 && n[i] == bound) {
      n[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++n[i];
  }
  return rep;
}

ConeLemmaReport verify_cone_lemmas(const RootDatum& rd, ConeLemmaKind kind,
                                   int bound) {
  ConeLemmaReport total;
  total.datum = rd.name();
  if (kind == ConeLemmaKind::DominanceSquare) {
    total.lemma = "dominance-square";
    for (int alpha = 0; alpha < rd.num_simple(); ++alpha) {
      IntVec probe = probe_cocharacter(rd, alpha);
      ConeLemmaReport r = verify_dominance_square(rd, alpha, probe, bound);
      total.cases += r.cases;
      total.counterexamples.insert(total.counterexamples.end(),
                                   r.counterexamples.begin(),
                                   r.counterexamples.end());
    }
    return total;
  }
  total.lemma = "orthogonal-cone";
  total.reading = "coroot";
  int radius = rd.rank() <= 2 ? bound : (rd.rank() == 3 ? 4 : 3);
  total.lambda_box = radius;
  for (auto& [p1, p2] : orthogonal_partitions(rd)) {
    IntVec la(rd.rank(), -radius);
    while (true) {
      bool admissible = rd.dominant_cocharacter(la);
      for (int j : p2.indices)
        if (admissible && rd.pair_root(j, la) != 0) admissible = false;
      if (admissible) {
        ConeLemmaReport r = verify_orthogonal_cone(rd, p1, p2, la, bound);
        total.cases += r.cases;
        total.counterexamples.insert(total.counterexamples.end(),
                                     r.counterexamples.begin(),
                                     r.counterexamples.end());
      }
      int i = rd.rank() - 1;
      while (i >= 0 && la[i] == radius) {
        la[i] = -radius;
        --i;
      }
      if (i < 0) break;
      ++la[i];
    }
  }
  return total;
}

}  // namespace hecke
