#include "hecke/satake_param.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

FqElem SatakeParameter::chi(const IntVec& lambda) const {
  auto coords = solve_in_lattice(lattice, lambda);
  if (!coords)
    throw Error(Errc::NotInLattice, vec_str(lambda) + " is not in the Levi-central lattice");
  FqElem v = field->one();
  for (size_t i = 0; i < values.size(); ++i)
    if ((*coords)[i] != 0) v = v * values[i].pow((*coords)[i]);
  return v;
}

FqElem SatakeParameter::evaluate(const IntVec& lambda) const {
  if (!rd->dominant_cocharacter(lambda))
    throw Error(Errc::NotDominant, vec_str(lambda) + " is not dominant");
  if (!in_lattice(lattice, lambda)) return field->zero();
  return chi(lambda);
}

FqElem SatakeParameter::evaluate_element(const MonoidAlgebraElement& e) const {
  FqElem acc = field->zero();
  for (const auto& [la, c] : e.terms()) acc = acc + c * evaluate(la);
  return acc;
}

bool SatakeParameter::operator==(const SatakeParameter& o) const {
  return levi == o.levi && lattice == o.lattice && values == o.values &&
         field == o.field;
}

SatakeParameter make_satake_parameter(RootDatumPtr rd, const Fq& field,
                                      ParabolicSubset levi,
                                      std::vector<FqElem> values) {
  SatakeParameter p;
  p.rd = std::move(rd);
  p.field = &field;
  p.levi = std::move(levi);
  p.lattice = orthogonal_sublattice(*p.rd, p.levi);
  if (values.size() != p.lattice.size())
    throw Error(Errc::InvalidParameter,
                "need one value per basis vector of the central lattice");
  for (const auto& v : values)
    if (v.is_zero())
      throw Error(Errc::InvalidParameter, "character values must be nonzero");
  p.values = std::move(values);
  return p;
}

namespace {

// All dominant cocharacters with coordinates in [-bound, bound].
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

}  // namespace

bool is_algebra_homomorphism_consistent(const SatakeParameter& chi, int bound) {
  auto box = dominant_box(*chi.rd, bound);
  for (const auto& la : box)
    for (const auto& mu : box)
      if (chi.evaluate(vec_add(la, mu)) != chi.evaluate(la) * chi.evaluate(mu))
        return false;
  return true;
}

SatakeParameter tensor(const SatakeParameter& chi1, const SatakeParameter& chi2) {
  if (chi1.field != chi2.field)
    throw Error(Errc::ExtensionRequired, "tensor of parameters over different fields");
  ParabolicSubset levi = chi1.levi.set_union(chi2.levi);
  IntMat lattice = orthogonal_sublattice(*chi1.rd, levi);
  std::vector<FqElem> values;
  for (const auto& b : lattice) values.push_back(chi1.chi(b) * chi2.chi(b));
  return make_satake_parameter(chi1.rd, *chi1.field, levi, values);
}

namespace {

// A vector of the central lattice pairing positively with every simple root
// outside the Levi subset; shifts basis vectors into the dominant cone.
IntVec interior_direction(const RootDatum& rd, const ParabolicSubset& levi,
                          const IntMat& lattice) {
  int r = static_cast<int>(lattice.size());
  for (int radius = 1; radius <= 8; ++radius) {
    IntVec t(r, -radius);
    while (true) {
      IntVec d(rd.rank(), 0);
      for (int i = 0; i < r; ++i) d = vec_add(d, vec_scale(t[i], lattice[i]));
      bool ok = true;
      for (int i = 0; i < rd.num_simple() && ok; ++i) {
        Int p = rd.pair_root(i, d);
        if (levi.contains(i) ? p != 0 : p < 1) ok = false;
      }
      if (ok) return d;
      int i = r - 1;
      while (i >= 0 && t[i] == radius) {
        t[i] = -radius;
        --i;
      }
      if (i < 0) break;
      ++t[i];
    }
  }
  throw Error(Errc::InternalCheckFailed, "no interior direction found");
}

}  // namespace

SatakeParameter parameterize_from_oracle(
    RootDatumPtr rd, const Fq& field,
    const std::function<FqElem(const IntVec&)>& oracle) {
  std::vector<int> levi_idx;
  for (int alpha = 0; alpha < rd->num_simple(); ++alpha) {
    IntVec probe = probe_cocharacter(*rd, alpha);
    if (oracle(probe).is_zero()) levi_idx.push_back(alpha);
  }
  ParabolicSubset levi{levi_idx};
  IntMat lattice = orthogonal_sublattice(*rd, levi);
  std::vector<FqElem> values;
  if (!lattice.empty()) {
    IntVec dir = interior_direction(*rd, levi, lattice);
    for (const auto& b : lattice) {
      // b = (b + N*dir) - N*dir with both summands dominant and central.
      Int shift = 0;
      for (int i = 0; i < rd->num_simple(); ++i) {
        if (levi.contains(i)) continue;
        Int pb = rd->pair_root(i, b);
        Int pd = rd->pair_root(i, dir);
        while (pb + shift * pd < 0) ++shift;
      }
      if (shift == 0) shift = 1;
      IntVec plus = vec_add(b, vec_scale(shift, dir));
      IntVec minus = vec_scale(shift, dir);
      FqElem num = oracle(plus);
      FqElem den = oracle(minus);
      if (num.is_zero() || den.is_zero())
        throw Error(Errc::InconsistentOracle,
                    "oracle vanishes on the Levi-central cone");
      values.push_back(num / den);
    }
  }
  SatakeParameter p = make_satake_parameter(std::move(rd), field, levi, values);
  // Spot check: the recovered parameter must reproduce the oracle on a box.
  auto box = dominant_box(*p.rd, 2);
  for (const auto& la : box)
    if (p.evaluate(la) != oracle(la))
      throw Error(Errc::InconsistentOracle,
                  "oracle disagrees with the recovered parameter at " + vec_str(la));
  return p;
}

RestrictedParameter restrict_to_sublattice(const SatakeParameter& chi,
                                           const IntMat& sublattice) {
  const RootDatum& rd = *chi.rd;
  for (int j = 0; j < rd.num_simple(); ++j)
    if (!in_lattice(sublattice, rd.simple_coroot(j)))
      throw Error(Errc::CorootNotContained,
                  "sublattice misses simple coroot " + std::to_string(j));
  int k = static_cast<int>(sublattice.size());
  IntMat new_roots, new_coroots;
  for (int j = 0; j < rd.num_simple(); ++j) {
    IntVec root_coords(k);
    for (int i = 0; i < k; ++i) root_coords[i] = dot(rd.simple_root(j), sublattice[i]);
    new_roots.push_back(root_coords);
    new_coroots.push_back(*solve_in_lattice(sublattice, rd.simple_coroot(j)));
  }
  RootDatumPtr sub = RootDatum::make(k, new_roots, new_coroots,
                                     rd.name().empty() ? "sub" : rd.name() + "-sub");
  auto oracle = [&chi, &sublattice](const IntVec& coords) {
    IntVec lambda = row_times_mat(coords, sublattice);
    return chi.evaluate(lambda);
  };
  RestrictedParameter out{sub, parameterize_from_oracle(sub, *chi.field, oracle)};
  return out;
}

bool tau_coroot_minus_one_irreducible(const RootDatum& rd, int alpha) {
  for (Int c : rd.simple_coroot(alpha))
    if (c % 2 != 0) return true;
  return false;
}

LaurentElement tau_coroot_minus_one(const RootDatum& rd, int alpha, const Fq& field) {
  LaurentElement e;
  e[rd.simple_coroot(alpha)] = field.one();
  e[IntVec(rd.rank(), 0)] = -field.one();
  return e;
}

namespace {

LaurentElement normalize_support(const LaurentElement& e, int rank) {
  if (e.empty()) return e;
  IntVec mins(rank, 0);
  bool first = true;
  for (const auto& [k, v] : e) {
    for (int i = 0; i < rank; ++i)
      mins[i] = first ? k[i] : std::min(mins[i], k[i]);
    first = false;
  }
  LaurentElement out;
  for (const auto& [k, v] : e) out[vec_sub(k, mins)] = v;
  return out;
}

bool is_unit(const LaurentElement& e) { return e.size() <= 1; }

}  // namespace

namespace {

// Exact division of Laurent polynomials by peeling lexicographically minimal
// terms: in a product the lex-minimal exponents add without cancellation, so
// the quotient is forced term by term. Returns the quotient with support in
// [0, bound]^rank, or nullopt.
std::optional<LaurentElement> divide_in_box(const LaurentElement& f,
                                            const LaurentElement& g, int bound) {
  LaurentElement r = f;
  LaurentElement h;
  const auto& [ge, gc] = *g.begin();  // lex-min term of g
  while (!r.empty()) {
    const auto& [re, rc] = *r.begin();
    IntVec he = vec_sub(re, ge);
    for (Int x : he)
      if (x < 0 || x > bound) return std::nullopt;
    FqElem hc = rc / gc;
    h[he] = hc;
    for (const auto& [k, c] : g) {
      IntVec s = vec_add(k, he);
      auto it = r.find(s);
      FqElem cur = it == r.end() ? c.field->zero() : it->second;
      cur = cur - c * hc;
      if (cur.is_zero()) {
        if (it != r.end()) r.erase(it);
      } else {
        r[s] = cur;
      }
    }
  }
  return h;
}

}  // namespace

std::optional<LaurentFactorization> brute_force_laurent_factor_search(
    int rank, const LaurentElement& element, int support_bound, const Fq& field) {
  LaurentElement f = normalize_support(element, rank);
  if (f.empty() || is_unit(f)) return std::nullopt;
  // Newton polytopes of factors are Minkowski summands of the element's
  // polytope; the search is complete only when that fits the factor box.
  for (const auto& [k, c] : f)
    for (int i = 0; i < rank; ++i)
      if (k[i] > support_bound)
        throw Error(Errc::SearchSpaceTooLarge,
                    "element support exceeds the factor box");
  std::vector<IntVec> cells;
  IntVec v(rank, 0);
  while (true) {
    cells.push_back(v);
    int i = rank - 1;
    while (i >= 0 && v[i] == support_bound) {
      v[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++v[i];
  }
  size_t ncells = cells.size();
  double space = 1;
  for (size_t i = 0; i < ncells; ++i) space *= static_cast<double>(field.order());
  if (space > 2e6)
    throw Error(Errc::SearchSpaceTooLarge,
                "factor search over " + std::to_string(ncells) + " cells");
  auto elements = field.all_elements();
  std::vector<size_t> digits(ncells, 0);
  while (true) {
    LaurentElement g;
    for (size_t i = 0; i < ncells; ++i)
      if (!elements[digits[i]].is_zero()) g[cells[i]] = elements[digits[i]];
    if (!is_unit(g)) {
      auto h = divide_in_box(f, g, support_bound);
      if (h && !is_unit(*h)) return LaurentFactorization{g, *h};
    }
    size_t i = 0;
    while (i < ncells && digits[i] + 1 == elements.size()) digits[i++] = 0;
    if (i == ncells) break;
    ++digits[i];
  }
  return std::nullopt;
}

}  // namespace hecke
