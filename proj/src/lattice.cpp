#include "hecke/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Int dot(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec vec_scale(Int c, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

std::string vec_str(const IntVec& a) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

IntMat identity_matrix(int n) {
  IntMat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  size_t m = a.size(), k = b.size(), n = k ? b[0].size() : 0;
  IntMat r(m, IntVec(n, 0));
  for (size_t i = 0; i < m; ++i) {
    assert(a[i].size() == k);
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  }
  return r;
}

IntVec row_times_mat(const IntVec& v, const IntMat& m) {
  size_t n = m.empty() ? 0 : m[0].size();
  IntVec r(n, 0);
  assert(v.size() == m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) r[j] += v[i] * m[i][j];
  }
  return r;
}

IntMat transpose(const IntMat& a) {
  size_t m = a.size(), n = m ? a[0].size() : 0;
  IntMat r(n, IntVec(m, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) r[j][i] = a[i][j];
  return r;
}

Int det(const IntMat& a) {
  size_t n = a.size();
  if (n == 0) return 1;
  assert(a[0].size() == n);
  if (n == 1) return a[0][0];
  Int d = 0;
  for (size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    IntMat sub(n - 1, IntVec(n - 1));
    for (size_t i = 1; i < n; ++i) {
      size_t c = 0;
      for (size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        sub[i - 1][c++] = a[i][k];
      }
    }
    Int cof = det(sub);
    d += ((j % 2) ? -1 : 1) * a[0][j] * cof;
  }
  return d;
}

IntMat inverse_unimodular(const IntMat& a) {
  size_t n = a.size();
  Int d = det(a);
  if (d != 1 && d != -1)
    throw Error(Errc::InternalCheckFailed, "matrix is not unimodular");
  IntMat inv(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      IntMat sub(n - 1, IntVec(n - 1));
      for (size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          sub[rr][cc++] = a[r][c];
        }
        ++rr;
      }
      Int cof = det(sub);
      if ((i + j) % 2) cof = -cof;
      inv[i][j] = cof * d;  // d = 1/d for d = +-1
    }
  }
  return inv;
}

IntMat hnf_rows(IntMat rows) {
  size_t m = rows.size();
  if (m == 0) return rows;
  size_t n = rows[0].size();
  size_t r = 0;  // next pivot row
  for (size_t col = 0; col < n && r < m; ++col) {
    // Euclidean elimination in this column among rows r..m-1.
    while (true) {
      size_t piv = m;
      for (size_t i = r; i < m; ++i)
        if (rows[i][col] != 0 &&
            (piv == m || std::abs(rows[i][col]) < std::abs(rows[piv][col])))
          piv = i;
      if (piv == m) break;
      std::swap(rows[r], rows[piv]);
      bool clean = true;
      for (size_t i = r + 1; i < m; ++i) {
        if (rows[i][col] == 0) continue;
        Int q = rows[i][col] / rows[r][col];
        for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (size_t j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
    // Reduce entries above the pivot into [0, pivot).
    for (size_t i = 0; i < r; ++i) {
      Int q = rows[i][col] / rows[r][col];
      if (rows[i][col] % rows[r][col] < 0) q -= 1;
      if (q != 0)
        for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

Smith smith_normal_form(const IntMat& a) {
  size_t m = a.size(), n = m ? a[0].size() : 0;
  IntMat d = a;
  IntMat u = identity_matrix(static_cast<int>(m));
  IntMat v = identity_matrix(static_cast<int>(n));
  size_t t = 0;
  auto swap_rows = [&](size_t i, size_t j) {
    std::swap(d[i], d[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](size_t i, size_t j) {
    for (size_t r = 0; r < m; ++r) std::swap(d[r][i], d[r][j]);
    for (size_t r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
  };
  auto addmul_row = [&](size_t dst, size_t src, Int q) {
    for (size_t j = 0; j < n; ++j) d[dst][j] += q * d[src][j];
    for (size_t j = 0; j < m; ++j) u[dst][j] += q * u[src][j];
  };
  auto addmul_col = [&](size_t dst, size_t src, Int q) {
    for (size_t r = 0; r < m; ++r) d[r][dst] += q * d[r][src];
    for (size_t r = 0; r < n; ++r) v[r][dst] += q * v[r][src];
  };
  while (t < m && t < n) {
    size_t pi = m, pj = n;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j)
        if (d[i][j] != 0 &&
            (pi == m || std::abs(d[i][j]) < std::abs(d[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool again = false;
    for (size_t i = t + 1; i < m; ++i) {
      if (d[i][t] == 0) continue;
      addmul_row(i, t, -(d[i][t] / d[t][t]));
      if (d[i][t] != 0) again = true;
    }
    for (size_t j = t + 1; j < n; ++j) {
      if (d[t][j] == 0) continue;
      addmul_col(j, t, -(d[t][j] / d[t][t]));
      if (d[t][j] != 0) again = true;
    }
    if (again) continue;
    // Enforce divisibility d[t][t] | d[i][j] for the trailing block.
    bool fixed = true;
    for (size_t i = t + 1; i < m && fixed; ++i)
      for (size_t j = t + 1; j < n && fixed; ++j)
        if (d[i][j] % d[t][t] != 0) {
          addmul_row(t, i, 1);
          fixed = false;
        }
    if (!fixed) continue;
    if (d[t][t] < 0) {
      for (size_t j = 0; j < n; ++j) d[t][j] = -d[t][j];
      for (size_t j = 0; j < m; ++j) u[t][j] = -u[t][j];
    }
    ++t;
  }
  Smith s;
  s.U = u;
  s.V = v;
  s.d.resize(std::min(m, n), 0);
  for (size_t i = 0; i < s.d.size(); ++i) s.d[i] = d[i][i];
  return s;
}

int rank_of(IntMat rows) { return static_cast<int>(hnf_rows(std::move(rows)).size()); }

std::optional<IntVec> solve_in_lattice(const IntMat& rows, const IntVec& target) {
  size_t r = rows.size();
  size_t n = target.size();
  if (r == 0) return is_zero(target) ? std::optional<IntVec>(IntVec{}) : std::nullopt;
  if (n == 0) return IntVec(r, 0);
  assert(rows[0].size() == n);
  // x * B = t  <=>  B^T x^T = t^T. With U B^T V = D: D (V^-1 x^T) = U t^T.
  IntMat bt = transpose(rows);
  Smith s = smith_normal_form(bt);
  IntVec ut(n, 0);
  for (size_t i = 0; i < n; ++i) ut[i] = dot(s.U[i], target);
  IntVec w(r, 0);
  for (size_t i = 0; i < n; ++i) {
    Int di = i < s.d.size() ? s.d[i] : 0;
    if (di == 0) {
      if (ut[i] != 0) return std::nullopt;
    } else {
      if (ut[i] % di != 0) return std::nullopt;
      if (i < r) w[i] = ut[i] / di;
    }
  }
  IntVec x(r, 0);
  for (size_t i = 0; i < r; ++i) x[i] = dot(s.V[i], w);
  return x;
}

bool in_lattice(const IntMat& rows, const IntVec& v) {
  return solve_in_lattice(rows, v).has_value();
}

IntMat kernel_basis(const IntMat& constraints, int n) {
  if (constraints.empty()) return identity_matrix(n);
  assert(static_cast<int>(constraints[0].size()) == n);
  Smith s = smith_normal_form(constraints);
  size_t rank = 0;
  for (Int x : s.d)
    if (x != 0) ++rank;
  // C x = 0 iff D V^-1 x = 0; kernel is spanned by columns rank..n-1 of V.
  IntMat basis;
  for (int j = static_cast<int>(rank); j < n; ++j) {
    IntVec col(n);
    for (int i = 0; i < n; ++i) col[i] = s.V[i][j];
    basis.push_back(col);
  }
  return hnf_rows(basis);
}

IntMat saturation(const IntMat& rows, int n) {
  IntMat orth = kernel_basis(rows, n);
  return kernel_basis(orth, n);
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonCartan: return "NonCartan";
    case Errc::InfiniteType: return "InfiniteType";
    case Errc::NoIntegralLift: return "NoIntegralLift";
    case Errc::BadPartition: return "BadPartition";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::NotDominantOrAntiDominant: return "NotDominantOrAntiDominant";
    case Errc::NotInLattice: return "NotInLattice";
    case Errc::ExtensionRequired: return "ExtensionRequired";
    case Errc::NotDominant: return "NotDominant";
    case Errc::InconsistentOracle: return "InconsistentOracle";
    case Errc::CorootNotContained: return "CorootNotContained";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::IncompatibleWeights: return "IncompatibleWeights";
    case Errc::IdentityFailed: return "IdentityFailed";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::NotSimplyConnected: return "NotSimplyConnected";
    case Errc::WindowViolated: return "WindowViolated";
    case Errc::SchemaError: return "SchemaError";
    case Errc::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "Unknown";
}

}  // namespace hecke
