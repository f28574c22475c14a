#include "hecke/padic.hpp"

#include <climits>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Rat::Rat(Int n, Int d) {
  if (d == 0) throw Error(Errc::InternalCheckFailed, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Int g = std::gcd(std::abs(n), d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

Rat Rat::operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
Rat Rat::operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
Rat Rat::operator-() const { return Rat(-num, den); }
Rat Rat::operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
Rat Rat::operator/(const Rat& o) const {
  if (o.num == 0) throw Error(Errc::InternalCheckFailed, "division by zero");
  return Rat(num * o.den, den * o.num);
}

bool Rat::operator<(const Rat& o) const { return num * o.den < o.num * den; }

int Rat::vp(Int p) const {
  if (num == 0) return INT_MAX / 2;
  int v = 0;
  Int n = std::abs(num);
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  Int d = den;
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

Int Rat::residue_mod(Int p, int k) const {
  Int m = 1;
  for (int i = 0; i < k; ++i) m *= p;
  if (den % p == 0)
    throw Error(Errc::InternalCheckFailed, "residue of a non-integral value");
  Int n = num % m;
  if (n < 0) n += m;
  // Invert den mod m by Euclid.
  Int d = den % m;
  if (d < 0) d += m;
  Int t0 = 0, t1 = 1, r0 = m, r1 = d;
  while (r1 != 0) {
    Int q = r0 / r1;
    t0 -= q * t1;
    std::swap(t0, t1);
    r0 -= q * r1;
    std::swap(r0, r1);
  }
  if (r0 != 1) throw Error(Errc::InternalCheckFailed, "denominator not invertible");
  Int dinv = t0 % m;
  if (dinv < 0) dinv += m;
  return (n * dinv) % m;
}

std::string Rat::str() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << '/' << den;
  return os.str();
}

PAdicMatrix PAdicMatrix::from_ints(Int p, Int a, Int b, Int c, Int d) {
  PAdicMatrix m;
  m.p = p;
  m.e = {{{Rat(a), Rat(b)}, {Rat(c), Rat(d)}}};
  return m;
}

PAdicMatrix PAdicMatrix::identity(Int p) { return from_ints(p, 1, 0, 0, 1); }

namespace {

Rat p_power(Int p, Int a) {
  Rat r(1);
  for (Int i = 0; i < std::abs(a); ++i) r = a > 0 ? r * Rat(p) : r / Rat(p);
  return r;
}

}  // namespace

PAdicMatrix PAdicMatrix::diagonal_power(Int p, Int a, Int b) {
  PAdicMatrix m = identity(p);
  m.e[0][0] = p_power(p, a);
  m.e[1][1] = p_power(p, b);
  return m;
}

PAdicMatrix PAdicMatrix::lower_unipotent(Int p, const Rat& c) {
  PAdicMatrix m = identity(p);
  m.e[1][0] = c;
  return m;
}

PAdicMatrix PAdicMatrix::weyl_flip(Int p) { return from_ints(p, 0, 1, 1, 0); }

Rat PAdicMatrix::det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }

PAdicMatrix PAdicMatrix::operator*(const PAdicMatrix& o) const {
  PAdicMatrix r;
  r.p = p;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.e[i][j] = e[i][0] * o.e[0][j] + e[i][1] * o.e[1][j];
  return r;
}

PAdicMatrix PAdicMatrix::inverse() const {
  Rat d = det();
  if (d.is_zero()) throw Error(Errc::InternalCheckFailed, "singular matrix");
  PAdicMatrix r;
  r.p = p;
  r.e[0][0] = e[1][1] / d;
  r.e[0][1] = -e[0][1] / d;
  r.e[1][0] = -e[1][0] / d;
  r.e[1][1] = e[0][0] / d;
  return r;
}

PAdicMatrix PAdicMatrix::scaled(const Rat& s) const {
  PAdicMatrix r = *this;
  for (auto& row : r.e)
    for (auto& x : row) x = x * s;
  return r;
}

bool PAdicMatrix::is_p_integral() const {
  for (const auto& row : e)
    for (const auto& x : row)
      if (!x.is_zero() && x.vp(p) < 0) return false;
  return true;
}

bool PAdicMatrix::in_K() const { return is_p_integral() && det().vp(p) == 0; }

bool PAdicMatrix::operator==(const PAdicMatrix& o) const { return e == o.e && p == o.p; }

bool PAdicMatrix::operator<(const PAdicMatrix& o) const {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (e[i][j] != o.e[i][j]) return e[i][j] < o.e[i][j];
    }
  return false;
}

std::string PAdicMatrix::str() const {
  return "[[" + e[0][0].str() + "," + e[0][1].str() + "],[" + e[1][0].str() + "," +
         e[1][1].str() + "]]";
}

IntVec cartan_decompose(const PAdicMatrix& g) {
  Rat d = g.det();
  if (d.is_zero()) throw Error(Errc::InternalCheckFailed, "singular matrix");
  int vdet = d.vp(g.p);
  int vmin = INT_MAX / 2;
  for (const auto& row : g.e)
    for (const auto& x : row)
      if (!x.is_zero()) vmin = std::min(vmin, x.vp(g.p));
  return IntVec{vdet - vmin, vmin};
}

PAdicMatrix coset_canonicalize(const PAdicMatrix& g) {
  Int p = g.p;
  if (g.det().is_zero()) throw Error(Errc::InternalCheckFailed, "singular matrix");
  // Normalize by a global power of p so the matrix is integral and primitive.
  int vmin = INT_MAX / 2;
  for (const auto& row : g.e)
    for (const auto& x : row)
      if (!x.is_zero()) vmin = std::min(vmin, x.vp(p));
  PAdicMatrix a = g.scaled(p_power(p, -vmin));

  // Column reduction over Z_p toward [[p^x, s], [0, p^z]]: clear the bottom
  // entry of larger valuation against the other, keeping multipliers in Z_p.
  Rat c0 = a.e[1][0], c1 = a.e[1][1];
  int v0 = c0.is_zero() ? INT_MAX / 2 : c0.vp(p);
  int v1 = c1.is_zero() ? INT_MAX / 2 : c1.vp(p);
  if (v0 < v1) {
    if (!c1.is_zero()) {
      Rat ratio = c1 / c0;
      a.e[0][1] = a.e[0][1] - ratio * a.e[0][0];
      a.e[1][1] = Rat(0);
    }
    std::swap(a.e[0][0], a.e[0][1]);
    std::swap(a.e[1][0], a.e[1][1]);
  } else if (!c0.is_zero()) {
    Rat ratio = c0 / c1;
    a.e[0][0] = a.e[0][0] - ratio * a.e[0][1];
    a.e[1][0] = Rat(0);
  }
  if (!a.e[1][0].is_zero())
    throw Error(Errc::InternalCheckFailed, "column reduction failed");
  // Scale each column by a unit so the diagonal is exact p-powers.
  int x = a.e[0][0].vp(p);
  int z = a.e[1][1].vp(p);
  Rat u2 = a.e[1][1] / p_power(p, z);
  a.e[0][0] = p_power(p, x);
  a.e[1][1] = p_power(p, z);
  a.e[0][1] = a.e[0][1] / u2;
  // The off-diagonal entry is well defined modulo p^x Z_p; pick the integer
  // representative in [0, p^x).
  if (x <= 0 || a.e[0][1].is_zero()) {
    a.e[0][1] = Rat(0);
  } else {
    a.e[0][1] = Rat(a.e[0][1].residue_mod(p, static_cast<int>(x)));
  }
  PAdicMatrix out = a.scaled(p_power(p, vmin));
  out.p = p;
  if (!(g.inverse() * out).in_K())
    throw Error(Errc::InternalCheckFailed, "canonical representative left the coset");
  return out;
}

CartanFactorization cartan_factorize(const PAdicMatrix& g) {
  Int p = g.p;
  PAdicMatrix a = g;
  PAdicMatrix left = PAdicMatrix::identity(p);   // accumulates k2
  PAdicMatrix right = PAdicMatrix::identity(p);  // accumulates k1
  auto swap_rows = [&]() {
    PAdicMatrix s = PAdicMatrix::weyl_flip(p);
    a = s * a;
    left = left * s;  // s is its own inverse
  };
  auto swap_cols = [&]() {
    PAdicMatrix s = PAdicMatrix::weyl_flip(p);
    a = a * s;
    right = s * right;
  };
  // Move an entry of minimal valuation to (1,1).
  int bi = 0, bj = 0, best = INT_MAX / 2;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!a.e[i][j].is_zero() && a.e[i][j].vp(p) < best) {
        best = a.e[i][j].vp(p);
        bi = i;
        bj = j;
      }
  if (bi == 1) swap_rows();
  if (bj == 1) swap_cols();
  // Clear (2,1) with a row operation in K, then (1,2) with a column
  // operation; multipliers are p-integral because the pivot has minimal
  // valuation.
  if (!a.e[1][0].is_zero()) {
    Rat m = a.e[1][0] / a.e[0][0];
    PAdicMatrix el = PAdicMatrix::identity(p);
    el.e[1][0] = -m;
    a = el * a;
    PAdicMatrix elinv = PAdicMatrix::identity(p);
    elinv.e[1][0] = m;
    left = left * elinv;
  }
  if (!a.e[0][1].is_zero()) {
    Rat m = a.e[0][1] / a.e[0][0];
    PAdicMatrix el = PAdicMatrix::identity(p);
    el.e[0][1] = -m;
    a = a * el;
    PAdicMatrix elinv = PAdicMatrix::identity(p);
    elinv.e[0][1] = m;
    right = elinv * right;
  }
  // Diagonal now; strip unit parts into the K factors.
  int va = a.e[0][0].vp(p);
  int vb = a.e[1][1].vp(p);
  Rat ua = a.e[0][0] / p_power(p, va);
  Rat ub = a.e[1][1] / p_power(p, vb);
  PAdicMatrix units = PAdicMatrix::identity(p);
  units.e[0][0] = ua;
  units.e[1][1] = ub;
  right = units * right;
  // Dominant order.
  if (va < vb) {
    std::swap(va, vb);
    PAdicMatrix s = PAdicMatrix::weyl_flip(p);
    left = left * s;
    right = s * right;
  }
  CartanFactorization f;
  f.k2 = left;
  f.k1 = right;
  f.lambda = IntVec{va, vb};
  PAdicMatrix check = f.k2 * PAdicMatrix::diagonal_power(p, va, vb) * f.k1;
  if (!(check == g) || !f.k1.in_K() || !f.k2.in_K())
    throw Error(Errc::InternalCheckFailed, "Cartan factorization failed");
  return f;
}

std::vector<PAdicMatrix> double_coset_points(Int p, const IntVec& lambda) {
  Int a = lambda[0], b = lambda[1];
  if (a < b) throw Error(Errc::NotDominant, "lambda must be dominant");
  Int n = a - b;
  std::vector<PAdicMatrix> out;
  // Points of K diag(p^n, 1) K / K, then scaled by p^b: upper-triangular
  // [[p^x, s], [0, p^z]] with x + z = n, 0 <= s < p^x and min(x, z, v(s)) = 0.
  for (Int x = 0; x <= n; ++x) {
    Int z = n - x;
    Int px = 1;
    for (Int i = 0; i < x; ++i) px *= p;
    for (Int s = 0; s < px; ++s) {
      int vmin = static_cast<int>(std::min(x, z));
      if (s != 0) {
        Int t = s;
        int vs = 0;
        while (t % p == 0) {
          t /= p;
          ++vs;
        }
        vmin = std::min(vmin, vs);
      } else if (x > 0 && z > 0) {
        continue;  // s = 0 with both diagonals divisible: wrong divisor type
      }
      if (vmin != 0) continue;
      PAdicMatrix m = PAdicMatrix::from_ints(p, px, s, 0, 1);
      Int pz = 1;
      for (Int i = 0; i < z; ++i) pz *= p;
      m.e[1][1] = Rat(pz);
      out.push_back(m.scaled(p_power(p, b)));
    }
  }
  return out;
}

}  // namespace hecke
