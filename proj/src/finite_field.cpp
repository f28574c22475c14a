#include "hecke/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

// Fixed irreducible polynomials (Conway polynomials), lowest coefficient
// first, monic of degree k. Primitivity is exercised by the test suite.
const std::map<std::pair<Int, int>, std::vector<int>>& poly_table() {
  static const std::map<std::pair<Int, int>, std::vector<int>> table = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
  };
  return table;
}

int mod_p(Int a, Int p) {
  Int r = a % p;
  if (r < 0) r += p;
  return static_cast<int>(r);
}

void check_same_field(const FqElem& a, const FqElem& b) {
  if (a.field != b.field) {
    int k1 = a.field ? a.field->degree() : 0;
    int k2 = b.field ? b.field->degree() : 0;
    int need = std::lcm(std::max(k1, 1), std::max(k2, 1));
    throw Error(Errc::ExtensionRequired,
                "operands live in different fields; degree " +
                    std::to_string(need) + " would be needed");
  }
}

}  // namespace

Fq::Fq(Int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  order_ = 1;
  for (int i = 0; i < k; ++i) order_ *= p;
}

const Fq& Fq::get(Int p, int k) {
  static std::map<std::pair<Int, int>, std::unique_ptr<Fq>> registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = registry.find(key);
  if (it != registry.end()) return *it->second;
  auto pit = poly_table().find(key);
  if (pit == poly_table().end())
    throw Error(Errc::ExtensionRequired,
                "no fixed irreducible shipped for p=" + std::to_string(p) +
                    ", k=" + std::to_string(k));
  auto fq = std::unique_ptr<Fq>(new Fq(p, k, pit->second));
  const Fq& ref = *fq;
  registry[key] = std::move(fq);
  return ref;
}

FqElem Fq::zero() const { return FqElem{this, std::vector<int>(k_, 0)}; }

FqElem Fq::one() const { return from_int(1); }

FqElem Fq::from_int(Int a) const {
  std::vector<int> c(k_, 0);
  c[0] = mod_p(a, p_);
  return FqElem{this, c};
}

FqElem Fq::from_coeffs(std::vector<int> c) const {
  if (static_cast<int>(c.size()) > k_) {
    // Reduce modulo the fixed polynomial.
    for (int d = static_cast<int>(c.size()) - 1; d >= k_; --d) {
      int lead = mod_p(c[d], p_);
      if (lead == 0) continue;
      for (int j = 0; j < k_; ++j)
        c[d - k_ + j] = mod_p(c[d - k_ + j] - lead * modulus_[j], p_);
      c[d] = 0;
    }
    c.resize(k_);
  }
  c.resize(k_, 0);
  for (auto& x : c) x = mod_p(x, p_);
  return FqElem{this, c};
}

FqElem Fq::generator() const {
  std::vector<int> c(k_, 0);
  if (k_ == 1) {
    // The class of x is the root of the degree-1 modulus: -modulus[0].
    c[0] = mod_p(-modulus_[0], p_);
  } else {
    c[1] = 1;
  }
  return FqElem{this, c};
}

std::vector<FqElem> Fq::all_elements() const {
  std::vector<FqElem> out;
  std::vector<int> c(k_, 0);
  while (true) {
    out.push_back(FqElem{this, c});
    int i = 0;
    while (i < k_ && c[i] == p_ - 1) c[i++] = 0;
    if (i == k_) break;
    ++c[i];
  }
  return out;
}

std::vector<FqElem> Fq::nonzero_elements() const {
  auto all = all_elements();
  std::vector<FqElem> out;
  for (auto& e : all)
    if (!e.is_zero()) out.push_back(e);
  return out;
}

bool FqElem::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

bool FqElem::is_one() const {
  if (c.empty() || c[0] != 1) return false;
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

FqElem FqElem::operator+(const FqElem& o) const {
  check_same_field(*this, o);
  FqElem r = *this;
  for (size_t i = 0; i < c.size(); ++i)
    r.c[i] = mod_p(c[i] + o.c[i], field->p());
  return r;
}

FqElem FqElem::operator-(const FqElem& o) const {
  check_same_field(*this, o);
  FqElem r = *this;
  for (size_t i = 0; i < c.size(); ++i)
    r.c[i] = mod_p(c[i] - o.c[i], field->p());
  return r;
}

FqElem FqElem::operator-() const {
  FqElem r = *this;
  for (auto& x : r.c) x = mod_p(-x, field->p());
  return r;
}

FqElem FqElem::operator*(const FqElem& o) const {
  check_same_field(*this, o);
  int k = field->degree();
  std::vector<int> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i) {
    if (c[i] == 0) continue;
    for (int j = 0; j < k; ++j)
      prod[i + j] = mod_p(prod[i + j] + static_cast<Int>(c[i]) * o.c[j],
                          field->p());
  }
  return field->from_coeffs(prod);
}

FqElem FqElem::inverse() const {
  if (is_zero()) throw Error(Errc::InternalCheckFailed, "inverse of zero");
  return pow(field->order() - 2);
}

FqElem FqElem::operator/(const FqElem& o) const { return *this * o.inverse(); }

FqElem FqElem::pow(Int e) const {
  Int m = field->order() - 1;
  if (is_zero()) {
    if (e <= 0) throw Error(Errc::InternalCheckFailed, "0^e with e <= 0");
    return *this;
  }
  e %= m;
  if (e < 0) e += m;
  FqElem base = *this;
  FqElem acc = field->one();
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool FqElem::operator==(const FqElem& o) const {
  return field == o.field && c == o.c;
}

bool FqElem::operator<(const FqElem& o) const { return c < o.c; }

std::string FqElem::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

FqMat FqMat::zero(const Fq& f, int rows, int cols) {
  FqMat m;
  m.field = &f;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(static_cast<size_t>(rows) * cols, f.zero());
  return m;
}

FqMat FqMat::identity(const Fq& f, int n) {
  FqMat m = zero(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

FqMat FqMat::operator*(const FqMat& o) const {
  FqMat r = zero(*field, rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int t = 0; t < cols; ++t) {
      if (at(i, t).is_zero()) continue;
      for (int j = 0; j < o.cols; ++j)
        r.at(i, j) = r.at(i, j) + at(i, t) * o.at(t, j);
    }
  return r;
}

FqMat FqMat::operator+(const FqMat& o) const {
  FqMat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

FqMat FqMat::operator-(const FqMat& o) const {
  FqMat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

FqMat FqMat::scaled(const FqElem& s) const {
  FqMat r = *this;
  for (auto& x : r.a) x = x * s;
  return r;
}

std::vector<FqElem> FqMat::apply(const std::vector<FqElem>& v) const {
  std::vector<FqElem> r(rows, field->zero());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r[i] = r[i] + at(i, j) * v[j];
  return r;
}

bool FqMat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const FqElem& x) { return x.is_zero(); });
}

bool FqMat::operator==(const FqMat& o) const {
  return rows == o.rows && cols == o.cols && a == o.a;
}

namespace {

// Reduced row echelon form; returns pivot columns.
std::vector<int> rref(FqMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    FqElem inv = m.at(r, col).inverse();
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      FqElem f = m.at(i, col);
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<FqElem>> null_space(const FqMat& m) {
  FqMat e = m;
  std::vector<int> pivots = rref(e);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FqElem>> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<FqElem> v(m.cols, m.field->zero());
    v[c] = m.field->one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e.at(static_cast<int>(r), c);
    basis.push_back(v);
  }
  return basis;
}

std::vector<std::vector<FqElem>> row_space(const FqMat& m) {
  FqMat e = m;
  std::vector<int> pivots = rref(e);
  std::vector<std::vector<FqElem>> basis;
  for (size_t r = 0; r < pivots.size(); ++r) {
    std::vector<FqElem> v(m.cols, m.field->zero());
    for (int j = 0; j < m.cols; ++j) v[j] = e.at(static_cast<int>(r), j);
    basis.push_back(v);
  }
  return basis;
}

std::optional<std::vector<FqElem>> solve(const FqMat& m, const std::vector<FqElem>& b) {
  FqMat aug = FqMat::zero(*m.field, m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  for (int c : pivots)
    if (c == m.cols) return std::nullopt;
  std::vector<FqElem> x(m.cols, m.field->zero());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
  return x;
}

}  // namespace hecke
