#include <doctest.h>

#include <random>

#include "hecke/lattice.hpp"

using namespace hecke;

TEST_CASE("hnf canonical forms") {
  CHECK(hnf_rows({{1, -1}}) == IntMat{{1, -1}});
  CHECK(hnf_rows({{-1, -1}}) == IntMat{{1, 1}});
  CHECK(hnf_rows({{2, 0}, {0, 2}, {1, 1}}) == IntMat{{1, 1}, {0, 2}});
  // Order of input rows does not matter.
  CHECK(hnf_rows({{0, 2}, {1, 1}, {2, 0}}) == hnf_rows({{2, 0}, {0, 2}, {1, 1}}));
  CHECK(hnf_rows({{0, 0, 0}}).empty());
}

TEST_CASE("smith normal form properties on random small matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 4), entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    int m = dim(rng), n = dim(rng);
    IntMat a(m, IntVec(n));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    Smith s = smith_normal_form(a);
    CHECK((det(s.U) == 1 || det(s.U) == -1));
    CHECK((det(s.V) == 1 || det(s.V) == -1));
    IntMat d = mat_mul(mat_mul(s.U, a), s.V);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j)
          CHECK(d[i][j] == s.d[i]);
        else
          CHECK(d[i][j] == 0);
      }
    for (size_t i = 0; i + 1 < s.d.size(); ++i) {
      if (s.d[i] != 0) CHECK(s.d[i + 1] % s.d[i] == 0);
      if (s.d[i] == 0) CHECK(s.d[i + 1] == 0);
    }
  }
}

TEST_CASE("solve_in_lattice round trips") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 3), n = r + static_cast<int>(rng() % 2);
    IntMat rows(r, IntVec(n));
    for (auto& row : rows)
      for (auto& x : row) x = entry(rng);
    IntVec coeffs(r);
    for (auto& c : coeffs) c = entry(rng);
    IntVec target(n, 0);
    for (int i = 0; i < r; ++i) target = vec_add(target, vec_scale(coeffs[i], rows[i]));
    auto sol = solve_in_lattice(rows, target);
    REQUIRE(sol.has_value());
    IntVec again(n, 0);
    for (int i = 0; i < r; ++i) again = vec_add(again, vec_scale((*sol)[i], rows[i]));
    CHECK(again == target);
  }
  CHECK_FALSE(solve_in_lattice({{2, 0}, {0, 2}}, {1, 0}).has_value());
  CHECK(solve_in_lattice({{2, 0}, {0, 2}}, {4, -2}).value() == IntVec{2, -1});
}

TEST_CASE("kernel and saturation") {
  CHECK(kernel_basis({{1, -1}}, 2) == IntMat{{1, 1}});
  CHECK(kernel_basis({}, 2) == identity_matrix(2));
  CHECK(kernel_basis({{1, -1, 0}, {0, 1, -1}}, 3) == IntMat{{1, 1, 1}});
  // Kernel vectors really annihilate the constraints.
  IntMat ker = kernel_basis({{2, 1, 0}, {0, 3, -1}}, 3);
  for (const auto& v : ker) {
    CHECK(dot(v, {2, 1, 0}) == 0);
    CHECK(dot(v, {0, 3, -1}) == 0);
  }
  CHECK(saturation({{2}}, 1) == IntMat{{1}});
  CHECK(saturation({{1}}, 1) == IntMat{{1}});
  CHECK(saturation({{2, 0}, {0, 2}}, 2) == identity_matrix(2));
  CHECK(saturation({{1, -1}}, 2) == IntMat{{1, -1}});
  CHECK(saturation({{2, -2}}, 2) == IntMat{{1, -1}});
}

TEST_CASE("unimodular inverse") {
  IntMat u = {{1, 2}, {0, 1}};
  IntMat inv = inverse_unimodular(u);
  CHECK(mat_mul(u, inv) == identity_matrix(2));
  IntMat w = {{0, 1, 0}, {1, 0, 0}, {3, -2, 1}};
  CHECK(mat_mul(w, inverse_unimodular(w)) == identity_matrix(3));
}
