// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "bocklift/catalog.hpp"
#include "bocklift/ring_linalg.hpp"
#include "brute.hpp"

using namespace bocklift;

namespace {

ResidueMatrix bin(const std::vector<std::vector<u64>>& rows) {
  return ResidueMatrix::from_rows(1, rows);
}

bool row_in_span(const ResidueMatrix& a, const ResidueVector& v) {
  return solve_mod(a.transposed(), v).has_value();
}

// Random invertible matrix as a product of elementary row operations.
ResidueMatrix random_unimodular(std::mt19937_64& rng, int n, int e) {
  ResidueMatrix u = ResidueMatrix::identity(n, e);
  const u64 mask = mod_mask(e);
  for (int step = 0; step < 4 * n; ++step) {
    const int i = static_cast<int>(rng() % n);
    const int j = static_cast<int>(rng() % n);
    if (i == j) {
      const u64 unit = (rng() & mask) | 1;
      for (int c = 0; c < n; ++c) u.at(i, c) = (u.at(i, c) * unit) & mask;
    } else {
      const u64 scale = rng() & mask;
      for (int c = 0; c < n; ++c) u.at(i, c) = (u.at(i, c) + scale * u.at(j, c)) & mask;
    }
  }
  return u;
}

}  // namespace

TEST_CASE("mat_mul_mod basics") {
  const ResidueMatrix a = bin({{1, 1, 1}});
  const ResidueMatrix b = ResidueMatrix::from_rows(1, {{1}, {1}, {1}});
  const ResidueMatrix prod = mat_mul_mod(a, b, 2);
  CHECK(prod.rows == 1);
  CHECK(prod.cols == 1);
  CHECK(prod.at(0, 0) == 3);

  const CssCode steane = catalog_get("steane");
  const ResidueMatrix overlaps = mat_mul_mod(steane.hx, steane.hz.transposed(), 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(overlaps.at(i, j) == (i == j ? 4 : 2));
    }
  }

  const ResidueMatrix empty(3, 0, 1);
  const ResidueMatrix prod2 = mat_mul_mod(bin({{1, 0, 1}, {0, 1, 1}}), empty, 1);
  CHECK(prod2.rows == 2);
  CHECK(prod2.cols == 0);

  CHECK_THROWS_AS(mat_mul_mod(a, bin({{1, 0}}), 1), Error);
}

TEST_CASE("howell_form canonical cases") {
  const ResidueMatrix m1 = ResidueMatrix::from_rows(2, {{2}});
  CHECK(howell_form(m1).h == m1);

  const ResidueMatrix m2 = ResidueMatrix::from_rows(2, {{1, 1}, {1, 3}});
  const HowellForm hf = howell_form(m2);
  CHECK(hf.h == ResidueMatrix::from_rows(2, {{1, 1}, {0, 2}}));

  const ResidueMatrix id = ResidueMatrix::identity(4, 3);
  CHECK(howell_form(id).h == id);
}

TEST_CASE("howell_form contract: h = u*a, span preserved, canonical") {
  std::mt19937_64 rng(7001);
  for (int trial = 0; trial < 60; ++trial) {
    const int e = 1 + static_cast<int>(rng() % 3);
    const int rows = static_cast<int>(rng() % 5);
    const int cols = static_cast<int>(rng() % 5);
    const ResidueMatrix a = brute::random_matrix(rng, rows, cols, e);
    const HowellForm hf = howell_form(a);

    CHECK(mat_mul_mod(hf.u, a, e) == hf.h);
    for (int r = 0; r < hf.h.rows; ++r) CHECK(row_in_span(a, hf.h.row(r)));
    for (int r = 0; r < a.rows; ++r) CHECK(row_in_span(hf.h, a.row(r)));

    // Canonical: invariant under an invertible change of generators, and a
    // fixed point of itself.
    if (rows > 0) {
      const ResidueMatrix mixed = mat_mul_mod(random_unimodular(rng, rows, e), a, e);
      CHECK(howell_form(mixed).h == hf.h);
    }
    CHECK(howell_form(hf.h).h == hf.h);
  }
}

TEST_CASE("solve_mod examples") {
  const auto x = solve_mod(bin({{1, 1, 1, 1}}), ResidueVector(1, {1}));
  REQUIRE(x.has_value());
  CHECK(x->entries == std::vector<u64>{1, 0, 0, 0});

  const ResidueMatrix dep = bin({{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}});
  const ResidueVector odd(1, {1, 1, 1});
  CHECK_FALSE(solve_mod(dep, odd).has_value());
  CHECK_FALSE(brute::solvable(dep, odd));

  CHECK_FALSE(solve_mod(ResidueMatrix::from_rows(2, {{2}}), ResidueVector(2, {1})).has_value());

  CHECK_THROWS_AS(solve_mod(bin({{1, 1}}), ResidueVector(1, {1, 1})), Error);
}

TEST_CASE("solve_mod soundness and completeness on random small instances") {
  std::mt19937_64 rng(7002);
  for (int trial = 0; trial < 150; ++trial) {
    const int e = 1 + static_cast<int>(rng() % 3);
    const int rows = static_cast<int>(rng() % 4);
    const int cols = static_cast<int>(rng() % 4);
    const ResidueMatrix a = brute::random_matrix(rng, rows, cols, e);

    ResidueVector b = zero_vector(e, rows);
    if (trial % 2 == 0 && cols > 0) {
      // Half the time force solvability by picking b in the image.
      brute::Vec x(static_cast<size_t>(cols));
      for (auto& v : x) v = rng() & mod_mask(e);
      b.entries = brute::apply(a, x, e);
    } else {
      for (auto& v : b.entries) v = rng() & mod_mask(e);
    }

    const auto x = solve_mod(a, b);
    CHECK(x.has_value() == brute::solvable(a, b));
    if (x) CHECK(mat_vec_mod(a, *x, e) == b);
  }
}

TEST_CASE("kernel_basis_mod examples and span equality") {
  const ResidueMatrix k1 = kernel_basis_mod(bin({{1, 1}}));
  CHECK(brute::row_span(k1) == brute::kernel(bin({{1, 1}})));

  const ResidueMatrix dep = bin({{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}});
  const ResidueMatrix k2 = kernel_basis_mod(dep);
  const auto expected = brute::span_closure({{1, 1, 1, 0}, {0, 0, 0, 1}}, 1, 4);
  CHECK(brute::row_span(k2) == expected);
  CHECK(brute::row_span(k2) == brute::kernel(dep));

  const ResidueMatrix two = ResidueMatrix::from_rows(2, {{2, 2}});
  CHECK(brute::row_span(kernel_basis_mod(two)) == brute::kernel(two));
  CHECK(brute::kernel(two) == brute::span_closure({{1, 1}, {2, 0}}, 2, 2));
}

TEST_CASE("kernel_basis_mod random span equality") {
  std::mt19937_64 rng(7003);
  for (int trial = 0; trial < 120; ++trial) {
    const int e = 1 + static_cast<int>(rng() % 3);
    const int rows = static_cast<int>(rng() % 4);
    const int cols = static_cast<int>(rng() % 4);
    const ResidueMatrix a = brute::random_matrix(rng, rows, cols, e);
    const ResidueMatrix k = kernel_basis_mod(a);
    for (int r = 0; r < k.rows; ++r) {
      CHECK(mat_vec_mod(a, k.row(r), e).is_zero());
    }
    CHECK(brute::row_span(k) == brute::kernel(a));
  }
}

TEST_CASE("module_invariants examples") {
  CHECK(module_invariants(ResidueMatrix(0, 2, 1)) == std::vector<int>{1, 1});
  CHECK(module_invariants(bin({{1, 1, 0}, {0, 1, 1}})) == std::vector<int>{1});
  CHECK(module_invariants(ResidueMatrix::from_rows(2, {{2}})) == std::vector<int>{1});
}

TEST_CASE("module_invariants match brute-force coset counts") {
  std::mt19937_64 rng(7004);
  for (int trial = 0; trial < 120; ++trial) {
    const int e = 1 + static_cast<int>(rng() % 3);
    const int rows = static_cast<int>(rng() % 4);
    const int cols = static_cast<int>(rng() % 4);
    const ResidueMatrix a = brute::random_matrix(rng, rows, cols, e);
    const auto exps = module_invariants(a);
    u64 order = 1;
    for (int ex : exps) order <<= ex;
    CHECK(order == brute::coset_count(a));
    for (size_t i = 1; i < exps.size(); ++i) CHECK(exps[i - 1] >= exps[i]);
  }
}

TEST_CASE("two_adic_level") {
  CHECK(two_adic_level(ResidueMatrix::from_rows(4, {{4, 2}, {2, 4}}), 8) == 1);
  CHECK(two_adic_level(ResidueMatrix(2, 2, 4), 8) == 8);
  CHECK(two_adic_level(ResidueMatrix::from_rows(4, {{8, 8}, {8, 8}}), 8) == 3);
  CHECK(two_adic_level(ResidueMatrix(0, 5, 1), 8) == 8);
}
