// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "bocklift/residue.hpp"

namespace bocklift {

// Howell normal form of the row module of `a` over Z_{2^e}.
//
// `h` is the unique canonical generating set of the row span: echelon with
// strictly increasing pivot columns, each pivot an exact power of two,
// entries above a pivot reduced modulo that pivot, and the span closed under
// the annihilator condition (for a pivot 2^v, the multiple 2^{e-v} times its
// row lies in the span of the later rows).  Unlike echelon forms over a
// field, `h` may have more rows than `a`; `u` has shape h.rows x a.rows and
// satisfies h = u * a modulo 2^e exactly.
struct HowellForm {
  ResidueMatrix h;
  ResidueMatrix u;
  std::vector<int> pivot_cols;       // one per row of h, strictly increasing
  std::vector<int> pivot_vals;       // 2-adic valuation of each pivot
};

HowellForm howell_form(const ResidueMatrix& a);

// Canonical solution of a*x = b modulo 2^e (a and b must share the modulus
// exponent).  Returns nullopt exactly when no solution exists; membership is
// decided by reduction against the Howell form of the column module, which
// is complete over Z_{2^e}.
std::optional<ResidueVector> solve_mod(const ResidueMatrix& a, const ResidueVector& b);

// Rows generating {x : a*x = 0 mod 2^e} exactly (may be empty).
ResidueMatrix kernel_basis_mod(const ResidueMatrix& a);

// Exponents (e1 >= e2 >= ...) with Z_{2^e}^cols / rowspan(a) isomorphic to
// the direct sum of Z_{2^{e_i}}; trivial factors are dropped.
std::vector<int> module_invariants(const ResidueMatrix& a);

// Number of Howell rows of the mod-2 reduction.
int rank_mod2(const ResidueMatrix& a);

}  // namespace bocklift
