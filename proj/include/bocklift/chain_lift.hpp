// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "bocklift/bockstein.hpp"
#include "bocklift/css_code.hpp"

namespace bocklift {

// A lift of the parity-check matrices themselves: hx_hat = hx + 2^m a and
// hz_hat = hz + 2^m b over Z_{2^{m+1}}, reducing to the originals modulo
// 2^m and commuting modulo 2^{m+1}.
struct ChainLiftResult {
  int level = 1;          // m
  ResidueMatrix hx_hat;   // exponent m+1
  ResidueMatrix hz_hat;   // exponent m+1
  ResidueMatrix a;        // exponent 1, m_x x n
  ResidueMatrix b;        // exponent 1, m_z x n
  int solution_space_dim = 0;
};

struct ChainLiftOutcome {
  ResidueMatrix residual;                // exponent 1, m_x x m_z
  std::optional<ChainLiftResult> result; // absent = certified unsolvable
  bool solvable() const { return result.has_value(); }
};

struct ComplexSideReport {
  bool cycle = false;
  std::optional<BocksteinReport> defect;  // present when cycle
  std::optional<bool> lift_ok;            // present when cycle
};

struct ReliftReport {
  ChainLiftOutcome chain;
  ComplexSideReport original;
  ComplexSideReport lifted;
  bool identical = false;  // the two complexes agree entry-for-entry mod 2^{m+1}
};

// R = (integer product hx * hz^T reduced mod 2^{m+1}) / 2^m; requires
// commutativity modulo 2^m.
ResidueMatrix residual_matrix(const CssCode& code, int m);

// Solves a * (hz mod 2)^T + (hx mod 2) * b^T = R over GF(2) by vectorizing
// into one linear system (the 2^{2m} cross term vanishes modulo 2^{m+1}),
// then assembles and re-verifies the lifted matrices exactly.
ChainLiftOutcome solve_chain_lift(const CssCode& code, int m);

// The exponent-(m+1) code built from a chain lift.
CssCode lifted_code(const CssCode& code, const ChainLiftResult& lift);

// Re-runs cycle / defect / lift analysis for theta against both the original
// complex and the lifted one, reporting the comparison.
ReliftReport relift_analysis(const CssCode& code, int m, const PhaseVector& theta);

}  // namespace bocklift
