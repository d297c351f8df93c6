// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#include "bocklift/chain_lift.hpp"

#include <string>

#include "bocklift/ring_linalg.hpp"

namespace bocklift {

namespace {

ResidueMatrix add_scaled_binary(const ResidueMatrix& base, const ResidueMatrix& scaled,
                                int m) {
  // base mod 2^{m+1} plus 2^m * scaled, entrywise.
  ResidueMatrix out = base.reduced(m + 1);
  const u64 mask = mod_mask(m + 1);
  for (int r = 0; r < out.rows; ++r) {
    for (int c = 0; c < out.cols; ++c) {
      out.at(r, c) = (out.at(r, c) + (scaled.at(r, c) << m)) & mask;
    }
  }
  return out;
}

}  // namespace

ResidueMatrix residual_matrix(const CssCode& code, int m) {
  if (m < 1 || m >= kMaxExponent) fail(ErrorKind::kValidation, "level out of range");
  if (max_commutativity_level(code, m) < m) {
    fail(ErrorKind::kPrecondition,
         "stabilizers do not commute modulo 2^" + std::to_string(m));
  }
  const ResidueMatrix product = mat_mul_mod(code.hx, code.hz.transposed(), m + 1);
  ResidueMatrix residual(code.hx.rows, code.hz.rows, 1);
  for (int i = 0; i < residual.rows; ++i) {
    for (int k = 0; k < residual.cols; ++k) {
      residual.at(i, k) = product.at(i, k) >> m;
    }
  }
  return residual;
}

ChainLiftOutcome solve_chain_lift(const CssCode& code, int m) {
  ChainLiftOutcome outcome;
  outcome.residual = residual_matrix(code, m);

  const int mx = code.hx.rows;
  const int mz = code.hz.rows;
  const int n = code.n;
  const ResidueMatrix hx2 = code.hx.reduced(1);
  const ResidueMatrix hz2 = code.hz.reduced(1);

  // Unknowns: vec(a) then vec(b); equation (i,k) reads
  //   sum_j a[i][j] hz2[k][j] + sum_j hx2[i][j] b[k][j] = R[i][k].
  const int unknowns = n * (mx + mz);
  const int equations = mx * mz;
  ResidueMatrix system(equations, unknowns, 1);
  ResidueVector rhs = zero_vector(1, equations);
  for (int i = 0; i < mx; ++i) {
    for (int k = 0; k < mz; ++k) {
      const int eq = i * mz + k;
      for (int j = 0; j < n; ++j) {
        system.at(eq, i * n + j) = hz2.at(k, j);
        system.at(eq, mx * n + k * n + j) = hx2.at(i, j);
      }
      rhs.entries[eq] = outcome.residual.at(i, k);
    }
  }

  const auto solution = solve_mod(system, rhs);
  if (!solution) return outcome;  // certified: R is outside the image

  ChainLiftResult result;
  result.level = m;
  result.a = ResidueMatrix(mx, n, 1);
  result.b = ResidueMatrix(mz, n, 1);
  for (int i = 0; i < mx; ++i)
    for (int j = 0; j < n; ++j) result.a.at(i, j) = solution->entries[i * n + j];
  for (int k = 0; k < mz; ++k)
    for (int j = 0; j < n; ++j) result.b.at(k, j) = solution->entries[mx * n + k * n + j];
  result.hx_hat = add_scaled_binary(code.hx, result.a, m);
  result.hz_hat = add_scaled_binary(code.hz, result.b, m);
  result.solution_space_dim = unknowns - rank_mod2(system);

  if (!mat_mul_mod(result.hx_hat, result.hz_hat.transposed(), m + 1).is_zero()) {
    fail(ErrorKind::kInternal, "chain lift fails commutativity modulo 2^" +
                                   std::to_string(m + 1));
  }
  if (result.hx_hat.reduced(m) != code.hx.reduced(m) ||
      result.hz_hat.reduced(m) != code.hz.reduced(m)) {
    fail(ErrorKind::kInternal, "chain lift does not reduce to the original matrices");
  }
  outcome.result = std::move(result);
  return outcome;
}

CssCode lifted_code(const CssCode& code, const ChainLiftResult& lift) {
  return make_code(code.name + "^", code.n, lift.hx_hat, lift.hz_hat, lift.level + 1);
}

namespace {

ComplexSideReport analyze_side(const CssCode& code, const PhaseVector& theta) {
  ComplexSideReport side;
  side.cycle = is_cycle(code, theta);
  if (!side.cycle) return side;
  side.defect = bockstein_defect(code, theta);
  side.lift_ok = lift_once(code, theta).lift.has_value();
  return side;
}

}  // namespace

ReliftReport relift_analysis(const CssCode& code, int m, const PhaseVector& theta) {
  ReliftReport report;
  report.chain = solve_chain_lift(code, m);
  if (!report.chain.solvable()) {
    fail(ErrorKind::kPrecondition, "chain lift is unsolvable; nothing to re-analyze");
  }
  const CssCode lifted = lifted_code(code, *report.chain.result);
  report.original = analyze_side(code, theta);
  report.lifted = analyze_side(lifted, theta);
  report.identical = lifted.hx.reduced(m + 1) == code.hx.reduced(m + 1) &&
                     lifted.hz.reduced(m + 1) == code.hz.reduced(m + 1);
  return report;
}

}  // namespace bocklift
