// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#include "bocklift/bockstein.hpp"

#include <string>

#include "bocklift/ring_linalg.hpp"

namespace bocklift {

namespace {

void require_cycle(const CssCode& code, const PhaseVector& theta) {
  if (theta.theta.length() != code.n) {
    fail(ErrorKind::kDimensionMismatch, "phase vector length must equal n");
  }
  if (!is_cycle(code, theta)) {
    fail(ErrorKind::kNotACycle,
         "hx * theta != 0 modulo 2^" + std::to_string(theta.level()));
  }
}

// Exact integer inner product of canonical representatives, mod 2^64.
u64 dot(const ResidueVector& a, const ResidueVector& b) {
  u64 acc = 0;
  for (int i = 0; i < a.length(); ++i) acc += a.entries[i] * b.entries[i];
  return acc;
}

}  // namespace

PhaseVector make_phase(ResidueVector theta) { return PhaseVector{std::move(theta)}; }

PhaseVector phase_from_entries(int level, std::vector<u64> entries) {
  return PhaseVector{ResidueVector(level, std::move(entries))};
}

bool is_cycle(const CssCode& code, const PhaseVector& theta) {
  if (theta.theta.length() != code.n) {
    fail(ErrorKind::kDimensionMismatch, "phase vector length must equal n");
  }
  return mat_vec_mod(code.hx, theta.theta, theta.level()).is_zero();
}

BocksteinReport bockstein_defect(const CssCode& code, const PhaseVector& theta) {
  require_cycle(code, theta);
  const int m = theta.level();

  // hx * theta vanishes mod 2^m, so the residue mod 2^{m+1} is 2^m times a
  // binary defect vector.
  const ResidueVector product = mat_vec_mod(code.hx, theta.theta, m + 1);
  BocksteinReport report;
  report.defect = zero_vector(1, code.hx.rows);
  for (int i = 0; i < code.hx.rows; ++i) {
    report.defect.entries[i] = product.entries[i] >> m;
  }
  report.well_defined = max_commutativity_level(code, m + 1) == m + 1;
  report.witness = solve_mod(code.hx.reduced(1), report.defect);
  report.trivial = report.witness.has_value();
  return report;
}

LiftOutcome lift_once(const CssCode& code, const PhaseVector& theta) {
  LiftOutcome outcome;
  outcome.report = bockstein_defect(code, theta);
  if (!outcome.report.trivial) return outcome;

  const int m = theta.level();
  const ResidueVector& omega = *outcome.report.witness;
  ResidueVector hat = theta.theta.reduced(m + 1);
  for (int j = 0; j < code.n; ++j) {
    hat.entries[j] = (hat.entries[j] + (omega.entries[j] << m)) & mod_mask(m + 1);
  }

  LiftResult lift;
  lift.theta_hat = make_phase(std::move(hat));
  lift.s = zero_vector(m, code.hz.rows);
  lift.omega = omega;
  if (!is_cycle(code, lift.theta_hat)) {
    fail(ErrorKind::kInternal, "constructed lift is not a cycle");
  }
  if (lift.theta_hat.theta.reduced(m) != theta.theta) {
    fail(ErrorKind::kInternal, "constructed lift does not reduce to its input");
  }
  outcome.lift = std::move(lift);
  return outcome;
}

MultiLevelLift lift_to_level(const CssCode& code, const PhaseVector& theta, int target) {
  if (theta.level() != 1) {
    fail(ErrorKind::kPrecondition, "multi-level lifting starts from a level-1 cycle");
  }
  if (target < 2 || target > kMaxExponent) {
    fail(ErrorKind::kValidation, "target level out of range");
  }
  require_cycle(code, theta);

  MultiLevelLift result;
  PhaseVector current = theta;
  for (int level = 1; level < target; ++level) {
    LiftOutcome step = lift_once(code, current);
    if (!step.lift) {
      result.obstruction_level = level;
      result.obstruction_defect = step.report.defect;
      return result;
    }
    current = step.lift->theta_hat;
    result.sequence.push_back(current);
  }
  return result;
}

PhaseVector lift_preserving_pairing(const CssCode& code, const PhaseVector& theta_a,
                                    const LogicalBasis& basis, int index_a) {
  require_cycle(code, theta_a);
  if (index_a < 0 || index_a >= basis.k()) {
    fail(ErrorKind::kUsage, "logical index out of range");
  }
  const int m = theta_a.level();
  const int k = basis.k();
  const u64 mask_m = mod_mask(m);
  const u64 mask_m1 = mod_mask(m + 1);

  // Pairing hypothesis at the current level.
  std::vector<u64> pair_defect(static_cast<size_t>(k));
  for (int b = 0; b < k; ++b) {
    const u64 delta = b == index_a ? 1 : 0;
    const u64 c = dot(theta_a.theta, basis.gammas[b]) - delta;
    if ((c & mask_m) != 0) {
      fail(ErrorKind::kPairingViolated,
           "<theta, gamma_" + std::to_string(b) + "> != delta modulo 2^" + std::to_string(m));
    }
    pair_defect[b] = c;
  }

  const BocksteinReport report = bockstein_defect(code, theta_a);
  if (!report.trivial) {
    fail(ErrorKind::kNoLift, "refinement defect is a certified obstruction; no lift exists");
  }
  const ResidueVector& omega0 = *report.witness;
  const ResidueMatrix x_kernel = kernel_basis_mod(code.hx.reduced(1));
  const int kk = x_kernel.rows;

  // Unknowns over Z_{2^m}: s (m_z of them) and the kernel coefficients t of
  // omega = omega0 xor (t * x_kernel).  One equation per basis cocycle:
  //   s.u_b + 2^{m-1} <omega, gamma_b>  =  -c_b/2   (mod 2^m)
  // where hz * gamma_b = 2 u_b and c_b is the integer pairing defect.  Only
  // t mod 2 survives thanks to the 2^{m-1} coefficient.
  const int unknowns = code.hz.rows + kk;
  ResidueMatrix system(k, unknowns, m);
  ResidueVector rhs = zero_vector(m, k);
  const u64 half = m >= 1 ? (u64{1} << (m - 1)) : 1;
  for (int b = 0; b < k; ++b) {
    const ResidueVector hz_gamma = mat_vec_mod(code.hz, basis.gammas[b], m + 1);
    for (int i = 0; i < code.hz.rows; ++i) {
      if ((hz_gamma.entries[i] & 1) != 0) {
        fail(ErrorKind::kInternal, "basis cocycle escaped ker(hz mod 2)");
      }
      system.at(b, i) = (hz_gamma.entries[i] >> 1) & mask_m;
    }
    for (int j = 0; j < kk; ++j) {
      const u64 pair = dot(x_kernel.row(j), basis.gammas[b]) & 1;
      system.at(b, code.hz.rows + j) = (half * pair) & mask_m;
    }
    const u64 c_half = ((pair_defect[b] & mask_m1) >> 1) & mask_m;
    const u64 omega_pair = dot(omega0, basis.gammas[b]) & 1;
    rhs.entries[b] = (0 - c_half - half * omega_pair) & mask_m;
  }

  const auto solution = solve_mod(system, rhs);
  if (!solution) {
    fail(ErrorKind::kInternal,
         "pairing-preserving lift system is unsolvable although a lift exists");
  }

  ResidueVector s = zero_vector(m, code.hz.rows);
  for (int i = 0; i < code.hz.rows; ++i) s.entries[i] = solution->entries[i];
  ResidueVector omega = omega0;
  for (int j = 0; j < kk; ++j) {
    if (solution->entries[code.hz.rows + j] & 1) {
      for (int c = 0; c < code.n; ++c) omega.entries[c] ^= x_kernel.at(j, c);
    }
  }

  ResidueVector hat = theta_a.theta.reduced(m + 1);
  const ResidueVector boundary = mat_vec_mod(code.hz.transposed(), s, m + 1);
  for (int j = 0; j < code.n; ++j) {
    hat.entries[j] = (hat.entries[j] + boundary.entries[j] + (omega.entries[j] << m)) & mask_m1;
  }
  PhaseVector result = make_phase(std::move(hat));

  // Exact re-verification; failures here falsify the construction rather
  // than silently returning a bad lift.
  if (!is_cycle(code, result)) {
    fail(ErrorKind::kInternal, "pairing-preserving lift is not a cycle at level " +
                                   std::to_string(m + 1));
  }
  for (int b = 0; b < k; ++b) {
    const u64 delta = b == index_a ? 1 : 0;
    if (((dot(result.theta, basis.gammas[b]) - delta) & mask_m1) != 0) {
      fail(ErrorKind::kInternal, "pairing-preserving lift misses the pairing target");
    }
  }
  return result;
}

PhaseVector logical_rotation_program(const CssCode& code, int index_a, int m) {
  if (m < 1 || m >= kMaxExponent) fail(ErrorKind::kValidation, "level out of range");
  if (!x_generators_independent(code)) {
    fail(ErrorKind::kHypothesisViolated, "X stabilizer generators are linearly dependent");
  }
  if (max_commutativity_level(code, m + 1) != m + 1) {
    fail(ErrorKind::kHypothesisViolated,
         "stabilizers do not commute modulo 2^" + std::to_string(m + 1));
  }

  const LogicalBasis basis = logical_bases(code);
  if (index_a < 0 || index_a >= basis.k()) {
    fail(ErrorKind::kUsage, "logical index out of range for k = " + std::to_string(basis.k()));
  }

  PhaseVector theta = make_phase(basis.thetas[index_a]);
  for (int level = 1; level <= m; ++level) {
    theta = lift_preserving_pairing(code, theta, basis, index_a);
  }
  return theta;
}

}  // namespace bocklift
