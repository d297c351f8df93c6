// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#include "bocklift/phase_oracle.hpp"

#include <bit>
#include <string>

#include "bocklift/ring_linalg.hpp"

namespace bocklift {

namespace {

void require_oracle_size(const CssCode& code) {
  if (code.n > 64) {
    fail(ErrorKind::kCapExceeded, "phase oracle enumerates bit masks and requires n <= 64");
  }
}

u64 to_mask(const ResidueVector& v) {
  u64 mask = 0;
  for (int i = 0; i < v.length(); ++i) {
    if (v.entries[i] & 1) mask |= u64{1} << i;
  }
  return mask;
}

ResidueVector from_mask(u64 mask, int n) {
  ResidueVector v = zero_vector(1, n);
  for (int i = 0; i < n; ++i) v.entries[i] = (mask >> i) & 1;
  return v;
}

// Row-space basis of hx mod 2, as bit masks.
std::vector<u64> x_row_basis(const CssCode& code) {
  const HowellForm hf = howell_form(code.hx.reduced(1));
  std::vector<u64> rows;
  for (int r = 0; r < hf.h.rows; ++r) rows.push_back(to_mask(hf.h.row(r)));
  return rows;
}

u64 phase_of_string(const PhaseVector& theta, u64 v, u64 mask_m) {
  u64 acc = 0;
  for (u64 bits = v; bits; bits &= bits - 1) {
    acc += theta.theta.entries[std::countr_zero(bits)];
  }
  return acc & mask_m;
}

PhaseMultiset enumerate_coset(const PhaseVector& theta, u64 gamma_mask,
                              const std::vector<u64>& basis) {
  PhaseMultiset out;
  out.rank = static_cast<int>(basis.size());
  const u64 mask_m = mod_mask(theta.level());
  const u64 total = u64{1} << basis.size();
  // Gray-code walk over the row space; recompute the phase from the string
  // each step (supports incremental but rows are short at desk scale).
  u64 v = gamma_mask;
  u64 prev_gray = 0;
  out.counts[phase_of_string(theta, v, mask_m)]++;
  for (u64 i = 1; i < total; ++i) {
    const u64 gray = i ^ (i >> 1);
    const u64 flipped = gray ^ prev_gray;
    v ^= basis[std::countr_zero(flipped)];
    prev_gray = gray;
    out.counts[phase_of_string(theta, v, mask_m)]++;
  }
  return out;
}

u64 gamma_mask_for_class(const LogicalBasis& basis, u64 class_mask) {
  u64 gamma = 0;
  for (u64 bits = class_mask; bits; bits &= bits - 1) {
    gamma ^= to_mask(basis.gammas[std::countr_zero(bits)]);
  }
  return gamma;
}

}  // namespace

std::vector<u64> PhaseMultiset::distinct() const {
  std::vector<u64> out;
  out.reserve(counts.size());
  for (const auto& [exponent, count] : counts) out.push_back(exponent);
  return out;
}

PhaseMultiset coset_phases(const CssCode& code, const PhaseVector& theta,
                           const ResidueVector& gamma, int rank_cap) {
  require_oracle_size(code);
  if (theta.theta.length() != code.n || gamma.length() != code.n) {
    fail(ErrorKind::kDimensionMismatch, "phase vector and cocycle must have length n");
  }
  for (u64 x : gamma.entries) {
    if (x > 1) fail(ErrorKind::kValidation, "cocycle entries must be binary");
  }
  const ResidueVector hz_gamma = mat_vec_mod(code.hz, gamma, 1);
  if (!hz_gamma.is_zero()) {
    fail(ErrorKind::kNotACocycle, "gamma is not in ker(hz mod 2)");
  }
  const std::vector<u64> basis = x_row_basis(code);
  if (static_cast<int>(basis.size()) > rank_cap) {
    fail(ErrorKind::kCapExceeded,
         "rank(hx mod 2) = " + std::to_string(basis.size()) + " exceeds the enumeration cap");
  }
  return enumerate_coset(theta, to_mask(gamma), basis);
}

LogicalVerdict is_logical_diagonal(const CssCode& code, const PhaseVector& theta,
                                   int rank_cap, int class_cap) {
  require_oracle_size(code);
  if (theta.theta.length() != code.n) {
    fail(ErrorKind::kDimensionMismatch, "phase vector length must equal n");
  }
  const std::vector<u64> basis = x_row_basis(code);
  if (static_cast<int>(basis.size()) > rank_cap) {
    fail(ErrorKind::kCapExceeded, "rank(hx mod 2) exceeds the enumeration cap");
  }
  const LogicalBasis logical = logical_bases(code);
  if (logical.k() > class_cap) {
    fail(ErrorKind::kCapExceeded,
         "k = " + std::to_string(logical.k()) + " exceeds the class enumeration cap");
  }

  LogicalVerdict verdict;
  for (u64 c = 0; c < (u64{1} << logical.k()); ++c) {
    const u64 gamma_mask = gamma_mask_for_class(logical, c);
    const PhaseMultiset phases = enumerate_coset(theta, gamma_mask, basis);
    if (!phases.singleton()) {
      verdict.logical = false;
      verdict.offender = OffendingCoset{c, from_mask(gamma_mask, code.n), phases.distinct()};
      return verdict;
    }
  }
  verdict.logical = true;
  return verdict;
}

LogicalActionTable logical_action(const CssCode& code, const PhaseVector& theta,
                                  int rank_cap, int class_cap) {
  require_oracle_size(code);
  const std::vector<u64> basis = x_row_basis(code);
  if (static_cast<int>(basis.size()) > rank_cap) {
    fail(ErrorKind::kCapExceeded, "rank(hx mod 2) exceeds the enumeration cap");
  }
  const LogicalBasis logical = logical_bases(code);
  if (logical.k() > class_cap) {
    fail(ErrorKind::kCapExceeded, "k exceeds the class enumeration cap");
  }

  LogicalActionTable table;
  table.level = theta.level();
  table.k = logical.k();
  table.entries.resize(u64{1} << logical.k());
  for (u64 c = 0; c < (u64{1} << logical.k()); ++c) {
    const u64 gamma_mask = gamma_mask_for_class(logical, c);
    const PhaseMultiset phases = enumerate_coset(theta, gamma_mask, basis);
    if (!phases.singleton()) {
      fail(ErrorKind::kNotLogical,
           "theta is not a logical diagonal at level " + std::to_string(theta.level()));
    }
    table.entries[c] = phases.counts.begin()->first;
  }
  return table;
}

bool same_logical(const CssCode& code, const PhaseVector& theta1, const PhaseVector& theta2) {
  if (theta1.level() != theta2.level()) {
    fail(ErrorKind::kLevelMismatch, "phase vectors live at different levels");
  }
  return logical_action(code, theta1) == logical_action(code, theta2);
}

SquareRootCheck verify_square_root(const CssCode& code, const PhaseVector& theta,
                                   const PhaseVector& theta_hat) {
  if (theta_hat.level() != theta.level() + 1) {
    fail(ErrorKind::kLevelMismatch, "theta_hat must live one level above theta");
  }
  const LogicalVerdict base = is_logical_diagonal(code, theta);
  if (!base.logical) {
    fail(ErrorKind::kNotLogical,
         "theta is not a logical diagonal at level " + std::to_string(theta.level()));
  }

  SquareRootCheck check;
  const LogicalVerdict hat = is_logical_diagonal(code, theta_hat);
  if (!hat.logical) {
    check.ok = false;
    check.reason = "theta_hat is not a logical diagonal at level " +
                   std::to_string(theta_hat.level());
    check.offender = hat.offender;
    return check;
  }

  const LogicalActionTable base_table = logical_action(code, theta);
  const LogicalActionTable hat_table = logical_action(code, theta_hat);
  const u64 mask_m = mod_mask(theta.level());
  for (u64 c = 0; c < hat_table.entries.size(); ++c) {
    // Squaring the hat gate halves the angle denominator, so its class
    // exponents must reproduce theta's modulo 2^m.
    if ((hat_table.entries[c] & mask_m) != base_table.entries[c]) {
      check.ok = false;
      check.reason = "squared action disagrees on a logical class";
      check.mismatch_class = c;
      return check;
    }
  }
  check.ok = true;
  return check;
}

FormalPhysicalReport compare_formal_physical(const CssCode& code, const PhaseVector& theta) {
  FormalPhysicalReport report;
  report.formal_cycle = is_cycle(code, theta);
  const LogicalVerdict verdict = is_logical_diagonal(code, theta);
  report.physically_logical = verdict.logical;
  report.witness = verdict.offender;
  return report;
}

}  // namespace bocklift
