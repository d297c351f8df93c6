// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bocklift/residue.hpp"

namespace bocklift {

inline constexpr int kDefaultCap = 8;

// A CSS code given by its parity-check matrices, viewed as the length-two
// chain complex with boundary maps hz^T and hx.  Entries live in
// [0, 2^entry_exponent); plain binary codes have entry_exponent 1.
struct CssCode {
  std::string name;
  int n = 0;
  ResidueMatrix hx;  // m_x x n
  ResidueMatrix hz;  // m_z x n
  int entry_exponent = 1;
};

CssCode make_code(std::string name, int n, ResidueMatrix hx, ResidueMatrix hz,
                  int entry_exponent);

struct ValidationReport {
  int n = 0;
  int m_x = 0;
  int m_z = 0;
  int entry_exponent = 1;
  int rank_x = 0;  // rank of hx mod 2
  int rank_z = 0;  // rank of hz mod 2
  int k = 0;       // n - rank_x - rank_z
  bool commutes_mod2 = false;
  bool x_independent = false;
};

// Dual bases of binary logical representatives: hz*gamma = 0 and
// hx*theta = 0 modulo 2, paired so that <theta_a, gamma_b> = delta_ab mod 2.
struct LogicalBasis {
  std::vector<ResidueVector> gammas;  // exponent 1
  std::vector<ResidueVector> thetas;  // exponent 1
  int k() const { return static_cast<int>(gammas.size()); }
};

struct DivisibilityReport {
  int cap = kDefaultCap;
  std::vector<u64> weights;     // mod-2 row weights of hx
  std::vector<int> valuations;  // 2-adic valuation of each weight, capped
  int d = 0;                    // min valuation: 2^d divides every weight
};

struct ClassWitness {
  bool equal = false;
  std::optional<ResidueVector> s;  // theta1 - theta2 = hz^T s when equal
};

// Rejects (throws) on dimension mismatch or when the mod-2 reductions fail
// hx * hz^T = 0; the offending entry is named in the message.
ValidationReport validate(const CssCode& code);

// Largest m <= cap with the exact integer product hx * hz^T divisible by
// 2^m entrywise.  Assumes a validated code.
int max_commutativity_level(const CssCode& code, int cap = kDefaultCap);

bool x_generators_independent(const CssCode& code);

// Requires entry_exponent = 1.  A zero-weight row reports valuation = cap.
// For every level v < d, the refinement defect of the all-ones phase vector
// at level v is the all-zero vector.
DivisibilityReport divisibility_report(const CssCode& code, int cap = kDefaultCap);

// Invariant factor exponents of ker(hx mod 2^m) / im(hz^T mod 2^m).
// Throws kIllDefinedHomology unless commutativity holds modulo 2^m.
std::vector<int> homology_structure(const CssCode& code, int m);

LogicalBasis logical_bases(const CssCode& code);

// Decides whether theta1 and theta2 are cycles in the same class at level m,
// returning a witness s with theta1 - theta2 = hz^T s mod 2^m when they are.
ClassWitness classes_equal(const CssCode& code, const ResidueVector& theta1,
                           const ResidueVector& theta2, int m);

}  // namespace bocklift
