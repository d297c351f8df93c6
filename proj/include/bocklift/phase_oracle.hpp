// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bocklift/bockstein.hpp"
#include "bocklift/css_code.hpp"

namespace bocklift {

// Brute-force ground truth for the action of diagonal rotations on the code
// space: phases are evaluated on actual computational-basis strings (XOR
// cosets of the X row space), with none of the chain-complex machinery.
// Strings are enumerated as bit masks, so these operations require n <= 64.

inline constexpr int kOracleRankCap = 20;  // enumerated coset size 2^rank
inline constexpr int kOracleClassCap = 12;

struct PhaseMultiset {
  int rank = 0;                 // rank of hx mod 2; coset size is 2^rank
  std::map<u64, u64> counts;    // exponent mod 2^m -> multiplicity
  bool singleton() const { return counts.size() <= 1; }
  std::vector<u64> distinct() const;
};

struct OffendingCoset {
  u64 class_mask = 0;           // coefficients over the gamma basis
  ResidueVector gamma;          // the enumerated representative
  std::vector<u64> exponents;   // the distinct phases observed
};

struct LogicalVerdict {
  bool logical = false;
  std::optional<OffendingCoset> offender;
};

struct LogicalActionTable {
  int level = 1;
  int k = 0;
  std::vector<u64> entries;  // indexed by class mask, size 2^k

  bool operator==(const LogicalActionTable& other) const = default;
};

struct SquareRootCheck {
  bool ok = false;
  std::string reason;                      // empty when ok
  std::optional<OffendingCoset> offender;  // hat vector not logical
  std::optional<u64> mismatch_class;       // squared table disagrees
};

struct FormalPhysicalReport {
  bool formal_cycle = false;
  bool physically_logical = false;
  std::optional<OffendingCoset> witness;  // present when the oracle says no
  bool agree() const { return formal_cycle == physically_logical; }
};

// Multiset of phase exponents over the strings gamma xor h, h in the mod-2
// row space of hx.  gamma must be a binary cocycle (hz * gamma even).
PhaseMultiset coset_phases(const CssCode& code, const PhaseVector& theta,
                           const ResidueVector& gamma, int rank_cap = kOracleRankCap);

// True iff every logical class coset carries a constant phase; classes are
// enumerated over the gamma basis of logical_bases.
LogicalVerdict is_logical_diagonal(const CssCode& code, const PhaseVector& theta,
                                   int rank_cap = kOracleRankCap,
                                   int class_cap = kOracleClassCap);

// Requires is_logical_diagonal; the zero class always maps to exponent 0.
LogicalActionTable logical_action(const CssCode& code, const PhaseVector& theta,
                                  int rank_cap = kOracleRankCap,
                                  int class_cap = kOracleClassCap);

// Strict equality of logical action tables at a common level.
bool same_logical(const CssCode& code, const PhaseVector& theta1, const PhaseVector& theta2);

// Checks that theta_hat is itself logical one level up and that squaring its
// gate reproduces theta's gate on every class (entries agree modulo 2^m).
SquareRootCheck verify_square_root(const CssCode& code, const PhaseVector& theta,
                                   const PhaseVector& theta_hat);

// Runs the formal cycle test and the physical oracle side by side and
// reports agreement or the witness coset; adjudicates neither.
FormalPhysicalReport compare_formal_physical(const CssCode& code, const PhaseVector& theta);

}  // namespace bocklift
