// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "bocklift/css_code.hpp"
#include "bocklift/residue.hpp"

namespace bocklift {

// Coefficients of a transversal diagonal rotation: entries in [0, 2^m) for
// level m, encoding the physical rotation angle pi / 2^{m-1} per unit.
struct PhaseVector {
  ResidueVector theta;
  int level() const { return theta.exponent; }

  bool operator==(const PhaseVector& other) const = default;
};

PhaseVector make_phase(ResidueVector theta);
PhaseVector phase_from_entries(int level, std::vector<u64> entries);

// Refinement defect of a level-m cycle: hx * theta = 2^m r modulo 2^{m+1}.
// `trivial` holds exactly when r = hx * omega has a binary solution, i.e.
// the class of r in Z_2^{m_x} / im(hx mod 2) vanishes; `witness` carries the
// canonical solution in that case.  `well_defined` records whether the
// stabilizers commute modulo 2^{m+1}, which is what makes the defect a class
// invariant rather than a property of the chosen representative.
struct BocksteinReport {
  ResidueVector defect;  // exponent 1, length m_x
  bool well_defined = false;
  bool trivial = false;
  std::optional<ResidueVector> witness;  // exponent 1, length n
};

// A one-level refinement theta_hat = theta + hz^T s + 2^m omega with
// hx * theta_hat = 0 modulo 2^{m+1}.
struct LiftResult {
  PhaseVector theta_hat;  // level m+1
  ResidueVector s;        // exponent m
  ResidueVector omega;    // exponent 1
};

struct LiftOutcome {
  BocksteinReport report;
  std::optional<LiftResult> lift;  // present iff report.trivial
};

struct MultiLevelLift {
  std::vector<PhaseVector> sequence;  // levels 2 .. reached
  std::optional<int> obstruction_level;
  std::optional<ResidueVector> obstruction_defect;
  bool ok() const { return !obstruction_level.has_value(); }
};

// hx * theta = 0 modulo 2^level, on the code's declared entries.
bool is_cycle(const CssCode& code, const PhaseVector& theta);

// Requires is_cycle; see BocksteinReport.
BocksteinReport bockstein_defect(const CssCode& code, const PhaseVector& theta);

// Canonical one-level lift theta_hat = theta + 2^m omega (s = 0) when the
// defect is trivial; otherwise the defect is returned as a certified
// obstruction.  Proceeds even when the defect is representative-dependent
// (report.well_defined = false); the lift invariants hold regardless.
LiftOutcome lift_once(const CssCode& code, const PhaseVector& theta);

// Iterates lift_once from a level-1 cycle up to the target level, stopping
// at the first nontrivial defect.
MultiLevelLift lift_to_level(const CssCode& code, const PhaseVector& theta, int target);

// A lift of theta_a chosen inside the family theta + hz^T s + 2^m omega so
// that <theta_hat, gamma_b> = delta_ab modulo 2^{m+1} for every basis
// cocycle.  Requires <theta_a, gamma_b> = delta_ab modulo 2^m on input and a
// trivial defect; solves one linear system over Z_{2^m} in (s, omega).
PhaseVector lift_preserving_pairing(const CssCode& code, const PhaseVector& theta_a,
                                    const LogicalBasis& basis, int index_a);

// End-to-end construction of a transversal pi/2^m rotation for logical
// index a: requires independent X generators and commutativity modulo
// 2^{m+1}, then iterates pairing-preserving lifts from level 1.
PhaseVector logical_rotation_program(const CssCode& code, int index_a, int m);

}  // namespace bocklift
