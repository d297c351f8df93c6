// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <bit>
#include <random>

#include "bocklift/bockstein.hpp"
#include "bocklift/catalog.hpp"
#include "bocklift/phase_oracle.hpp"
#include "bocklift/ring_linalg.hpp"
#include "brute.hpp"

using namespace bocklift;

namespace {

ResidueMatrix bin(const std::vector<std::vector<u64>>& rows) {
  return ResidueMatrix::from_rows(1, rows);
}

// Independent Theorem-1 oracle: does any binary omega satisfy
// hx * omega = r mod 2?  Walks all 2^n candidates.
bool omega_exists(const CssCode& code, const ResidueVector& defect) {
  for (u64 mask = 0; mask < (u64{1} << code.n); ++mask) {
    ResidueVector omega = zero_vector(1, code.n);
    for (int j = 0; j < code.n; ++j) omega.entries[j] = (mask >> j) & 1;
    if (mat_vec_mod(code.hx, omega, 1) == defect) return true;
  }
  return false;
}

// Random CSS code with binary entries: hz rows are sampled from ker(hx).
CssCode random_css(std::mt19937_64& rng, int n, int mx, int mz, bool force_dependent) {
  ResidueMatrix hx = brute::random_matrix(rng, mx, n, 1);
  if (force_dependent && mx >= 2) {
    for (int c = 0; c < n; ++c) {
      u64 sum = 0;
      for (int r = 0; r + 1 < mx; ++r) sum ^= hx.at(r, c);
      hx.at(mx - 1, c) = sum;
    }
  }
  const ResidueMatrix kern = kernel_basis_mod(hx);
  ResidueMatrix hz(mz, n, 1);
  for (int r = 0; r < mz; ++r) {
    for (int g = 0; g < kern.rows; ++g) {
      if (rng() & 1) {
        for (int c = 0; c < n; ++c) hz.at(r, c) ^= kern.at(g, c);
      }
    }
  }
  return make_code("rand", n, hx, hz, 1);
}

// Random cycle at the requested level: a random combination of the kernel
// generators of hx over Z_{2^level}.
PhaseVector random_cycle(std::mt19937_64& rng, const CssCode& code, int level) {
  const ResidueMatrix kern = kernel_basis_mod(code.hx.reduced(level));
  ResidueVector theta = zero_vector(level, code.n);
  for (int g = 0; g < kern.rows; ++g) {
    const u64 coeff = rng() & mod_mask(level);
    for (int c = 0; c < code.n; ++c) {
      theta.entries[c] = (theta.entries[c] + coeff * kern.at(g, c)) & mod_mask(level);
    }
  }
  return make_phase(std::move(theta));
}

ResidueVector boundary_shift(std::mt19937_64& rng, const CssCode& code,
                             const ResidueVector& theta) {
  const int m = theta.exponent;
  ResidueVector s = zero_vector(m, code.hz.rows);
  for (auto& v : s.entries) v = rng() & mod_mask(m);
  return vec_add_mod(theta, mat_vec_mod(code.hz.transposed(), s, m), m);
}

}  // namespace

TEST_CASE("is_cycle") {
  const CssCode steane = catalog_get("steane");
  CHECK(is_cycle(steane, phase_from_entries(2, std::vector<u64>(7, 1))));

  const CssCode four = catalog_get("c4");
  CHECK(is_cycle(four, phase_from_entries(1, {1, 1, 0, 0})));
  CHECK_FALSE(is_cycle(four, phase_from_entries(2, {1, 1, 0, 0})));
  CHECK(is_cycle(four, phase_from_entries(3, {0, 0, 0, 0})));

  CHECK_THROWS_AS(is_cycle(four, phase_from_entries(1, {1, 1})), Error);
}

TEST_CASE("bockstein_defect worked cases") {
  const CssCode four = catalog_get("c4");

  const BocksteinReport ones = bockstein_defect(four, phase_from_entries(1, {1, 1, 1, 1}));
  CHECK(ones.defect.entries == std::vector<u64>{0});
  CHECK(ones.trivial);
  CHECK(ones.witness->is_zero());
  CHECK(ones.well_defined);

  const BocksteinReport pair = bockstein_defect(four, phase_from_entries(1, {1, 1, 0, 0}));
  CHECK(pair.defect.entries == std::vector<u64>{1});
  CHECK(pair.trivial);
  CHECK(pair.witness->entries == std::vector<u64>{1, 0, 0, 0});

  const CssCode dep = catalog_get("cdep");
  const BocksteinReport blocked = bockstein_defect(dep, phase_from_entries(1, {1, 1, 1, 0}));
  CHECK(blocked.defect.entries == std::vector<u64>{1, 1, 1});
  CHECK_FALSE(blocked.trivial);
  CHECK_FALSE(blocked.witness.has_value());
  CHECK_FALSE(omega_exists(dep, blocked.defect));

  CHECK_THROWS_AS(bockstein_defect(four, phase_from_entries(2, {1, 1, 0, 0})), Error);
}

TEST_CASE("lift_once") {
  const CssCode four = catalog_get("c4");
  const LiftOutcome lifted = lift_once(four, phase_from_entries(1, {1, 1, 0, 0}));
  REQUIRE(lifted.lift.has_value());
  CHECK(lifted.lift->theta_hat.theta.entries == std::vector<u64>{3, 1, 0, 0});
  CHECK(lifted.lift->theta_hat.level() == 2);
  CHECK(lifted.lift->s.is_zero());
  CHECK(mat_vec_mod(four.hx, lifted.lift->theta_hat.theta, 2).is_zero());

  const LiftOutcome zero = lift_once(four, phase_from_entries(1, {0, 0, 0, 0}));
  REQUIRE(zero.lift.has_value());
  CHECK(zero.lift->theta_hat.theta.is_zero());

  const LiftOutcome blocked = lift_once(catalog_get("cdep"), phase_from_entries(1, {1, 1, 1, 0}));
  CHECK_FALSE(blocked.lift.has_value());
  CHECK(blocked.report.defect.entries == std::vector<u64>{1, 1, 1});
}

TEST_CASE("lift_to_level") {
  const CssCode rm = catalog_get("rm15");
  const MultiLevelLift up = lift_to_level(rm, phase_from_entries(1, std::vector<u64>(15, 1)), 3);
  REQUIRE(up.ok());
  REQUIRE(up.sequence.size() == 2);
  CHECK(up.sequence[0].theta.entries == std::vector<u64>(15, 1));
  CHECK(up.sequence[1].theta.entries == std::vector<u64>(15, 1));
  CHECK(up.sequence[1].level() == 3);

  const MultiLevelLift blocked =
      lift_to_level(catalog_get("cdep"), phase_from_entries(1, {1, 1, 1, 0}), 2);
  CHECK_FALSE(blocked.ok());
  CHECK(*blocked.obstruction_level == 1);
  CHECK(blocked.obstruction_defect->entries == std::vector<u64>{1, 1, 1});

  const MultiLevelLift zeros =
      lift_to_level(catalog_get("c4"), phase_from_entries(1, {0, 0, 0, 0}), 4);
  REQUIRE(zeros.ok());
  for (const PhaseVector& step : zeros.sequence) CHECK(step.theta.is_zero());

  CHECK_THROWS_AS(lift_to_level(rm, phase_from_entries(2, std::vector<u64>(15, 1)), 3), Error);
}

TEST_CASE("lift_to_level coherence with classes_equal") {
  // Each step adds 2^i omega, so step i+1 reduces into the class of step i.
  const CssCode rm = catalog_get("rm15");
  const MultiLevelLift up = lift_to_level(rm, phase_from_entries(1, std::vector<u64>(15, 1)), 3);
  REQUIRE(up.ok());
  PhaseVector prev = phase_from_entries(1, std::vector<u64>(15, 1));
  for (const PhaseVector& step : up.sequence) {
    const ClassWitness w = classes_equal(rm, step.theta.reduced(prev.level()), prev.theta,
                                         prev.level());
    CHECK(w.equal);
    prev = step;
  }
}

TEST_CASE("theorem-1 equivalence on random small codes") {
  std::mt19937_64 rng(9001);
  int solvable_seen = 0;
  int blocked_seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int mx = 1 + static_cast<int>(rng() % 4);
    const int mz = static_cast<int>(rng() % 4);
    const CssCode code = random_css(rng, n, mx, mz, trial % 3 == 0);
    for (int level = 1; level <= 2; ++level) {
      const PhaseVector theta = random_cycle(rng, code, level);
      const LiftOutcome outcome = lift_once(code, theta);
      const bool expected = omega_exists(code, outcome.report.defect);
      CHECK(outcome.lift.has_value() == expected);
      (expected ? solvable_seen : blocked_seen)++;
    }
  }
  CHECK(solvable_seen > 0);
  CHECK(blocked_seen > 0);
}

TEST_CASE("defect verdict is representative independent when well defined") {
  std::mt19937_64 rng(9002);
  // rep3 commutes vacuously at every level and has real boundaries; orth8
  // has both matrices nonempty with overlaps divisible by 4, so level-1
  // defects are class invariants there.
  const CssCode rep = catalog_get("rep3");
  const CssCode orth =
      make_code("orth8", 8, bin({{1, 1, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 1, 1}}),
                bin({{1, 1, 1, 1, 0, 0, 0, 0}}), 1);
  struct Case {
    const CssCode* code;
    int level;
  };
  const std::vector<Case> cases = {{&rep, 1}, {&rep, 2}, {&rep, 3}, {&orth, 1}};
  for (const Case& c : cases) {
    for (int trial = 0; trial < 40; ++trial) {
      const PhaseVector theta = random_cycle(rng, *c.code, c.level);
      const PhaseVector shifted = make_phase(boundary_shift(rng, *c.code, theta.theta));
      const BocksteinReport a = bockstein_defect(*c.code, theta);
      const BocksteinReport b = bockstein_defect(*c.code, shifted);
      CHECK(a.well_defined);
      CHECK(a.trivial == b.trivial);
      // The defects themselves differ by an element of im(hx mod 2): the
      // only change comes from reduction carries, which land in the image.
      const ResidueVector diff = vec_sub_mod(a.defect, b.defect, 1);
      CHECK(solve_mod(c.code->hx.reduced(1), diff).has_value());
    }
  }
}

TEST_CASE("full-rank X generators make every defect trivial") {
  std::mt19937_64 rng(9003);
  int tested = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int mx = 1 + static_cast<int>(rng() % 3);
    const CssCode code = random_css(rng, n, mx, 0, false);
    if (!x_generators_independent(code)) continue;
    for (int level = 1; level <= 2; ++level) {
      const PhaseVector theta = random_cycle(rng, code, level);
      CHECK(bockstein_defect(code, theta).trivial);
      ++tested;
    }
  }
  CHECK(tested > 0);
}

TEST_CASE("divisibility link: all-ones defect entries are scaled row weights") {
  for (const char* name : {"steane", "rm15", "shor9", "c4"}) {
    const CssCode code = catalog_get(name);
    const DivisibilityReport div = divisibility_report(code);
    for (int level = 1; level <= div.d; ++level) {
      const PhaseVector ones = phase_from_entries(level, std::vector<u64>(code.n, 1));
      if (!is_cycle(code, ones)) continue;
      const BocksteinReport report = bockstein_defect(code, ones);
      for (int i = 0; i < code.hx.rows; ++i) {
        CHECK(report.defect.entries[i] == ((div.weights[i] >> level) & 1));
      }
    }
  }
}

TEST_CASE("lift_preserving_pairing") {
  const CssCode rep = catalog_get("rep3");
  const LogicalBasis basis = logical_bases(rep);
  REQUIRE(basis.k() == 1);

  const PhaseVector theta = phase_from_entries(1, {1, 0, 0});
  const PhaseVector lifted = lift_preserving_pairing(rep, theta, basis, 0);
  CHECK(lifted.level() == 2);
  u64 dot = 0;
  for (int j = 0; j < 3; ++j) dot += lifted.theta.entries[j] * basis.gammas[0].entries[j];
  CHECK((dot & 3) == 1);
  // Already-valid input is returned unchanged.
  CHECK(lifted.theta.entries == std::vector<u64>{1, 0, 0});
  const PhaseVector again = lift_preserving_pairing(rep, lifted, basis, 0);
  CHECK(again.theta.entries == std::vector<u64>{1, 0, 0});
  CHECK(again.level() == 3);

  // Violated pairing hypothesis is refused.
  const CssCode four = catalog_get("c4");
  const LogicalBasis b4 = logical_bases(four);
  REQUIRE(b4.k() == 3);
  const PhaseVector bad = phase_from_entries(1, {0, 0, 0, 0});
  CHECK_THROWS_AS(lift_preserving_pairing(four, bad, b4, 0), Error);

  // A certified obstruction refuses with NoLift even when the pairing
  // hypothesis holds.
  const CssCode dep = catalog_get("cdep");
  const LogicalBasis bd = logical_bases(dep);
  const PhaseVector blocked = phase_from_entries(1, {1, 1, 1, 0});
  bool pairing_ok = true;
  for (int b = 0; b < bd.k(); ++b) {
    u64 dot2 = 0;
    for (int j = 0; j < 4; ++j) dot2 ^= blocked.theta.entries[j] & bd.gammas[b].entries[j];
    pairing_ok &= dot2 == (b == 0 ? 1 : 0);
  }
  REQUIRE(pairing_ok);
  try {
    lift_preserving_pairing(dep, blocked, bd, 0);
    FAIL("expected NoLift");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNoLift);
  }
}

TEST_CASE("rotation program on codes with both check types present") {
  // Base checks with every column repeated four times and one Z generator
  // per copy group: overlaps are multiples of 4, X rows stay independent,
  // and the pairing solver has to work through genuine s and omega terms.
  std::mt19937_64 rng(9004);
  for (int trial = 0; trial < 8; ++trial) {
    const int base_cols = 2 + static_cast<int>(rng() % 2);
    const int base_rows = 1 + static_cast<int>(rng() % base_cols);
    ResidueMatrix base(base_rows, base_cols, 1);
    do {
      for (auto& x : base.data) x = rng() & 1;
    } while (rank_mod2(base) != base_rows);
    const int n = 4 * base_cols;
    ResidueMatrix hx(base_rows, n, 1);
    ResidueMatrix hz(base_cols, n, 1);
    for (int g = 0; g < base_cols; ++g) {
      for (int copy = 0; copy < 4; ++copy) {
        for (int r = 0; r < base_rows; ++r) hx.at(r, 4 * g + copy) = base.at(r, g);
        hz.at(g, 4 * g + copy) = 1;
      }
    }
    const CssCode code = make_code("design", n, hx, hz, 1);
    REQUIRE(max_commutativity_level(code, 2) == 2);
    REQUIRE(x_generators_independent(code));

    const LogicalBasis basis = logical_bases(code);
    const int k = validate(code).k;
    REQUIRE(basis.k() == k);
    for (int a = 0; a < k; ++a) {
      const PhaseVector hat = logical_rotation_program(code, a, 1);
      CHECK(hat.level() == 2);
      CHECK(is_cycle(code, hat));
      for (int b = 0; b < k; ++b) {
        u64 dot = 0;
        for (int j = 0; j < n; ++j) dot += hat.theta.entries[j] * basis.gammas[b].entries[j];
        CHECK((dot & 3) == (a == b ? u64{1} : u64{0}));
      }
    }
  }
}

TEST_CASE("logical_rotation_program") {
  const CssCode rep = catalog_get("rep3");
  const PhaseVector hat = logical_rotation_program(rep, 0, 2);
  CHECK(hat.level() == 3);
  CHECK(is_cycle(rep, hat));
  const LogicalBasis basis = logical_bases(rep);
  u64 dot = 0;
  for (int j = 0; j < 3; ++j) dot += hat.theta.entries[j] * basis.gammas[0].entries[j];
  CHECK((dot & 7) == 1);

  // Steane commutes only modulo 2: the level-2 hypothesis fails.
  CHECK_THROWS_AS(logical_rotation_program(catalog_get("steane"), 0, 1), Error);

  // c4 admits the program at any level (hz empty), for every logical index.
  const CssCode four = catalog_get("c4");
  for (int a = 0; a < 3; ++a) {
    const PhaseVector t = logical_rotation_program(four, a, 2);
    CHECK(is_cycle(four, t));
    const LogicalBasis b4 = logical_bases(four);
    for (int b = 0; b < 3; ++b) {
      u64 p = 0;
      for (int j = 0; j < 4; ++j) p += t.theta.entries[j] * b4.gammas[b].entries[j];
      CHECK((p & 7) == (a == b ? 1 : 0));
    }
  }
}
