// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#include "bocklift/dispatch.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "bocklift/bockstein.hpp"
#include "bocklift/catalog.hpp"
#include "bocklift/chain_lift.hpp"
#include "bocklift/code_io.hpp"
#include "bocklift/css_code.hpp"
#include "bocklift/phase_oracle.hpp"
#include "bocklift/ring_linalg.hpp"

namespace bocklift {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return "usage";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kDimensionMismatch: return "dimension-mismatch";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kNotACycle: return "not-a-cycle";
    case ErrorKind::kNotACocycle: return "not-a-cocycle";
    case ErrorKind::kNotLogical: return "not-logical";
    case ErrorKind::kLevelMismatch: return "level-mismatch";
    case ErrorKind::kCapExceeded: return "cap-exceeded";
    case ErrorKind::kIllDefinedHomology: return "ill-defined-homology";
    case ErrorKind::kHypothesisViolated: return "hypothesis-violated";
    case ErrorKind::kPairingViolated: return "pairing-violated";
    case ErrorKind::kNoLift: return "no-lift";
    case ErrorKind::kNotFound: return "not-found";
    case ErrorKind::kInternal: return "internal";
  }
  return "internal";
}

struct Options {
  std::string op;
  std::vector<std::string> positional;
  std::optional<std::string> code;
  std::optional<std::string> theta;
  int level = 1;
  std::optional<int> target;
  int cap = kDefaultCap;
  std::optional<int> logical_index;
  std::optional<int> sweep_weight;
  std::optional<int> theta_level;
  bool machine = false;
};

int parse_int(const std::string& flag, const std::string& value) {
  size_t pos = 0;
  int out = 0;
  try {
    out = std::stoi(value, &pos);
  } catch (const std::exception&) {
    fail(ErrorKind::kUsage, flag + " expects an integer, got '" + value + "'");
  }
  if (pos != value.size()) {
    fail(ErrorKind::kUsage, flag + " expects an integer, got '" + value + "'");
  }
  return out;
}

Options parse_options(const std::vector<std::string>& args) {
  Options opt;
  opt.op = args.front();
  for (size_t i = 1; i < args.size(); ++i) {
    const std::string& arg = args[i];
    auto next = [&]() -> const std::string& {
      if (i + 1 >= args.size()) fail(ErrorKind::kUsage, arg + " requires a value");
      return args[++i];
    };
    if (arg == "--json") {
      opt.machine = true;
    } else if (arg == "--code") {
      opt.code = next();
    } else if (arg == "--theta") {
      opt.theta = next();
    } else if (arg == "--level") {
      opt.level = parse_int(arg, next());
    } else if (arg == "--target") {
      opt.target = parse_int(arg, next());
    } else if (arg == "--cap") {
      opt.cap = parse_int(arg, next());
    } else if (arg == "--logical-index") {
      opt.logical_index = parse_int(arg, next());
    } else if (arg == "--all-thetas-up-to") {
      opt.sweep_weight = parse_int(arg, next());
    } else if (arg == "--theta-level") {
      opt.theta_level = parse_int(arg, next());
    } else if (!arg.empty() && arg[0] == '-') {
      fail(ErrorKind::kUsage, "unknown flag: " + arg);
    } else {
      opt.positional.push_back(arg);
    }
  }
  return opt;
}

json jvec(const ResidueVector& v) {
  json out = json::array();
  for (u64 x : v.entries) out.push_back(x);
  return out;
}

json jmat(const ResidueMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows; ++r) out.push_back(jvec(m.row(r)));
  return out;
}

std::string factors_text(const std::vector<int>& exponents) {
  if (exponents.empty()) return "trivial";
  std::ostringstream os;
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (i) os << " x ";
    os << "Z_" << (u64{1} << exponents[i]);
  }
  return os.str();
}

// One executed operation: machine payload, human rendering, verdict.
struct OpResult {
  json result;
  std::string human;
  bool negative = false;
};

// Set by dispatch_with_code for the duration of one invocation.
thread_local const CssCode* g_preloaded_code = nullptr;

CssCode required_code(const Options& opt) {
  if (opt.code) return load_code(*opt.code);
  if (g_preloaded_code != nullptr) return *g_preloaded_code;
  fail(ErrorKind::kUsage, "--code is required");
}

PhaseVector required_theta(const Options& opt, const CssCode& code) {
  if (!opt.theta) fail(ErrorKind::kUsage, "--theta is required");
  return make_phase(parse_theta(*opt.theta, code.n, opt.level));
}

void check_level(int level) {
  if (level < 1 || level > 30) fail(ErrorKind::kUsage, "--level must be in [1, 30]");
}

// ---------------------------------------------------------------------------
// Per-operation handlers.

OpResult run_validate(const Options& opt) {
  OpResult r;
  if (!opt.code && g_preloaded_code == nullptr) fail(ErrorKind::kUsage, "--code is required");
  CssCode code;
  try {
    code = required_code(opt);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kValidation) throw;
    r.negative = true;
    r.result = {{"valid", false}, {"reason", e.what()}};
    r.human = "invalid: " + std::string(e.what()) + "\n";
    return r;
  }
  const ValidationReport report = validate(code);
  r.result = {{"valid", true},
              {"name", code.name},
              {"n", report.n},
              {"m_x", report.m_x},
              {"m_z", report.m_z},
              {"entry_exponent", report.entry_exponent},
              {"rank_hx_mod2", report.rank_x},
              {"rank_hz_mod2", report.rank_z},
              {"logical_qubits", report.k},
              {"commutes_mod2", report.commutes_mod2},
              {"x_independent", report.x_independent}};
  std::ostringstream os;
  os << "code " << code.name << ": n=" << report.n << ", mX=" << report.m_x
     << ", mZ=" << report.m_z << ", entry exponent " << report.entry_exponent << "\n"
     << "rank(HX mod 2) = " << report.rank_x << ", rank(HZ mod 2) = " << report.rank_z
     << ", logical qubits k = " << report.k << "\n"
     << "commutes mod 2: yes\n"
     << "X generators independent: " << (report.x_independent ? "yes" : "no") << "\n";
  r.human = os.str();
  return r;
}

OpResult run_commutativity(const Options& opt) {
  const CssCode code = required_code(opt);
  if (opt.cap < 0 || opt.cap > kMaxExponent) fail(ErrorKind::kUsage, "--cap out of range");
  const int level = max_commutativity_level(code, opt.cap);
  OpResult r;
  r.result = {{"name", code.name}, {"cap", opt.cap}, {"level", level}};
  r.human = "code " + code.name + ": commutativity level " + std::to_string(level) +
            " (cap " + std::to_string(opt.cap) + ")\n";
  return r;
}

OpResult run_divisibility(const Options& opt) {
  const CssCode code = required_code(opt);
  if (opt.cap < 0 || opt.cap > kMaxExponent) fail(ErrorKind::kUsage, "--cap out of range");
  const DivisibilityReport report = divisibility_report(code, opt.cap);
  OpResult r;
  r.result = {{"name", code.name},
              {"cap", report.cap},
              {"weights", report.weights},
              {"valuations", report.valuations},
              {"d", report.d},
              {"all_ones_defect_vanishes_below", report.d}};
  std::ostringstream os;
  os << "code " << code.name << ": X-row weights (";
  for (size_t i = 0; i < report.weights.size(); ++i) {
    if (i) os << ',';
    os << report.weights[i];
  }
  os << ")\nuniform divisibility d = " << report.d << " (cap " << report.cap << ")\n"
     << "the all-ones defect vanishes at every level below " << report.d << "\n";
  r.human = os.str();
  return r;
}

OpResult run_homology(const Options& opt) {
  const CssCode code = required_code(opt);
  check_level(opt.level);
  OpResult r;
  if (max_commutativity_level(code, opt.level) < opt.level) {
    r.negative = true;
    r.result = {{"name", code.name}, {"level", opt.level}, {"defined", false}};
    r.human = "code " + code.name + ": homology is not defined at level " +
              std::to_string(opt.level) + " (commutativity fails)\n";
    return r;
  }
  const std::vector<int> exponents = homology_structure(code, opt.level);
  r.result = {{"name", code.name},
              {"level", opt.level},
              {"defined", true},
              {"invariant_factor_exponents", exponents}};
  r.human = "code " + code.name + ": homology at level " + std::to_string(opt.level) +
            " = " + factors_text(exponents) + "\n";
  return r;
}

OpResult run_bases(const Options& opt) {
  const CssCode code = required_code(opt);
  const LogicalBasis basis = logical_bases(code);
  OpResult r;
  json gammas = json::array();
  json thetas = json::array();
  for (const auto& g : basis.gammas) gammas.push_back(jvec(g));
  for (const auto& t : basis.thetas) thetas.push_back(jvec(t));
  r.result = {{"name", code.name}, {"k", basis.k()}, {"gammas", gammas}, {"thetas", thetas}};
  std::ostringstream os;
  os << "code " << code.name << ": k = " << basis.k() << " logical qubit(s)\n";
  for (int a = 0; a < basis.k(); ++a) {
    os << "gamma[" << (a + 1) << "] = " << to_string(basis.gammas[a]) << "\n";
    os << "theta[" << (a + 1) << "] = " << to_string(basis.thetas[a]) << "\n";
  }
  r.human = os.str();
  return r;
}

json defect_json(const BocksteinReport& report) {
  json j = {{"defect", jvec(report.defect)},
            {"well_defined", report.well_defined},
            {"trivial", report.trivial}};
  j["witness"] = report.witness ? jvec(*report.witness) : json(nullptr);
  return j;
}

OpResult run_bockstein(const Options&, const CssCode& code, const PhaseVector& theta) {
  const BocksteinReport report = bockstein_defect(code, theta);
  OpResult r;
  r.negative = !report.trivial;
  r.result = defect_json(report);
  r.result["name"] = code.name;
  r.result["level"] = theta.level();
  r.result["theta"] = jvec(theta.theta);
  std::ostringstream os;
  os << "code " << code.name << ": bockstein defect at level " << theta.level() << "\n"
     << "theta = " << to_string(theta.theta) << "\n"
     << "defect r = " << to_string(report.defect)
     << ", well-defined: " << (report.well_defined ? "yes" : "no") << "\n";
  if (report.trivial) {
    os << "trivial: yes, witness omega = " << to_string(*report.witness) << "\n";
  } else {
    os << "trivial: no -- certified obstruction, no refinement to level "
       << (theta.level() + 1) << " exists\n";
  }
  r.human = os.str();
  return r;
}

OpResult run_lift_once(const Options&, const CssCode& code, const PhaseVector& theta) {
  const LiftOutcome outcome = lift_once(code, theta);
  OpResult r;
  r.result = {{"name", code.name}, {"level", theta.level()}, {"theta", jvec(theta.theta)}};
  r.result["defect"] = defect_json(outcome.report);
  std::ostringstream os;
  os << "code " << code.name << ": lift at level " << theta.level() << "\n"
     << "theta = " << to_string(theta.theta) << "\n";
  if (outcome.lift) {
    r.result["theta_hat"] = jvec(outcome.lift->theta_hat.theta);
    r.result["s"] = jvec(outcome.lift->s);
    r.result["omega"] = jvec(outcome.lift->omega);
    os << "theta_hat = " << to_string(outcome.lift->theta_hat.theta) << " at level "
       << (theta.level() + 1) << "  (omega = " << to_string(outcome.lift->omega) << ")\n";
  } else {
    r.negative = true;
    r.result["theta_hat"] = nullptr;
    os << "obstruction certified: defect r = " << to_string(outcome.report.defect)
       << " has no binary preimage under HX\n";
  }
  r.human = os.str();
  return r;
}

OpResult run_lift_multi(const Options& opt, const CssCode& code, const PhaseVector& theta) {
  const MultiLevelLift result = lift_to_level(code, theta, *opt.target);
  OpResult r;
  r.result = {{"name", code.name}, {"target", *opt.target}, {"theta", jvec(theta.theta)}};
  std::ostringstream os;
  os << "code " << code.name << ": lift from level 1 to " << *opt.target << "\n"
     << "theta = " << to_string(theta.theta) << "\n";
  json seq = json::array();
  for (const PhaseVector& step : result.sequence) {
    seq.push_back(jvec(step.theta));
    os << "level " << step.level() << ": theta_hat = " << to_string(step.theta) << "\n";
  }
  r.result["sequence"] = seq;
  if (result.ok()) {
    r.result["first_obstruction"] = nullptr;
  } else {
    r.negative = true;
    r.result["first_obstruction"] = {{"level", *result.obstruction_level},
                                     {"defect", jvec(*result.obstruction_defect)}};
    os << "obstruction at level " << *result.obstruction_level
       << ": defect r = " << to_string(*result.obstruction_defect) << "\n";
  }
  r.human = os.str();
  return r;
}

json side_json(const ComplexSideReport& side) {
  json j = {{"cycle", side.cycle}};
  j["trivial_defect"] = side.defect ? json(side.defect->trivial) : json(nullptr);
  j["lift_ok"] = side.lift_ok ? json(*side.lift_ok) : json(nullptr);
  return j;
}

OpResult run_lift_chain(const Options& opt) {
  const CssCode code = required_code(opt);
  check_level(opt.level);
  OpResult r;
  std::ostringstream os;
  os << "code " << code.name << ": chain lift at level " << opt.level << "\n";

  const ChainLiftOutcome outcome = solve_chain_lift(code, opt.level);
  r.result = {{"name", code.name},
              {"level", opt.level},
              {"residual", jmat(outcome.residual)},
              {"solvable", outcome.solvable()}};
  if (!outcome.solvable()) {
    r.negative = true;
    os << "unsolvable: the residual lies outside the image of the correction map\n";
    r.human = os.str();
    return r;
  }
  const ChainLiftResult& lift = *outcome.result;
  r.result["a"] = jmat(lift.a);
  r.result["b"] = jmat(lift.b);
  r.result["hx_hat"] = jmat(lift.hx_hat);
  r.result["hz_hat"] = jmat(lift.hz_hat);
  r.result["solution_space_dim"] = lift.solution_space_dim;
  os << "solvable: yes (solution space dimension " << lift.solution_space_dim << ")\n";
  for (int i = 0; i < lift.hx_hat.rows; ++i) {
    os << "HX_hat[" << i << "] = " << to_string(lift.hx_hat.row(i)) << "\n";
  }
  for (int i = 0; i < lift.hz_hat.rows; ++i) {
    os << "HZ_hat[" << i << "] = " << to_string(lift.hz_hat.row(i)) << "\n";
  }

  if (opt.theta) {
    const int theta_level = opt.theta_level.value_or(opt.level + 1);
    if (theta_level < 1 || theta_level > 30) {
      fail(ErrorKind::kUsage, "--theta-level must be in [1, 30]");
    }
    const PhaseVector theta = make_phase(parse_theta(*opt.theta, code.n, theta_level));
    const ReliftReport relift = relift_analysis(code, opt.level, theta);
    json j = {{"theta", jvec(theta.theta)},
              {"theta_level", theta_level},
              {"original", side_json(relift.original)},
              {"lifted", side_json(relift.lifted)},
              {"identical_complexes", relift.identical}};
    r.result["relift"] = j;
    os << "relift analysis for theta = " << to_string(theta.theta) << " at level "
       << theta_level << ":\n"
       << "  original complex: cycle " << (relift.original.cycle ? "yes" : "no")
       << (relift.original.defect
               ? std::string(", trivial defect ") + (relift.original.defect->trivial ? "yes" : "no")
               : std::string())
       << "\n"
       << "  lifted complex:   cycle " << (relift.lifted.cycle ? "yes" : "no")
       << (relift.lifted.defect
               ? std::string(", trivial defect ") + (relift.lifted.defect->trivial ? "yes" : "no")
               : std::string())
       << "\n"
       << "  complexes identical mod 2^" << (opt.level + 1) << ": "
       << (relift.identical ? "yes" : "no") << "\n";
  } else {
    r.result["relift"] = nullptr;
  }
  r.human = os.str();
  return r;
}

OpResult run_rotation(const Options& opt) {
  const CssCode code = required_code(opt);
  check_level(opt.level);
  if (!opt.logical_index) fail(ErrorKind::kUsage, "--logical-index is required");
  OpResult r;

  std::string failed;
  if (!x_generators_independent(code)) {
    failed = "X stabilizer generators are linearly dependent";
  } else if (max_commutativity_level(code, opt.level + 1) != opt.level + 1) {
    failed = "stabilizers do not commute modulo 2^" + std::to_string(opt.level + 1);
  }
  if (!failed.empty()) {
    r.negative = true;
    r.result = {{"name", code.name},
                {"level", opt.level},
                {"implementable", false},
                {"failed_hypothesis", failed}};
    r.human = "code " + code.name + ": hypothesis violated -- " + failed + "\n";
    return r;
  }

  const int index = *opt.logical_index;
  const LogicalBasis basis = logical_bases(code);
  if (index < 1 || index > basis.k()) {
    fail(ErrorKind::kUsage, "--logical-index must be in [1, " + std::to_string(basis.k()) + "]");
  }
  const PhaseVector hat = logical_rotation_program(code, index - 1, opt.level);

  ResidueVector pairings = zero_vector(opt.level + 1, basis.k());
  for (int b = 0; b < basis.k(); ++b) {
    u64 acc = 0;
    for (int j = 0; j < code.n; ++j) acc += hat.theta.entries[j] * basis.gammas[b].entries[j];
    pairings.entries[b] = acc & mod_mask(opt.level + 1);
  }
  r.result = {{"name", code.name},
              {"level", opt.level},
              {"implementable", true},
              {"logical_index", index},
              {"theta_hat", jvec(hat.theta)},
              {"pairings", jvec(pairings)}};
  std::ostringstream os;
  os << "code " << code.name << ": transversal rotation program for logical index " << index
     << " at level " << opt.level << "\n"
     << "theta_hat = " << to_string(hat.theta) << " at level " << (opt.level + 1) << "\n"
     << "pairings <theta_hat, gamma_b> mod " << (u64{1} << (opt.level + 1)) << ": "
     << to_string(pairings) << "\n";
  r.human = os.str();
  return r;
}

json coset_json(const OffendingCoset& coset) {
  return {{"class", coset.class_mask},
          {"gamma", jvec(coset.gamma)},
          {"exponents", coset.exponents}};
}

OpResult run_oracle(const Options&, const CssCode& code, const PhaseVector& theta) {
  OpResult r;
  const LogicalVerdict verdict = is_logical_diagonal(code, theta);
  r.result = {{"name", code.name}, {"level", theta.level()}, {"theta", jvec(theta.theta)}};
  std::ostringstream os;
  os << "code " << code.name << ": oracle at level " << theta.level() << "\n";
  if (!verdict.logical) {
    r.negative = true;
    r.result["logical"] = false;
    r.result["witness"] = coset_json(*verdict.offender);
    os << "physically logical: no\n"
       << "witness class " << verdict.offender->class_mask << ": gamma = "
       << to_string(verdict.offender->gamma) << ", phases {";
    for (size_t i = 0; i < verdict.offender->exponents.size(); ++i) {
      if (i) os << ',';
      os << verdict.offender->exponents[i];
    }
    os << "}\n";
    r.human = os.str();
    return r;
  }
  const LogicalActionTable table = logical_action(code, theta);
  json jtable = json::object();
  for (size_t c = 0; c < table.entries.size(); ++c) {
    jtable[std::to_string(c)] = table.entries[c];
  }
  r.result["logical"] = true;
  r.result["k"] = table.k;
  r.result["table"] = jtable;
  os << "physically logical: yes\n"
     << "logical action (angle unit pi/" << (u64{1} << (theta.level() - 1)) << "):\n";
  for (size_t c = 0; c < table.entries.size(); ++c) {
    os << "  [" << c << "] -> " << table.entries[c] << "\n";
  }
  r.human = os.str();
  return r;
}

OpResult run_compare(const Options&, const CssCode& code, const PhaseVector& theta) {
  const FormalPhysicalReport report = compare_formal_physical(code, theta);
  OpResult r;
  r.negative = !report.agree();
  r.result = {{"name", code.name},
              {"level", theta.level()},
              {"theta", jvec(theta.theta)},
              {"formal_cycle", report.formal_cycle},
              {"physically_logical", report.physically_logical},
              {"agree", report.agree()}};
  r.result["witness"] = report.witness ? coset_json(*report.witness) : json(nullptr);
  std::ostringstream os;
  os << "code " << code.name << ": formal vs physical at level " << theta.level() << "\n"
     << "formal cycle: " << (report.formal_cycle ? "yes" : "no") << "\n"
     << "physically logical: " << (report.physically_logical ? "yes" : "no") << "\n"
     << "agreement: " << (report.agree() ? "yes" : "MISMATCH") << "\n";
  if (report.witness) {
    os << "witness class " << report.witness->class_mask << ": gamma = "
       << to_string(report.witness->gamma) << "\n";
  }
  r.human = os.str();
  return r;
}

OpResult run_catalog(const Options& opt) {
  OpResult r;
  if (opt.positional.empty() || opt.positional.front() == "list") {
    const auto names = catalog_names();
    r.result = {{"codes", names}};
    std::ostringstream os;
    for (const auto& name : names) os << name << "\n";
    r.human = os.str();
    return r;
  }
  if (opt.positional.front() == "get") {
    if (opt.positional.size() < 2) fail(ErrorKind::kUsage, "catalog get requires a name");
    const CssCode code = catalog_get(opt.positional[1]);
    r.result = json::parse(serialize_code(code));
    r.human = serialize_code(code);
    return r;
  }
  fail(ErrorKind::kUsage, "catalog expects 'list' or 'get <name>'");
}

// Sweep over binary phase vectors of bounded support weight, ascending by
// mask value.  Operations with a cycle precondition only visit cycles.
OpResult run_sweep(const Options& opt, const CssCode& code,
                   OpResult (*handler)(const Options&, const CssCode&, const PhaseVector&),
                   bool needs_cycle) {
  if (code.n > 24) fail(ErrorKind::kCapExceeded, "sweep expects n <= 24");
  const int w = *opt.sweep_weight;
  if (w < 0) fail(ErrorKind::kUsage, "--all-thetas-up-to must be nonnegative");
  OpResult r;
  json cases = json::array();
  std::ostringstream os;
  int count = 0;
  int negatives = 0;
  for (u64 mask = 0; mask < (u64{1} << code.n); ++mask) {
    if (std::popcount(mask) > w) continue;
    ResidueVector theta = zero_vector(opt.level, code.n);
    for (int j = 0; j < code.n; ++j) theta.entries[j] = (mask >> j) & 1;
    const PhaseVector phase = make_phase(std::move(theta));
    if (needs_cycle && !is_cycle(code, phase)) continue;
    OpResult step = handler(opt, code, phase);
    step.result["negative"] = step.negative;
    cases.push_back(std::move(step.result));
    negatives += step.negative ? 1 : 0;
    ++count;
  }
  r.negative = negatives > 0;
  r.result = {{"name", code.name},
              {"op", opt.op},
              {"level", opt.level},
              {"max_weight", w},
              {"count", count},
              {"negatives", negatives},
              {"cases", cases}};
  os << "code " << code.name << ": swept " << count << " vector(s) of weight <= " << w
     << " at level " << opt.level << "; " << negatives << " negative verdict(s)\n";
  r.human = os.str();
  return r;
}

OpResult execute(const Options& opt) {
  if (opt.op == "validate") return run_validate(opt);
  if (opt.op == "commutativity") return run_commutativity(opt);
  if (opt.op == "divisibility") return run_divisibility(opt);
  if (opt.op == "homology") return run_homology(opt);
  if (opt.op == "bases") return run_bases(opt);
  if (opt.op == "catalog") return run_catalog(opt);
  if (opt.op == "lift-chain") return run_lift_chain(opt);
  if (opt.op == "rotation") return run_rotation(opt);

  OpResult (*theta_handler)(const Options&, const CssCode&, const PhaseVector&) = nullptr;
  if (opt.op == "bockstein") theta_handler = run_bockstein;
  if (opt.op == "oracle") theta_handler = run_oracle;
  if (opt.op == "compare") theta_handler = run_compare;
  if (opt.op == "lift") theta_handler = run_lift_once;
  if (theta_handler == nullptr) fail(ErrorKind::kUsage, "unknown subcommand: " + opt.op);

  const CssCode code = required_code(opt);
  check_level(opt.level);

  if (opt.op == "lift" && opt.target) {
    if (opt.sweep_weight) fail(ErrorKind::kUsage, "--target cannot be combined with a sweep");
    if (opt.level != 1) fail(ErrorKind::kUsage, "multi-level lifting starts at level 1");
    return run_lift_multi(opt, code, required_theta(opt, code));
  }
  if (opt.sweep_weight) {
    if (opt.theta) fail(ErrorKind::kUsage, "--theta cannot be combined with a sweep");
    const bool needs_cycle = opt.op == "bockstein" || opt.op == "lift";
    return run_sweep(opt, code, theta_handler, needs_cycle);
  }
  return theta_handler(opt, code, required_theta(opt, code));
}

}  // namespace

std::string usage_text() {
  return
      "usage: bocklift <subcommand> [flags]\n"
      "\n"
      "subcommands:\n"
      "  validate        check the CSS structure and report ranks and k\n"
      "  commutativity   largest m with HX HZ^T = 0 modulo 2^m (up to --cap)\n"
      "  divisibility    X-row weights and their uniform 2-adic divisibility\n"
      "  homology        invariant factors of the level-m cycle quotient\n"
      "  bases           paired logical representatives (gammas and thetas)\n"
      "  bockstein       refinement defect of a level-m cycle, with witness\n"
      "  lift            one-level lift (or --target for iterated lifting)\n"
      "  lift-chain      lift the parity-check matrices one level\n"
      "  rotation        transversal rotation program for a logical qubit\n"
      "  oracle          brute-force logical action of a diagonal rotation\n"
      "  compare         formal cycle test vs the physical oracle\n"
      "  catalog         list | get <name>  (embedded example codes)\n"
      "\n"
      "flags:\n"
      "  --code <path|catalog:name>   code input (JSON file or fixture)\n"
      "  --theta <csv|ones|zeros>     phase vector entries\n"
      "  --level <m>                  working level (default 1)\n"
      "  --target <m>                 iterate lifts up to this level\n"
      "  --theta-level <m>            phase level for relift analysis\n"
      "  --logical-index <a>          1-based logical qubit index\n"
      "  --cap <k>                    search cap (default 8)\n"
      "  --all-thetas-up-to <w>       sweep binary cycles of weight <= w\n"
      "  --json                       machine-readable report on stdout\n";
}

CliResult dispatch(const std::vector<std::string>& args) {
  return dispatch_with_code(args, nullptr);
}

namespace {
struct PreloadGuard {
  ~PreloadGuard() { g_preloaded_code = nullptr; }
};
}  // namespace

CliResult dispatch_with_code(const std::vector<std::string>& args, const CssCode* preloaded) {
  g_preloaded_code = preloaded;
  const PreloadGuard guard;
  CliResult result;
  if (args.empty()) {
    result.exit_code = kExitError;
    result.err = usage_text();
    return result;
  }
  if (args.front() == "help" || args.front() == "--help") {
    result.out = usage_text();
    return result;
  }

  const bool machine = std::find(args.begin(), args.end(), "--json") != args.end();
  json envelope;
  envelope["schema"] = 1;
  envelope["command"] = args;
  envelope["op"] = args.front();

  try {
    const Options opt = parse_options(args);
    OpResult op_result = execute(opt);
    result.exit_code = op_result.negative ? kExitNegative : kExitOk;
    envelope["exit"] = result.exit_code;
    envelope["result"] = std::move(op_result.result);
    if (machine) {
      result.out = envelope.dump() + "\n";
    } else {
      result.out = op_result.human;
    }
  } catch (const Error& e) {
    result.exit_code = kExitError;
    envelope["exit"] = result.exit_code;
    envelope["error"] = {{"kind", kind_name(e.kind())}, {"message", e.what()}};
    if (machine) {
      result.out = envelope.dump() + "\n";
    } else {
      result.err = std::string("error: ") + e.what() + "\n";
      if (e.kind() == ErrorKind::kUsage) result.err += "\n" + usage_text();
    }
  } catch (const std::exception& e) {
    result.exit_code = kExitError;
    envelope["exit"] = result.exit_code;
    envelope["error"] = {{"kind", "internal"}, {"message", e.what()}};
    if (machine) {
      result.out = envelope.dump() + "\n";
    } else {
      result.err = std::string("error: ") + e.what() + "\n";
    }
  }
  return result;
}

}  // namespace bocklift
