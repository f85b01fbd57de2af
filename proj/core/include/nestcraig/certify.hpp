#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nestcraig/formula.hpp"
#include "nestcraig/path_system.hpp"
#include "nestcraig/proof.hpp"
#include "nestcraig/sequent.hpp"

namespace nestcraig {

/// Core: the base calculus. Extended adds Ctr, Wk, Cut1, Cut2. Derived adds
/// ImpLStar, ExclRStar, Refl.
enum class CheckMode { Core, Extended, Derived };

std::string_view mode_name(CheckMode m);
std::optional<CheckMode> mode_from_name(std::string_view name);
bool rule_in_mode(Rule r, CheckMode m);

struct CheckFailure {
  Rule rule = Rule::Hyp;
  /// Dotted premise indices from the root, e.g. "0.1.0"; the root is "0".
  std::string position;
  std::string reason;
};

struct CheckReport {
  bool ok = true;
  std::vector<CheckFailure> failures;
  /// Hyp leaves, in left-to-right order.
  std::vector<LabelledSequent> open_leaves;
  /// Side-condition reachability queries issued.
  std::size_t reachability_queries = 0;
};

/// Validates every node of `p` against its rule. Hyp leaves must match one of
/// `assumptions` (multiset equality). Never throws on bad proofs.
CheckReport check(const Proof& p, Logic logic, const PathAxiomSystem& sys, CheckMode mode,
                  const std::vector<LabelledSequent>& assumptions = {});

/// Goal sequents the two re-proofs must conclude.
LabelledSequent implication_goal(Logic logic, const Formula& a, const Formula& b);

inline constexpr std::string_view kVariableCondition = "VariableCondition";
inline constexpr std::string_view kConclusionMismatch = "ConclusionMismatch";

/// ok iff vars(C) is within vars(A) and vars(B), the proofs conclude A -> C and
/// C -> B, and both check in Core mode. Tense formulas are taken in NNF.
CheckReport verify_interpolant(const Formula& a, const Formula& b, const Formula& c, const Proof& proof_ac,
                               const Proof& proof_cb, Logic logic, const PathAxiomSystem& sys);

std::string print(const CheckReport& r);

}  // namespace nestcraig
