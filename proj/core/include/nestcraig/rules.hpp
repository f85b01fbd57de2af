#pragma once

#include <stdexcept>
#include <vector>

#include "nestcraig/proof.hpp"
#include "nestcraig/sequent.hpp"

namespace nestcraig {

class MalformedProof : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Premises produced by a backward application of a core rule.
struct Application {
  std::vector<LabelledSequent> premises;
  /// Split tag of the principal occurrence that was used.
  Part part = Part::None;
};

struct ApplyOptions {
  /// Among equal principal copies, take one carrying this tag first.
  Part prefer = Part::None;
  /// When set, the copy of the principal kept in the second ExclR premise gets this tag.
  Part exclr_kept = Part::None;
};

/// Backward application of a core rule (no axioms, no Hyp) to `concl`.
/// Formulas added by the rule inherit the principal's split tag.
/// Throws MalformedProof when the principal is absent or ill-shaped.
Application apply_rule(const LabelledSequent& concl, Rule rule, const Principal& pr, const ApplyOptions& opt = {});

/// Index of one occurrence of l:f on the requested side, preferring tag `prefer`.
/// Returns side.size() when absent.
std::size_t find_occurrence(const std::vector<Occurrence>& side, const Label& l, const Formula& f,
                            Part prefer = Part::None);

}  // namespace nestcraig
