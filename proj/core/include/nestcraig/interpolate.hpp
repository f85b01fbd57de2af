#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "nestcraig/formula.hpp"
#include "nestcraig/proof.hpp"
#include "nestcraig/prover.hpp"
#include "nestcraig/sequent.hpp"

namespace nestcraig {

/// Generalised interpolant: a set of flat sequents. Members are kept canonical,
/// sorted and duplicate-free.
struct Interpolant {
  std::vector<FlatSequent> members;

  static Interpolant make(std::vector<FlatSequent> members);

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }

  friend bool operator==(const Interpolant&, const Interpolant&) = default;
};

Interpolant unite(const Interpolant& a, const Interpolant& b);

/// Choice-function orthogonal with each chosen formula negated.
Interpolant orthogonal_tense(const Interpolant& i);
/// Choice-function orthogonal of the polarised encoding; duality swaps sides.
Interpolant orthogonal_bi(const Interpolant& i);
Interpolant orthogonal(Logic logic, const Interpolant& i);

/// Replaces the y-formulas of every member by x:[](disjunction) (k = Box) or
/// x:[b](disjunction) (k = BBox).
Interpolant box_transform(const Interpolant& i, const Label& x, const Label& y, Connective k);
/// x:(/\C -> \/D) on the right of every member.
Interpolant imp_transform(const Interpolant& i, const Label& x, const Label& y);
/// x:(/\C -< \/D) on the left of every member.
Interpolant excl_transform(const Interpolant& i, const Label& x, const Label& y);

struct InterpolateOptions {
  /// ExclR: the principal kept in the second premise moves to the first part.
  bool exclr_principal_part1 = false;
};

/// Interpolant of a tense proof under the split carried by `split`
/// (the proof's conclusion with every occurrence tagged One or Two).
/// Throws MalformedProof when a node does not match its rule.
Interpolant interpolate_kt(const Proof& p, const LabelledSequent& split);
Interpolant interpolate_bi(const Proof& p, const LabelledSequent& split, const InterpolateOptions& opt = {});

class MixedLabels : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Conjunction over members of the disjunction of their formulas.
Formula formula_of_tense(const Interpolant& i, const Label& x);
/// Conjunction over members of (/\left -> \/right).
Formula formula_of_bi(const Interpolant& i, const Label& x);

/// Derivation of the empty sequent from the Hyp leaves i and orthogonal(i),
/// built from Cut1 (tense) or Cut2 (bi) and Wk.
Proof duality_derivation(const Interpolant& i, Logic logic);

class InterpolantReproofFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CraigResult {
  SearchStatus status = SearchStatus::Refuted;
  /// Proof of the implication goal.
  std::optional<Proof> proof;
  Interpolant interpolant;
  std::optional<Formula> c;
  std::optional<Proof> proof_ac;
  std::optional<Proof> proof_cb;

  bool proved() const { return status == SearchStatus::Proved; }
};

/// |- x:~A, x:B with ~A in the first part.
LabelledSequent craig_goal_tense(const Formula& a, const Formula& b);
/// x:A |- x:B with A in the first part.
LabelledSequent craig_goal_bi(const Formula& a, const Formula& b);

/// A and B are NNF tense formulas. Throws InterpolantReproofFailed when one of
/// the two re-proofs does not succeed.
CraigResult craig_tense(const Formula& a, const Formula& b, const SearchConfig& cfg);
CraigResult craig_bi(const Formula& a, const Formula& b, const SearchConfig& cfg,
                     const InterpolateOptions& opt = {});

}  // namespace nestcraig
