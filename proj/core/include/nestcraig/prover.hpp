#pragma once

#include <cstddef>
#include <optional>

#include "nestcraig/path_system.hpp"
#include "nestcraig/proof.hpp"
#include "nestcraig/sequent.hpp"

namespace nestcraig {

struct SearchConfig {
  /// Maximum number of fresh labels introduced along any branch.
  std::size_t depth_bound = 12;
  PathAxiomSystem axioms;
  /// Hard cap on rule applications in one search; exceeding it reports BoundExceeded.
  std::size_t step_limit = 2'000'000;
  /// Drop propagation steps whose added formula is never used above them.
  bool trim = true;
};

enum class SearchStatus { Proved, Refuted, BoundExceeded };

std::string_view status_name(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::Refuted;
  std::optional<Proof> proof;
  std::size_t steps = 0;

  bool proved() const { return status == SearchStatus::Proved; }
};

/// Backward search in the tense calculus. Throws std::invalid_argument when the
/// goal has antecedent formulas or non-NNF formulas.
SearchResult prove_kt(const LabelledSequent& goal, const SearchConfig& cfg);

/// Backward search in the bi-intuitionistic calculus. Throws
/// std::invalid_argument on tense connectives.
SearchResult prove_bi(const LabelledSequent& goal, const SearchConfig& cfg);

SearchResult prove(Logic logic, const LabelledSequent& goal, const SearchConfig& cfg);

/// |- x:f
LabelledSequent right_goal(const Formula& f, const Label& x = "x");

/// Removes propagation steps (Dia, BDia, MonL, MonR) whose added formula is
/// never principal above them.
void trim_propagations(Proof& p);

}  // namespace nestcraig
