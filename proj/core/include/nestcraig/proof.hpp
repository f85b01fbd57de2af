#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nestcraig/path_system.hpp"
#include "nestcraig/sequent.hpp"

namespace nestcraig {

enum class Rule : unsigned char {
  Id,
  Top,
  Bot,
  Or,
  And,
  Dia,
  Box,
  BDia,
  BBox,
  OrL,
  OrR,
  AndL,
  AndR,
  MonL,
  MonR,
  ImpL,
  ImpR,
  ExclL,
  ExclR,
  Ctr,
  Wk,
  Cut1,
  Cut2,
  ImpLStar,
  ExclRStar,
  Refl,
  Hyp,
};

enum class Side : unsigned char { Left, Right };

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
/// Rules usable in tense (resp. bi-intuitionistic) derivations.
bool rule_in_logic(Rule r, Logic logic);
std::vector<Rule> all_rules();

/// Principal data of one inference.
///
/// `label`/`formula`/`side` name the principal occurrence. For id the formula is
/// the atom p. `other` is the fresh label (Box, BBox, ImpR, ExclL), the
/// propagation target (Dia, BDia, MonL, MonR, ImpLStar, ExclRStar) or the
/// reflexive label (Refl). `path` is an optional reachability witness.
struct Principal {
  Side side = Side::Right;
  Label label;
  std::optional<Formula> formula;
  Label other;
  std::optional<Path> path;
  std::optional<RelAtom> rel;
};

struct Proof {
  Rule rule = Rule::Hyp;
  LabelledSequent conclusion;
  Principal principal;
  std::vector<Proof> premises;
};

std::size_t proof_size(const Proof& p);
std::size_t proof_height(const Proof& p);
/// Number of nodes carrying each rule, in rule order.
std::vector<std::pair<Rule, std::size_t>> rule_counts(const Proof& p);

/// Indented text rendering, one node per line.
std::string render(const Proof& p);

}  // namespace nestcraig
