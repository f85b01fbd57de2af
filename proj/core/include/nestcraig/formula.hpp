#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nestcraig {

/// Which object language a formula (or sequent, or proof) belongs to.
enum class Logic { Tense, BiInt };

/// Node kinds shared by the tense and bi-intuitionistic languages.
///
/// Tense NNF formulas use Atom, NegAtom, Top, Bot, And, Or and the four
/// modalities. Surface tense input may additionally contain Neg and Imp.
/// Bi-intuitionistic formulas use Atom, Top, Bot, And, Or, Imp and Excl.
enum class Connective : unsigned char {
  Atom,
  NegAtom,
  Top,
  Bot,
  And,
  Or,
  Box,   // []  (future, universal)
  Dia,   // <>  (future, existential)
  BBox,  // [b] (past, universal)
  BDia,  // <b> (past, existential)
  Neg,
  Imp,
  Excl,
};

/// Immutable formula tree with value semantics. Copies share structure.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula neg_atom(std::string name);
  static Formula top();
  static Formula bot();
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula box(Formula body);
  static Formula dia(Formula body);
  static Formula bbox(Formula body);
  static Formula bdia(Formula body);
  static Formula neg(Formula body);
  static Formula imp(Formula lhs, Formula rhs);
  static Formula excl(Formula lhs, Formula rhs);

  /// Builds a unary modal/negation node or a binary node from its kind.
  static Formula unary(Connective kind, Formula body);
  static Formula binary(Connective kind, Formula lhs, Formula rhs);

  Connective kind() const { return node_->kind; }
  /// Atom name; only meaningful for Atom and NegAtom.
  const std::string& name() const { return node_->name; }
  /// Single child of a unary node, or left child of a binary node.
  const Formula& lhs() const { return node_->children[0]; }
  const Formula& rhs() const { return node_->children[1]; }
  const Formula& body() const { return node_->children[0]; }
  std::size_t arity() const { return node_->children.size(); }

  /// Number of nodes in the tree.
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  bool is_literal() const {
    return kind() == Connective::Atom || kind() == Connective::NegAtom;
  }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node {
    Connective kind;
    std::string name;
    std::vector<Formula> children;
    std::size_t size = 1;
    std::size_t hash = 0;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Connective kind, std::string name, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

bool is_unary(Connective c);
bool is_binary(Connective c);
bool is_modal(Connective c);

/// True iff `f` is a tense formula in negation normal form (no Neg, Imp, Excl).
bool is_tense_nnf(const Formula& f);
/// True iff `f` only uses bi-intuitionistic connectives.
bool is_bi_formula(const Formula& f);
/// True iff `f` contains a past modality ([b] or <b>).
bool has_past_modality(const Formula& f);

/// Dual of an NNF tense formula: swaps p/~p, top/bot, &/|, []/<>, [b]/<b>.
/// Throws std::invalid_argument when `f` is not in NNF.
Formula negate_nnf(const Formula& f);

/// Pushes Neg and Imp of a surface tense formula down to the atoms.
Formula normalize(const Formula& f);

/// Propositional variables occurring in `f` (either polarity).
std::set<std::string> vars(const Formula& f);

/// Canonical, fully parenthesized ASCII rendering; `parse` inverts it.
std::string print(const Formula& f);
/// Minimal-parenthesis rendering using the standard precedences.
std::string pretty(const Formula& f);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  /// Byte offset into the input where parsing failed.
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Parses the ASCII surface syntax of the given logic.
Formula parse(std::string_view text, Logic logic);

bool is_valid_atom_name(std::string_view name);

}  // namespace nestcraig
