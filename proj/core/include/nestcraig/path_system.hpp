#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nestcraig/sequent.hpp"

namespace nestcraig {

/// White is the future diamond <>, Black the past diamond <b>.
enum class DiamondKind : unsigned char { White, Black };

inline DiamondKind flip(DiamondKind k) {
  return k == DiamondKind::White ? DiamondKind::Black : DiamondKind::White;
}

/// <k1>...<kn> p -> <target> p
struct PathAxiom {
  std::vector<DiamondKind> prefix;
  DiamondKind target = DiamondKind::White;

  friend bool operator==(const PathAxiom&, const PathAxiom&) = default;
  friend auto operator<=>(const PathAxiom&, const PathAxiom&) = default;
};

class NotComposable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AxiomParseError : public std::runtime_error {
 public:
  AxiomParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

PathAxiom invert(const PathAxiom& f);
/// F composed into G at 1-based position i of G's prefix.
PathAxiom compose(const PathAxiom& f, const PathAxiom& g, std::size_t i);

/// Text form `dd -> d`.
std::string print(const PathAxiom& f);
PathAxiom parse_axiom(std::string_view text);
/// One axiom per line, `#` comments, blank lines ignored.
std::vector<PathAxiom> parse_axiom_file(std::string_view text);

/// Path axioms together with the context-free grammar whose nonterminal D_t
/// generates exactly the prefixes w with (w -> t) in the completion.
class PathAxiomSystem {
 public:
  struct Binary {
    std::size_t lhs, first, second;
  };
  struct Unit {
    std::size_t lhs, rhs;
  };

  static constexpr std::size_t kWhite = 0;
  static constexpr std::size_t kBlack = 1;

  explicit PathAxiomSystem(std::vector<PathAxiom> axioms = {}, bool include_inverses = false);

  const std::vector<PathAxiom>& axioms() const { return axioms_; }
  bool include_inverses() const { return include_inverses_; }
  /// Axioms the grammar is built from (with inverses when requested).
  const std::vector<PathAxiom>& effective_axioms() const { return effective_; }

  std::size_t nonterminal_count() const { return nonterminals_; }
  const std::vector<Binary>& binary_rules() const { return binary_; }
  const std::vector<Unit>& unit_rules() const { return unit_; }
  /// Reflexive-transitive closure of the unit rules: closure[b] lists every a with a =>* b.
  const std::vector<std::vector<std::size_t>>& unit_closure() const { return closure_; }

  static std::size_t nonterminal(DiamondKind k) { return k == DiamondKind::White ? kWhite : kBlack; }

  /// CYK membership of (w -> t) in the completion.
  bool completion_member(const std::vector<DiamondKind>& w, DiamondKind t) const;

 private:
  std::vector<PathAxiom> axioms_;
  bool include_inverses_;
  std::vector<PathAxiom> effective_;
  std::size_t nonterminals_ = 2;
  std::vector<Binary> binary_;
  std::vector<Unit> unit_;
  std::vector<std::vector<std::size_t>> closure_;
};

struct GraphEdge {
  Label from;
  Label to;
  DiamondKind kind;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

struct PropagationGraph {
  std::vector<Label> nodes;
  std::vector<GraphEdge> edges;
};

PropagationGraph build_graph(const LabelledSequent& s);

/// x1, k1, x2, ..., k(n-1), xn
struct Path {
  std::vector<Label> nodes;
  std::vector<DiamondKind> kinds;
};

/// Saturated CFL-reachability table for one graph and one axiom system.
class Reachability {
 public:
  Reachability(const PropagationGraph& g, const PathAxiomSystem& sys);

  bool reachable(const Label& x, const Label& y, DiamondKind k) const;
  /// A path from x to y whose string reduces to k, if any.
  std::optional<Path> witness(const Label& x, const Label& y, DiamondKind k) const;

  /// Distinct (nonterminal, from, to) triples derived during saturation.
  std::size_t triples() const { return count_; }
  /// Upper bound nonterminals * nodes^2 on triples().
  std::size_t triple_bound() const { return nt_ * n_ * n_; }

 private:
  struct Origin {
    enum Kind : unsigned char { None, Edge, Unit, Binary } kind = None;
    std::size_t a = 0;  // unit: source nonterminal; binary: first nonterminal
    std::size_t b = 0;  // binary: second nonterminal
    std::size_t mid = 0;
  };
  std::size_t key(std::size_t nt, std::size_t u, std::size_t v) const { return (nt * n_ + u) * n_ + v; }
  void expand(std::size_t nt, std::size_t u, std::size_t v, Path& out) const;

  std::vector<Label> nodes_;
  std::map<Label, std::size_t> index_;
  std::size_t n_ = 0;
  std::size_t nt_ = 0;
  std::vector<Origin> facts_;
  std::size_t count_ = 0;
};

bool reachable(const Label& x, const Label& y, DiamondKind k, const PropagationGraph& g,
               const PathAxiomSystem& sys);

/// Enumerates every path with 1..max_len edges from x to y and tests its string.
bool oracle_reachable(const Label& x, const Label& y, DiamondKind k, const PropagationGraph& g,
                      const PathAxiomSystem& sys, std::size_t max_len);

}  // namespace nestcraig
