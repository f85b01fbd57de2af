#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nestcraig/formula.hpp"
#include "nestcraig/interpolate.hpp"
#include "nestcraig/path_system.hpp"
#include "nestcraig/sequent.hpp"

namespace nestcraig::testing {

struct TenseShape {
  std::size_t depth = 3;
  std::size_t modal_depth = 3;
  std::size_t vars = 3;
  bool past = true;
  bool constants = false;
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  std::string var(std::size_t n) { return std::string(1, static_cast<char>('p' + below(n))); }

  Formula tense(const TenseShape& s) { return tense(s, s.depth, s.modal_depth); }

  Formula tense(const TenseShape& s, std::size_t depth, std::size_t modal) {
    if (depth == 0 || coin(0.2)) {
      if (s.constants && coin(0.1)) return coin() ? Formula::top() : Formula::bot();
      return coin() ? Formula::atom(var(s.vars)) : Formula::neg_atom(var(s.vars));
    }
    const std::size_t kinds = modal == 0 ? 2 : (s.past ? 6 : 4);
    switch (below(kinds)) {
      case 0: return Formula::conj(tense(s, depth - 1, modal), tense(s, depth - 1, modal));
      case 1: return Formula::disj(tense(s, depth - 1, modal), tense(s, depth - 1, modal));
      case 2: return Formula::box(tense(s, depth - 1, modal - 1));
      case 3: return Formula::dia(tense(s, depth - 1, modal - 1));
      case 4: return Formula::bbox(tense(s, depth - 1, modal - 1));
      default: return Formula::bdia(tense(s, depth - 1, modal - 1));
    }
  }

  /// Surface tense formula with Neg and Imp anywhere.
  Formula surface(std::size_t depth) {
    if (depth == 0 || coin(0.2)) return coin(0.8) ? Formula::atom(var(3)) : Formula::neg_atom(var(3));
    switch (below(8)) {
      case 0: return Formula::conj(surface(depth - 1), surface(depth - 1));
      case 1: return Formula::disj(surface(depth - 1), surface(depth - 1));
      case 2: return Formula::imp(surface(depth - 1), surface(depth - 1));
      case 3: return Formula::neg(surface(depth - 1));
      case 4: return Formula::box(surface(depth - 1));
      case 5: return Formula::dia(surface(depth - 1));
      case 6: return Formula::bbox(surface(depth - 1));
      default: return Formula::bdia(surface(depth - 1));
    }
  }

  Formula bi(std::size_t depth, std::size_t vars = 3) {
    if (depth == 0 || coin(0.25)) {
      if (coin(0.1)) return coin() ? Formula::top() : Formula::bot();
      return Formula::atom(var(vars));
    }
    switch (below(4)) {
      case 0: return Formula::conj(bi(depth - 1, vars), bi(depth - 1, vars));
      case 1: return Formula::disj(bi(depth - 1, vars), bi(depth - 1, vars));
      case 2: return Formula::imp(bi(depth - 1, vars), bi(depth - 1, vars));
      default: return Formula::excl(bi(depth - 1, vars), bi(depth - 1, vars));
    }
  }

  Label label() { return std::string(1, "xyz"[below(3)]); }

  /// Random interpolant; members have up to `width` formulas, possibly none.
  Interpolant interpolant(Logic logic, std::size_t max_members, std::size_t width) {
    std::vector<FlatSequent> members;
    const std::size_t n = 1 + below(max_members);
    TenseShape shape{1, 1, 3, true, true};
    for (std::size_t i = 0; i < n; ++i) {
      FlatSequent m;
      const std::size_t k = below(width + 1);
      for (std::size_t j = 0; j < k; ++j) {
        LabelledFormula lf{label(), logic == Logic::Tense ? tense(shape) : bi(1)};
        (logic == Logic::BiInt && coin() ? m.left : m.right).push_back(std::move(lf));
      }
      members.push_back(std::move(m));
    }
    return Interpolant::make(std::move(members));
  }

  /// Interpolant whose members are all nonempty.
  Interpolant dense_interpolant(Logic logic, std::size_t max_members, std::size_t width) {
    for (;;) {
      Interpolant i = interpolant(logic, max_members, width);
      bool ok = true;
      for (const auto& m : i.members) ok = ok && !m.empty();
      if (ok) return i;
    }
  }

  std::vector<DiamondKind> word(std::size_t lo, std::size_t hi) {
    std::vector<DiamondKind> w(lo + below(hi - lo + 1));
    for (auto& k : w) k = coin() ? DiamondKind::White : DiamondKind::Black;
    return w;
  }

  PathAxiom axiom(std::size_t lo, std::size_t hi) {
    return PathAxiom{word(lo, hi), coin() ? DiamondKind::White : DiamondKind::Black};
  }

  /// Sequent over labels n0..n(k-1) with random relational atoms.
  LabelledSequent graph_sequent(std::size_t max_nodes) {
    const std::size_t n = 1 + below(max_nodes);
    LabelledSequent s;
    for (std::size_t i = 0; i < n; ++i) s.right.push_back({"n" + std::to_string(i), Formula::top(), Part::None});
    const std::size_t edges = below(2 * n + 1);
    for (std::size_t e = 0; e < edges; ++e) {
      s.rel.push_back({"n" + std::to_string(below(n)), "n" + std::to_string(below(n))});
    }
    return s;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline bool has_past(const Formula& f) { return has_past_modality(f); }

}  // namespace nestcraig::testing
