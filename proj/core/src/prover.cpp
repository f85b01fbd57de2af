#include "nestcraig/prover.hpp"

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <tuple>

#include "nestcraig/rules.hpp"

namespace nestcraig {

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Proved: return "Proved";
    case SearchStatus::Refuted: return "Refuted";
    case SearchStatus::BoundExceeded: return "BoundExceeded";
  }
  return "?";
}

LabelledSequent right_goal(const Formula& f, const Label& x) {
  LabelledSequent s;
  s.right.push_back({x, f, Part::None});
  return s;
}

namespace {

using Key = std::tuple<Side, Label, Formula>;
using PropKey = std::tuple<Side, Label, Formula, Label>;

struct Branch {
  LabelledSequent seq;
  std::set<Key> expanded;
  std::set<PropKey> propagated;
  // Principals of applied BiInt rules; they still hold after being consumed.
  std::set<Key> held;
  std::size_t fresh = 0;
  std::shared_ptr<const Reachability> reach;
  std::size_t reach_rel = static_cast<std::size_t>(-1);
};

struct Step {
  Rule rule;
  Principal principal;
};

struct Outcome {
  SearchStatus status = SearchStatus::Refuted;
  Proof proof;
};

Principal principal_of(Side side, const Label& l, const Formula& f, Label other = {}) {
  Principal p;
  p.side = side;
  p.label = l;
  p.formula = f;
  p.other = std::move(other);
  return p;
}

bool contains(const std::vector<Occurrence>& side, const Label& l, const Formula& f) {
  return find_occurrence(side, l, f) != side.size();
}

class Search {
 public:
  Search(Logic logic, const LabelledSequent& goal, const SearchConfig& cfg)
      : logic_(logic), cfg_(cfg), supply_(goal.labels()) {}

  std::size_t steps() const { return steps_; }

  Outcome run(Branch b) {
    std::vector<Step> chain;
    const LabelledSequent start = b.seq;
    Outcome end = logic_ == Logic::Tense ? tense_loop(b, chain) : bi_loop(b, chain);
    if (end.status != SearchStatus::Proved) return end;
    // Conclusions along the chain are rebuilt by replaying it.
    std::vector<LabelledSequent> conclusions;
    conclusions.reserve(chain.size());
    LabelledSequent cur = start;
    for (const auto& st : chain) {
      Application app = apply_rule(cur, st.rule, st.principal);
      conclusions.push_back(std::move(cur));
      cur = std::move(app.premises.front());
    }
    Proof acc = std::move(end.proof);
    for (std::size_t k = chain.size(); k-- > 0;) {
      Proof node;
      node.rule = chain[k].rule;
      node.conclusion = std::move(conclusions[k]);
      node.principal = std::move(chain[k].principal);
      node.premises.push_back(std::move(acc));
      acc = std::move(node);
    }
    end.proof = std::move(acc);
    return end;
  }

 private:
  bool tick() { return ++steps_ <= cfg_.step_limit; }

  static Outcome bound() { return Outcome{SearchStatus::BoundExceeded, {}}; }

  static Outcome leaf(Rule rule, const LabelledSequent& s, Principal pr) {
    Outcome o;
    o.status = SearchStatus::Proved;
    o.proof.rule = rule;
    o.proof.conclusion = s;
    o.proof.principal = std::move(pr);
    return o;
  }

  void step(Branch& b, std::vector<Step>& chain, Rule rule, Principal pr) {
    Application app = apply_rule(b.seq, rule, pr);
    if (logic_ == Logic::BiInt) b.held.insert({pr.side, pr.label, *pr.formula});
    chain.push_back({rule, std::move(pr)});
    b.seq = std::move(app.premises.front());
  }

  Outcome branch(Branch& b, Rule rule, Principal pr) {
    Application app = apply_rule(b.seq, rule, pr);
    if (logic_ == Logic::BiInt) b.held.insert({pr.side, pr.label, *pr.formula});
    Outcome out;
    out.status = SearchStatus::Proved;
    out.proof.rule = rule;
    out.proof.conclusion = b.seq;
    out.proof.principal = std::move(pr);
    for (auto& premise : app.premises) {
      Branch child = b;
      child.seq = std::move(premise);
      Outcome sub = run(std::move(child));
      if (sub.status == SearchStatus::Refuted) return Outcome{SearchStatus::Refuted, {}};
      if (sub.status == SearchStatus::BoundExceeded) {
        out.status = SearchStatus::BoundExceeded;
        continue;
      }
      if (out.status == SearchStatus::Proved) out.proof.premises.push_back(std::move(sub.proof));
    }
    if (out.status != SearchStatus::Proved) out.proof = Proof{};
    return out;
  }

  const Reachability& reach(Branch& b) {
    if (!b.reach || b.reach_rel != b.seq.rel.size()) {
      b.reach = std::make_shared<Reachability>(build_graph(b.seq), cfg_.axioms);
      b.reach_rel = b.seq.rel.size();
    }
    return *b.reach;
  }

  Outcome tense_loop(Branch& b, std::vector<Step>& chain) {
    for (;;) {
      if (!tick()) return bound();
      auto& right = b.seq.right;

      for (const auto& o : right) {
        if (o.formula.kind() == Connective::Top) {
          return leaf(Rule::Top, b.seq, principal_of(Side::Right, o.label, o.formula));
        }
        if (o.formula.kind() == Connective::NegAtom &&
            contains(right, o.label, Formula::atom(o.formula.name()))) {
          return leaf(Rule::Id, b.seq, principal_of(Side::Right, o.label, Formula::atom(o.formula.name())));
        }
      }

      bool progressed = false;
      for (const auto& o : right) {
        if (o.formula.kind() == Connective::Or) {
          step(b, chain, Rule::Or, principal_of(Side::Right, o.label, o.formula));
          progressed = true;
          break;
        }
      }
      if (progressed) continue;

      for (const auto& o : right) {
        if (o.formula.kind() == Connective::And) {
          return branch(b, Rule::And, principal_of(Side::Right, o.label, o.formula));
        }
      }

      for (std::size_t i = 0; i < right.size() && !progressed; ++i) {
        const Connective c = right[i].formula.kind();
        if (c != Connective::Dia && c != Connective::BDia) continue;
        const Label x = right[i].label;
        const Formula f = right[i].formula;
        const DiamondKind k = c == Connective::Dia ? DiamondKind::White : DiamondKind::Black;
        const Reachability& r = reach(b);
        for (const auto& y : b.seq.labels()) {
          if (b.propagated.count({Side::Right, x, f, y}) || contains(right, y, f.body())) continue;
          if (!r.reachable(x, y, k)) continue;
          Principal pr = principal_of(Side::Right, x, f, y);
          pr.path = r.witness(x, y, k);
          b.propagated.insert({Side::Right, x, f, y});
          step(b, chain, c == Connective::Dia ? Rule::Dia : Rule::BDia, std::move(pr));
          progressed = true;
          break;
        }
      }
      if (progressed) continue;

      for (const auto& o : right) {
        const Connective c = o.formula.kind();
        if (c != Connective::Box && c != Connective::BBox) continue;
        if (b.expanded.count({Side::Right, o.label, o.formula})) continue;
        if (b.fresh >= cfg_.depth_bound) return bound();
        b.expanded.insert({Side::Right, o.label, o.formula});
        ++b.fresh;
        step(b, chain, c == Connective::Box ? Rule::Box : Rule::BBox,
             principal_of(Side::Right, o.label, o.formula, supply_.next()));
        progressed = true;
        break;
      }
      if (progressed) continue;
      return Outcome{SearchStatus::Refuted, {}};
    }
  }

  Outcome bi_loop(Branch& b, std::vector<Step>& chain) {
    for (;;) {
      if (!tick()) return bound();
      auto& left = b.seq.left;
      auto& right = b.seq.right;

      for (const auto& o : right) {
        if (o.formula.kind() == Connective::Top) {
          return leaf(Rule::Top, b.seq, principal_of(Side::Right, o.label, o.formula));
        }
        if (o.formula.kind() == Connective::Atom && contains(left, o.label, o.formula)) {
          return leaf(Rule::Id, b.seq, principal_of(Side::Right, o.label, o.formula));
        }
      }
      for (const auto& o : left) {
        if (o.formula.kind() == Connective::Bot) {
          return leaf(Rule::Bot, b.seq, principal_of(Side::Left, o.label, o.formula));
        }
      }

      bool progressed = false;
      for (const auto& o : left) {
        if (o.formula.kind() == Connective::And) {
          step(b, chain, Rule::AndL, principal_of(Side::Left, o.label, o.formula));
          progressed = true;
          break;
        }
      }
      if (progressed) continue;
      for (const auto& o : right) {
        if (o.formula.kind() == Connective::Or) {
          step(b, chain, Rule::OrR, principal_of(Side::Right, o.label, o.formula));
          progressed = true;
          break;
        }
      }
      if (progressed) continue;

      // A left formula that is false everywhere, or a right one that is true
      // everywhere, closes the branch through its own decomposition.
      const Occurrence* doomed = nullptr;
      Side doomed_side = Side::Left;
      for (const Side side : {Side::Left, Side::Right}) {
        for (const auto& o : side == Side::Left ? left : right) {
          if (constant(o.formula) != (side == Side::Right)) continue;
          if (b.expanded.count({side, o.label, o.formula})) continue;
          doomed = &o;
          doomed_side = side;
          break;
        }
        if (doomed) break;
      }
      if (doomed) {
        const Label x = doomed->label;
        const Formula f = doomed->formula;
        const Side side = doomed_side;
        switch (f.kind()) {
          case Connective::Or: return branch(b, Rule::OrL, principal_of(side, x, f));
          case Connective::And: return branch(b, Rule::AndR, principal_of(side, x, f));
          case Connective::Imp:
          case Connective::Excl: {
            const bool fresh = (f.kind() == Connective::Imp) == (side == Side::Right);
            b.expanded.insert({side, x, f});
            if (!fresh) {
              return branch(b, side == Side::Left ? Rule::ImpL : Rule::ExclR, principal_of(side, x, f));
            }
            if (b.fresh >= cfg_.depth_bound) return bound();
            ++b.fresh;
            const Label y = supply_.next();
            ages_.emplace(y, ages_.size() + 1);
            step(b, chain, side == Side::Right ? Rule::ImpR : Rule::ExclL, principal_of(side, x, f, y));
            continue;
          }
          default:
            break;
        }
      }

      for (const auto& r : b.seq.rel) {
        for (const auto& o : left) {
          if (o.label != r.from) continue;
          if (b.propagated.count({Side::Left, r.from, o.formula, r.to}) || has(b, Side::Left, r.to, o.formula)) continue;
          b.propagated.insert({Side::Left, r.from, o.formula, r.to});
          step(b, chain, Rule::MonL, principal_of(Side::Left, r.from, o.formula, r.to));
          progressed = true;
          break;
        }
        if (progressed) break;
        for (const auto& o : right) {
          if (o.label != r.to) continue;
          if (b.propagated.count({Side::Right, r.to, o.formula, r.from}) || has(b, Side::Right, r.from, o.formula)) {
            continue;
          }
          b.propagated.insert({Side::Right, r.to, o.formula, r.from});
          step(b, chain, Rule::MonR, principal_of(Side::Right, r.to, o.formula, r.from));
          progressed = true;
          break;
        }
        if (progressed) break;
      }
      if (progressed) continue;

      // Left formulas flow to later worlds and right formulas to earlier ones,
      // so splitting there first satisfies the copies elsewhere.
      const Occurrence* split = nullptr;
      for (const auto& o : left) {
        if (o.formula.kind() != Connective::Or || bi_satisfied(b, Side::Left, o)) continue;
        if (!split || age(o.label) < age(split->label)) split = &o;
      }
      if (split) return branch(b, Rule::OrL, principal_of(Side::Left, split->label, split->formula));
      for (const auto& o : right) {
        if (o.formula.kind() != Connective::And || bi_satisfied(b, Side::Right, o)) continue;
        if (!split || age(o.label) > age(split->label)) split = &o;
      }
      if (split) return branch(b, Rule::AndR, principal_of(Side::Right, split->label, split->formula));
      // Oldest label first, so that new worlds cannot starve older ones.
      auto pick = [&](std::initializer_list<std::pair<Side, Connective>> wanted) -> const Occurrence* {
        const Occurrence* best = nullptr;
        for (const auto& [side, c] : wanted) {
          for (const auto& o : side == Side::Left ? left : right) {
            if (o.formula.kind() != c || b.expanded.count({side, o.label, o.formula})) continue;
            if (bi_satisfied(b, side, o)) continue;
            if (!best || age(o.label) < age(best->label)) best = &o;
          }
        }
        return best;
      };
      auto side_of = [&](const Occurrence* o) { return o >= left.data() && o < left.data() + left.size() ? Side::Left : Side::Right; };

      if (const Occurrence* o = pick({{Side::Left, Connective::Imp}, {Side::Right, Connective::Excl}})) {
        const Side side = side_of(o);
        b.expanded.insert({side, o->label, o->formula});
        return branch(b, side == Side::Left ? Rule::ImpL : Rule::ExclR, principal_of(side, o->label, o->formula));
      }
      // A world whose formulas coincide with an older world's is left to
      // that world.
      const std::set<Label> blocked = blocked_labels(b.seq);
      bool skipped = false;
      auto pick_fresh = [&]() -> const Occurrence* {
        const Occurrence* best = nullptr;
        for (const auto& [side, c] : {std::pair{Side::Right, Connective::Imp}, std::pair{Side::Left, Connective::Excl}}) {
          for (const auto& o : side == Side::Left ? left : right) {
            if (o.formula.kind() != c || b.expanded.count({side, o.label, o.formula})) continue;
            if (bi_satisfied(b, side, o)) continue;
            if (blocked.count(o.label)) {
              skipped = true;
              continue;
            }
            if (!best || better_fresh(side, o, side_of(best), *best)) best = &o;
          }
        }
        return best;
      };
      if (const Occurrence* o = pick_fresh()) {
        if (b.fresh >= cfg_.depth_bound) return bound();
        const Side side = side_of(o);
        b.expanded.insert({side, o->label, o->formula});
        ++b.fresh;
        const Label y = supply_.next();
        ages_.emplace(y, ages_.size() + 1);
        step(b, chain, side == Side::Right ? Rule::ImpR : Rule::ExclL, principal_of(side, o->label, o->formula, y));
        continue;
      }
      return skipped ? bound() : Outcome{SearchStatus::Refuted, {}};
    }
  }

  // The principal already holds in the sequent, so its rule adds nothing a
  // countermodel would need.
  static bool has(const Branch& b, Side side, const Label& l, const Formula& f) {
    return contains(side == Side::Left ? b.seq.left : b.seq.right, l, f) || b.held.count({side, l, f});
  }

  // Truth value shared by every world, where one is evident from the syntax.
  static std::optional<bool> constant(const Formula& f) {
    if (f.kind() == Connective::Imp && f.lhs() == f.rhs()) return true;
    if (f.kind() == Connective::Excl && f.lhs() == f.rhs()) return false;
    switch (f.kind()) {
      case Connective::Top: return true;
      case Connective::Bot: return false;
      case Connective::And:
      case Connective::Or:
      case Connective::Imp:
      case Connective::Excl: {
        const auto a = constant(f.lhs());
        const auto c = constant(f.rhs());
        switch (f.kind()) {
          case Connective::And:
            if (a == false || c == false) return false;
            if (a == true && c == true) return true;
            return std::nullopt;
          case Connective::Or:
            if (a == true || c == true) return true;
            if (a == false && c == false) return false;
            return std::nullopt;
          case Connective::Imp:
            if (a == false || c == true) return true;
            if (a == true && c == false) return false;
            return std::nullopt;
          default:
            if (a == false || c == true) return false;
            if (a == true && c == false) return true;
            return std::nullopt;
        }
      }
      default:
        return std::nullopt;
    }
  }

  static bool bi_satisfied(const Branch& b, Side side, const Occurrence& o) {
    const Formula& f = o.formula;
    const Label& x = o.label;
    if (constant(f) == (side == Side::Left)) return true;
    switch (f.kind()) {
      case Connective::Or:
        return side == Side::Left && (has(b, Side::Left, x, f.lhs()) || has(b, Side::Left, x, f.rhs()));
      case Connective::And:
        return side == Side::Right && (has(b, Side::Right, x, f.lhs()) || has(b, Side::Right, x, f.rhs()));
      case Connective::Imp:
      case Connective::Excl: {
        const bool imp = f.kind() == Connective::Imp;
        if ((side == Side::Left) == imp) return has(b, Side::Right, x, f.lhs()) || has(b, Side::Left, x, f.rhs());
        // a witness anywhere above x (for Imp) or below x (for Excl)
        std::set<Label> seen{x};
        std::vector<Label> todo{x};
        while (!todo.empty()) {
          const Label y = todo.back();
          todo.pop_back();
          if (has(b, Side::Left, y, f.lhs()) && has(b, Side::Right, y, f.rhs())) return true;
          for (const auto& r : b.seq.rel) {
            const Label& next = imp ? r.to : r.from;
            if ((imp ? r.from : r.to) == y && seen.insert(next).second) todo.push_back(next);
          }
        }
        return false;
      }
      default:
        return false;
    }
  }

  // ExclL before ImpR; ExclL at the oldest world and ImpR at the newest, so
  // one witness serves every copy along the order.
  bool better_fresh(Side side, const Occurrence& o, Side best_side, const Occurrence& best) const {
    if (side != best_side) return side == Side::Left;
    return side == Side::Left ? age(o.label) < age(best.label) : age(o.label) > age(best.label);
  }

  std::set<Label> blocked_labels(const LabelledSequent& s) const {
    using Content = std::pair<std::set<Formula>, std::set<Formula>>;
    std::map<Label, Content> content;
    for (const auto& o : s.left) content[o.label].first.insert(o.formula);
    for (const auto& o : s.right) content[o.label].second.insert(o.formula);
    std::map<Content, Label> oldest;
    for (const auto& [l, c] : content) {
      auto [it, fresh] = oldest.emplace(c, l);
      if (!fresh && age(l) < age(it->second)) it->second = l;
    }
    std::set<Label> out;
    for (const auto& [l, c] : content) {
      if (oldest.at(c) != l) out.insert(l);
    }
    return out;
  }

  std::size_t age(const Label& l) const {
    const auto it = ages_.find(l);
    return it == ages_.end() ? 0 : it->second;
  }

  Logic logic_;
  const SearchConfig& cfg_;
  LabelSupply supply_;
  std::map<Label, std::size_t> ages_;
  std::size_t steps_ = 0;
};

SearchResult finish(Search& search, Outcome out, const SearchConfig& cfg) {
  SearchResult res;
  res.status = out.status;
  res.steps = search.steps();
  if (out.status == SearchStatus::Proved) {
    if (cfg.trim) trim_propagations(out.proof);
    res.proof = std::move(out.proof);
  }
  return res;
}

// Occurrence (side, label, formula) is consulted by some node of `p`.
bool used(const Proof& p, Side side, const Label& l, const Formula& f) {
  const Principal& pr = p.principal;
  switch (p.rule) {
    case Rule::Id:
      if (pr.label == l && pr.formula) {
        const Formula& atom = *pr.formula;
        if (side == Side::Right && (f == atom || f == Formula::neg_atom(atom.name()))) return true;
        if (side == Side::Left && f == atom) return true;
      }
      break;
    default:
      if (pr.side == side && pr.label == l && pr.formula && *pr.formula == f) return true;
      break;
  }
  for (const auto& q : p.premises) {
    if (used(q, side, l, f)) return true;
  }
  return false;
}

void strip(Proof& p, Side side, const Label& l, const Formula& f) {
  remove_one(side == Side::Left ? p.conclusion.left : p.conclusion.right, l, f);
  for (auto& q : p.premises) strip(q, side, l, f);
}

}  // namespace

void trim_propagations(Proof& p) {
  for (auto& q : p.premises) trim_propagations(q);
  Side side = Side::Right;
  Label target;
  Formula added = Formula::top();
  switch (p.rule) {
    case Rule::Dia:
    case Rule::BDia:
      target = p.principal.other;
      added = p.principal.formula->body();
      break;
    case Rule::MonL:
      side = Side::Left;
      target = p.principal.other;
      added = *p.principal.formula;
      break;
    case Rule::MonR:
      target = p.principal.other;
      added = *p.principal.formula;
      break;
    default:
      return;
  }
  if (used(p.premises.front(), side, target, added)) return;
  Proof premise = std::move(p.premises.front());
  strip(premise, side, target, added);
  p = std::move(premise);
}

SearchResult prove_kt(const LabelledSequent& goal, const SearchConfig& cfg) {
  if (!goal.left.empty()) throw std::invalid_argument("prove_kt: tense goals are one-sided");
  for (const auto& o : goal.right) {
    if (!is_tense_nnf(o.formula)) throw std::invalid_argument("prove_kt: goal formula is not in NNF");
  }
  Search search(Logic::Tense, goal, cfg);
  Branch b;
  b.seq = strip_parts(goal);
  return finish(search, search.run(std::move(b)), cfg);
}

SearchResult prove_bi(const LabelledSequent& goal, const SearchConfig& cfg) {
  for (const auto* side : {&goal.left, &goal.right}) {
    for (const auto& o : *side) {
      if (!is_bi_formula(o.formula)) throw std::invalid_argument("prove_bi: goal formula is not bi-intuitionistic");
    }
  }
  Search search(Logic::BiInt, goal, cfg);
  Branch b;
  b.seq = strip_parts(goal);
  return finish(search, search.run(std::move(b)), cfg);
}

SearchResult prove(Logic logic, const LabelledSequent& goal, const SearchConfig& cfg) {
  return logic == Logic::Tense ? prove_kt(goal, cfg) : prove_bi(goal, cfg);
}

}  // namespace nestcraig
