#include "nestcraig/certify.hpp"

#include <algorithm>
#include <set>

namespace nestcraig {

std::string_view mode_name(CheckMode m) {
  switch (m) {
    case CheckMode::Core: return "core";
    case CheckMode::Extended: return "extended";
    case CheckMode::Derived: return "derived";
  }
  return "?";
}

std::optional<CheckMode> mode_from_name(std::string_view name) {
  for (CheckMode m : {CheckMode::Core, CheckMode::Extended, CheckMode::Derived}) {
    if (mode_name(m) == name) return m;
  }
  return std::nullopt;
}

bool rule_in_mode(Rule r, CheckMode m) {
  switch (r) {
    case Rule::Ctr:
    case Rule::Wk:
    case Rule::Cut1:
    case Rule::Cut2:
      return m != CheckMode::Core;
    case Rule::ImpLStar:
    case Rule::ExclRStar:
    case Rule::Refl:
      return m == CheckMode::Derived;
    default:
      return true;
  }
}

namespace {

using Side_ = std::vector<Occurrence>;

bool has(const Side_& side, const Label& l, const Formula& f) {
  return std::any_of(side.begin(), side.end(), [&](const Occurrence& o) { return o.label == l && o.formula == f; });
}

bool has_rel(const LabelledSequent& s, const Label& a, const Label& b) {
  return std::find(s.rel.begin(), s.rel.end(), RelAtom{a, b}) != s.rel.end();
}

LabelledSequent plus(LabelledSequent s, Side side, const Label& l, const Formula& f) {
  (side == Side::Left ? s.left : s.right).push_back({l, f, Part::None});
  return s;
}

LabelledSequent minus(LabelledSequent s, Side side, const Label& l, const Formula& f) {
  auto& v = side == Side::Left ? s.left : s.right;
  auto it = std::find_if(v.begin(), v.end(), [&](const Occurrence& o) { return o.label == l && o.formula == f; });
  if (it != v.end()) v.erase(it);
  return s;
}

LabelledSequent plus_rel(LabelledSequent s, const Label& a, const Label& b) {
  s.rel.push_back({a, b});
  return s;
}

bool path_ok(const Path& path, const Label& x, const Label& y, DiamondKind k, const LabelledSequent& s,
             const PathAxiomSystem& sys) {
  if (path.nodes.size() < 2 || path.kinds.size() + 1 != path.nodes.size()) return false;
  if (path.nodes.front() != x || path.nodes.back() != y) return false;
  for (std::size_t i = 0; i < path.kinds.size(); ++i) {
    const Label& a = path.nodes[i];
    const Label& b = path.nodes[i + 1];
    const bool edge = path.kinds[i] == DiamondKind::White ? has_rel(s, a, b) : has_rel(s, b, a);
    if (!edge) return false;
  }
  return sys.completion_member(path.kinds, k);
}

class Checker {
 public:
  Checker(Logic logic, const PathAxiomSystem& sys, CheckMode mode, const std::vector<LabelledSequent>& assumptions)
      : logic_(logic), sys_(sys), mode_(mode), assumptions_(assumptions) {}

  CheckReport run(const Proof& p) {
    visit(p, "0");
    report_.ok = report_.failures.empty();
    return std::move(report_);
  }

 private:
  void fail(const Proof& p, const std::string& pos, std::string reason) {
    report_.failures.push_back({p.rule, pos, std::move(reason)});
  }

  bool in_language(const LabelledSequent& s) const {
    if (logic_ == Logic::Tense) {
      if (!s.left.empty()) return false;
      return std::all_of(s.right.begin(), s.right.end(), [](const Occurrence& o) { return is_tense_nnf(o.formula); });
    }
    auto bi = [](const Occurrence& o) { return is_bi_formula(o.formula); };
    return std::all_of(s.left.begin(), s.left.end(), bi) && std::all_of(s.right.begin(), s.right.end(), bi);
  }

  bool reach(const LabelledSequent& s, const Principal& pr, DiamondKind k) {
    ++report_.reachability_queries;
    if (pr.path && path_ok(*pr.path, pr.label, pr.other, k, s, sys_)) return true;
    const PropagationGraph g = build_graph(s);
    if (std::find(g.nodes.begin(), g.nodes.end(), pr.other) == g.nodes.end()) return false;
    return reachable(pr.label, pr.other, k, g, sys_);
  }

  void visit(const Proof& p, const std::string& pos) {
    if (!rule_in_logic(p.rule, logic_)) {
      fail(p, pos, "rule not available in this logic");
    } else if (!rule_in_mode(p.rule, mode_)) {
      fail(p, pos, "rule not allowed in " + std::string(mode_name(mode_)) + " mode");
    } else if (!in_language(p.conclusion)) {
      fail(p, pos, "conclusion outside the object language");
    } else {
      node(p, pos);
    }
    for (std::size_t i = 0; i < p.premises.size(); ++i) visit(p.premises[i], pos + "." + std::to_string(i));
  }

  // Compares premises with the expected list, in order.
  void expect(const Proof& p, const std::string& pos, const std::vector<LabelledSequent>& want) {
    if (p.premises.size() != want.size()) {
      fail(p, pos, "expected " + std::to_string(want.size()) + " premises, found " + std::to_string(p.premises.size()));
      return;
    }
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (!same_sequent(p.premises[i].conclusion, want[i])) {
        fail(p, pos, "premise " + std::to_string(i) + " does not match: expected " + print(want[i]));
      }
    }
  }

  void node(const Proof& p, const std::string& pos) {
    const LabelledSequent& s = p.conclusion;
    const Principal& pr = p.principal;
    const Label& x = pr.label;

    if (p.rule == Rule::Hyp) {
      if (!p.premises.empty()) return fail(p, pos, "assumption with premises");
      report_.open_leaves.push_back(s);
      const bool declared = std::any_of(assumptions_.begin(), assumptions_.end(),
                                        [&](const LabelledSequent& a) { return same_sequent(a, s); });
      if (!declared) fail(p, pos, "undeclared assumption " + print(s));
      return;
    }
    if (p.rule == Rule::Wk) {
      if (p.premises.size() != 1) return fail(p, pos, "weakening needs one premise");
      if (!sub_sequent(p.premises[0].conclusion, s)) fail(p, pos, "premise is not contained in the conclusion");
      return;
    }
    if (p.rule == Rule::Refl) {
      if (!s.has_label(x)) return fail(p, pos, "reflexive label " + x + " does not occur");
      return expect(p, pos, {plus_rel(s, x, x)});
    }

    if (!pr.formula) return fail(p, pos, "missing principal formula");
    const Formula& f = *pr.formula;
    const Connective c = f.kind();
    auto shape = [&](Connective want, Side side) {
      if (c != want || pr.side != side) {
        fail(p, pos, "principal has the wrong shape");
        return false;
      }
      const auto& v = side == Side::Left ? s.left : s.right;
      if (!has(v, x, f)) {
        fail(p, pos, "principal " + x + ": " + print(f) + " not in conclusion");
        return false;
      }
      return true;
    };
    auto fresh = [&] {
      if (pr.other.empty() || s.has_label(pr.other)) {
        fail(p, pos, "eigenlabel " + pr.other + " is not fresh");
        return false;
      }
      return true;
    };
    auto leaf = [&] {
      if (!p.premises.empty()) fail(p, pos, "axiom with premises");
    };

    switch (p.rule) {
      case Rule::Id: {
        if (c != Connective::Atom) return fail(p, pos, "id principal must be an atom");
        leaf();
        const bool closes = logic_ == Logic::Tense ? has(s.right, x, f) && has(s.right, x, Formula::neg_atom(f.name()))
                                                    : has(s.left, x, f) && has(s.right, x, f);
        if (!closes) fail(p, pos, "no complementary pair for " + x + ": " + f.name());
        return;
      }
      case Rule::Top:
        if (shape(Connective::Top, Side::Right)) leaf();
        return;
      case Rule::Bot:
        if (shape(Connective::Bot, Side::Left)) leaf();
        return;
      case Rule::Or:
      case Rule::OrR:
        if (!shape(Connective::Or, Side::Right)) return;
        return expect(p, pos, {plus(plus(minus(s, Side::Right, x, f), Side::Right, x, f.lhs()), Side::Right, x, f.rhs())});
      case Rule::AndL:
        if (!shape(Connective::And, Side::Left)) return;
        return expect(p, pos, {plus(plus(minus(s, Side::Left, x, f), Side::Left, x, f.lhs()), Side::Left, x, f.rhs())});
      case Rule::And:
      case Rule::AndR: {
        if (!shape(Connective::And, Side::Right)) return;
        const LabelledSequent base = minus(s, Side::Right, x, f);
        return expect(p, pos, {plus(base, Side::Right, x, f.lhs()), plus(base, Side::Right, x, f.rhs())});
      }
      case Rule::OrL: {
        if (!shape(Connective::Or, Side::Left)) return;
        const LabelledSequent base = minus(s, Side::Left, x, f);
        return expect(p, pos, {plus(base, Side::Left, x, f.lhs()), plus(base, Side::Left, x, f.rhs())});
      }
      case Rule::Dia:
      case Rule::BDia: {
        const bool white = p.rule == Rule::Dia;
        if (!shape(white ? Connective::Dia : Connective::BDia, Side::Right)) return;
        if (!reach(s, pr, white ? DiamondKind::White : DiamondKind::Black)) {
          fail(p, pos, "side condition fails: " + pr.other + " not reachable from " + x);
        }
        return expect(p, pos, {plus(s, Side::Right, pr.other, f.body())});
      }
      case Rule::Box:
      case Rule::BBox: {
        const bool white = p.rule == Rule::Box;
        if (!shape(white ? Connective::Box : Connective::BBox, Side::Right) || !fresh()) return;
        LabelledSequent prem = minus(s, Side::Right, x, f);
        prem = white ? plus_rel(prem, x, pr.other) : plus_rel(prem, pr.other, x);
        return expect(p, pos, {plus(prem, Side::Right, pr.other, f.body())});
      }
      case Rule::MonL:
        if (pr.side != Side::Left || !has(s.left, x, f)) return fail(p, pos, "principal not in the antecedent");
        if (!has_rel(s, x, pr.other)) return fail(p, pos, "missing relational atom R(" + x + "," + pr.other + ")");
        return expect(p, pos, {plus(s, Side::Left, pr.other, f)});
      case Rule::MonR:
        if (pr.side != Side::Right || !has(s.right, x, f)) return fail(p, pos, "principal not in the succedent");
        if (!has_rel(s, pr.other, x)) return fail(p, pos, "missing relational atom R(" + pr.other + "," + x + ")");
        return expect(p, pos, {plus(s, Side::Right, pr.other, f)});
      case Rule::ImpL:
        if (!shape(Connective::Imp, Side::Left)) return;
        return expect(p, pos, {plus(s, Side::Right, x, f.lhs()), plus(minus(s, Side::Left, x, f), Side::Left, x, f.rhs())});
      case Rule::ExclR:
        if (!shape(Connective::Excl, Side::Right)) return;
        return expect(p, pos, {plus(minus(s, Side::Right, x, f), Side::Right, x, f.lhs()), plus(s, Side::Left, x, f.rhs())});
      case Rule::ImpR:
      case Rule::ExclL: {
        const bool imp = p.rule == Rule::ImpR;
        if (!shape(imp ? Connective::Imp : Connective::Excl, imp ? Side::Right : Side::Left) || !fresh()) return;
        LabelledSequent prem = minus(s, imp ? Side::Right : Side::Left, x, f);
        prem = imp ? plus_rel(prem, x, pr.other) : plus_rel(prem, pr.other, x);
        return expect(p, pos, {plus(plus(prem, Side::Left, pr.other, f.lhs()), Side::Right, pr.other, f.rhs())});
      }
      case Rule::Ctr: {
        const auto& v = pr.side == Side::Left ? s.left : s.right;
        if (!has(v, x, f)) return fail(p, pos, "contracted formula not in conclusion");
        return expect(p, pos, {plus(s, pr.side, x, f)});
      }
      case Rule::Cut1:
        if (!is_tense_nnf(f)) return fail(p, pos, "cut formula not in NNF");
        return expect(p, pos, {plus(s, Side::Right, x, f), plus(s, Side::Right, x, negate_nnf(f))});
      case Rule::Cut2:
        return expect(p, pos, {plus(s, Side::Right, x, f), plus(s, Side::Left, x, f)});
      case Rule::ImpLStar:
        if (!shape(Connective::Imp, Side::Left)) return;
        if (!has_rel(s, x, pr.other)) return fail(p, pos, "missing relational atom R(" + x + "," + pr.other + ")");
        return expect(p, pos, {plus(s, Side::Right, pr.other, f.lhs()),
                               plus(minus(s, Side::Left, x, f), Side::Left, pr.other, f.rhs())});
      case Rule::ExclRStar:
        if (!shape(Connective::Excl, Side::Right)) return;
        if (!has_rel(s, pr.other, x)) return fail(p, pos, "missing relational atom R(" + pr.other + "," + x + ")");
        return expect(p, pos, {plus(minus(s, Side::Right, x, f), Side::Right, pr.other, f.lhs()),
                               plus(s, Side::Left, pr.other, f.rhs())});
      default:
        return fail(p, pos, "unknown rule");
    }
  }

  Logic logic_;
  const PathAxiomSystem& sys_;
  CheckMode mode_;
  const std::vector<LabelledSequent>& assumptions_;
  CheckReport report_;
};

}  // namespace

CheckReport check(const Proof& p, Logic logic, const PathAxiomSystem& sys, CheckMode mode,
                  const std::vector<LabelledSequent>& assumptions) {
  return Checker(logic, sys, mode, assumptions).run(p);
}

LabelledSequent implication_goal(Logic logic, const Formula& a, const Formula& b) {
  LabelledSequent s;
  const Formula g = logic == Logic::Tense ? Formula::disj(negate_nnf(a), b) : Formula::imp(a, b);
  s.right.push_back({"x", g, Part::None});
  return s;
}

namespace {

void absorb(CheckReport& into, const CheckReport& from, const std::string& prefix) {
  for (const auto& f : from.failures) into.failures.push_back({f.rule, prefix + f.position, f.reason});
  into.reachability_queries += from.reachability_queries;
}

}  // namespace

CheckReport verify_interpolant(const Formula& a, const Formula& b, const Formula& c, const Proof& proof_ac,
                               const Proof& proof_cb, Logic logic, const PathAxiomSystem& sys) {
  CheckReport out;
  const std::set<std::string> va = vars(a);
  const std::set<std::string> vb = vars(b);
  for (const auto& v : vars(c)) {
    if (!va.count(v) || !vb.count(v)) {
      out.failures.push_back({Rule::Hyp, "C", std::string(kVariableCondition) + ": " + v + " is not shared"});
    }
  }
  if (!same_sequent(proof_ac.conclusion, implication_goal(logic, a, c))) {
    out.failures.push_back({proof_ac.rule, "ac:0", std::string(kConclusionMismatch) + ": A -> C"});
  }
  if (!same_sequent(proof_cb.conclusion, implication_goal(logic, c, b))) {
    out.failures.push_back({proof_cb.rule, "cb:0", std::string(kConclusionMismatch) + ": C -> B"});
  }
  absorb(out, check(proof_ac, logic, sys, CheckMode::Core), "ac:");
  absorb(out, check(proof_cb, logic, sys, CheckMode::Core), "cb:");
  out.ok = out.failures.empty();
  return out;
}

std::string print(const CheckReport& r) {
  std::string out = r.ok ? "ok\n" : "FAILED\n";
  for (const auto& f : r.failures) {
    out += "  at " + f.position + " [" + std::string(rule_name(f.rule)) + "] " + f.reason + "\n";
  }
  return out;
}

}  // namespace nestcraig
