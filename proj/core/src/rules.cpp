#include "nestcraig/rules.hpp"

#include <algorithm>

namespace nestcraig {

std::size_t find_occurrence(const std::vector<Occurrence>& side, const Label& l, const Formula& f, Part prefer) {
  std::size_t fallback = side.size();
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (!side[i].same_formula(l, f)) continue;
    if (prefer == Part::None || side[i].part == prefer) return i;
    if (fallback == side.size()) fallback = i;
  }
  return fallback;
}

namespace {

[[noreturn]] void malformed(Rule rule, const std::string& why) {
  throw MalformedProof(std::string(rule_name(rule)) + ": " + why);
}

bool has_rel(const LabelledSequent& s, const Label& a, const Label& b) {
  return std::find(s.rel.begin(), s.rel.end(), RelAtom{a, b}) != s.rel.end();
}

}  // namespace

Application apply_rule(const LabelledSequent& concl, Rule rule, const Principal& pr, const ApplyOptions& opt) {
  if (!pr.formula) malformed(rule, "missing principal formula");
  const Formula& f = *pr.formula;
  const Label& x = pr.label;
  auto side_of = [](LabelledSequent& s, Side side) -> std::vector<Occurrence>& {
    return side == Side::Left ? s.left : s.right;
  };
  const std::vector<Occurrence>& src = pr.side == Side::Left ? concl.left : concl.right;
  const std::size_t at = find_occurrence(src, x, f, opt.prefer);
  if (at == src.size()) malformed(rule, "principal " + x + ": " + print(f) + " not in conclusion");
  const Part part = src[at].part;

  auto expect = [&](Connective c, Side side) {
    if (f.kind() != c || pr.side != side) malformed(rule, "principal has the wrong shape");
  };
  auto without = [&]() {
    LabelledSequent s = concl;
    auto& v = side_of(s, pr.side);
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(at));
    return s;
  };
  auto add = [&](LabelledSequent& s, Side side, const Label& l, const Formula& g) {
    side_of(s, side).push_back({l, g, part});
  };
  auto need_other = [&]() {
    if (pr.other.empty()) malformed(rule, "missing target label");
  };

  Application app;
  app.part = part;
  switch (rule) {
    case Rule::Or: {
      expect(Connective::Or, Side::Right);
      LabelledSequent s = without();
      add(s, Side::Right, x, f.lhs());
      add(s, Side::Right, x, f.rhs());
      app.premises.push_back(std::move(s));
      break;
    }
    case Rule::And: {
      expect(Connective::And, Side::Right);
      for (const Formula* g : {&f.lhs(), &f.rhs()}) {
        LabelledSequent s = without();
        add(s, Side::Right, x, *g);
        app.premises.push_back(std::move(s));
      }
      break;
    }
    case Rule::Dia:
    case Rule::BDia: {
      expect(rule == Rule::Dia ? Connective::Dia : Connective::BDia, Side::Right);
      need_other();
      LabelledSequent s = concl;
      add(s, Side::Right, pr.other, f.body());
      app.premises.push_back(std::move(s));
      break;
    }
    case Rule::Box:
    case Rule::BBox: {
      expect(rule == Rule::Box ? Connective::Box : Connective::BBox, Side::Right);
      need_other();
      LabelledSequent s = without();
      s.rel.push_back(rule == Rule::Box ? RelAtom{x, pr.other} : RelAtom{pr.other, x});
      add(s, Side::Right, pr.other, f.body());
      app.premises.push_back(std::move(s));
      break;
    }
    case Rule::OrL: {
      expect(Connective::Or, Side::Left);
      for (const Formula* g : {&f.lhs(), &f.rhs()}) {
        LabelledSequent s = without();
        add(s, Side::Left, x, *g);
        app.premises.push_back(std::move(s));
      }
      break;
    }
    case Rule::OrR: {
      expect(Connective::Or, Side::Right);
      LabelledSequent s = without();
      add(s, Side::Right, x, f.lhs());
      add(s, Side::Right, x, f.rhs());
      app.premises.push_back(std::move(s));
      break;
    }
    case Rule::AndL: {
      expect(Connective::And, Side::Left);
      LabelledSequent s = without();
      add(s, Side::Left, x, f.lhs());
      add(s, Side::Left, x, f.rhs());
      app.premises.push_back(std::move(s));
      break;
    }
    case Rule::AndR: {
      expect(Connective::And, Side::Right);
      for (const Formula* g : {&f.lhs(), &f.rhs()}) {
        LabelledSequent s = without();
        add(s, Side::Right, x, *g);
        app.premises.push_back(std::move(s));
      }
      break;
    }
    case Rule::MonL: {
      if (pr.side != Side::Left) malformed(rule, "principal must be on the left");
      need_other();
      if (!has_rel(concl, x, pr.other)) malformed(rule, "missing relational atom");
      LabelledSequent s = concl;
      add(s, Side::Left, pr.other, f);
      app.premises.push_back(std::move(s));
      break;
    }
    case Rule::MonR: {
      if (pr.side != Side::Right) malformed(rule, "principal must be on the right");
      need_other();
      if (!has_rel(concl, pr.other, x)) malformed(rule, "missing relational atom");
      LabelledSequent s = concl;
      add(s, Side::Right, pr.other, f);
      app.premises.push_back(std::move(s));
      break;
    }
    case Rule::ImpL: {
      expect(Connective::Imp, Side::Left);
      LabelledSequent s1 = concl;
      add(s1, Side::Right, x, f.lhs());
      LabelledSequent s2 = without();
      add(s2, Side::Left, x, f.rhs());
      app.premises.push_back(std::move(s1));
      app.premises.push_back(std::move(s2));
      break;
    }
    case Rule::ImpR:
    case Rule::ExclL: {
      expect(rule == Rule::ImpR ? Connective::Imp : Connective::Excl, rule == Rule::ImpR ? Side::Right : Side::Left);
      need_other();
      LabelledSequent s = without();
      s.rel.push_back(rule == Rule::ImpR ? RelAtom{x, pr.other} : RelAtom{pr.other, x});
      add(s, Side::Left, pr.other, f.lhs());
      add(s, Side::Right, pr.other, f.rhs());
      app.premises.push_back(std::move(s));
      break;
    }
    case Rule::ExclR: {
      expect(Connective::Excl, Side::Right);
      LabelledSequent s1 = without();
      add(s1, Side::Right, x, f.lhs());
      LabelledSequent s2 = concl;
      if (opt.exclr_kept != Part::None) s2.right[at].part = opt.exclr_kept;
      add(s2, Side::Left, x, f.rhs());
      app.premises.push_back(std::move(s1));
      app.premises.push_back(std::move(s2));
      break;
    }
    default:
      malformed(rule, "not a core rule with premises");
  }
  return app;
}

}  // namespace nestcraig
