#include "nestcraig/interpolate.hpp"

#include <algorithm>
#include <functional>

#include "nestcraig/rules.hpp"

namespace nestcraig {

Interpolant Interpolant::make(std::vector<FlatSequent> members) {
  for (auto& m : members) m = canonical(std::move(m));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Interpolant{std::move(members)};
}

Interpolant unite(const Interpolant& a, const Interpolant& b) {
  std::vector<FlatSequent> all = a.members;
  all.insert(all.end(), b.members.begin(), b.members.end());
  return Interpolant::make(std::move(all));
}

namespace {

void collapse(std::vector<FlatSequent>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Interpolant orthogonal_tense(const Interpolant& i) {
  std::vector<FlatSequent> acc{FlatSequent{}};
  for (const auto& member : i.members) {
    std::vector<FlatSequent> next;
    for (const auto& partial : acc) {
      for (const auto& lf : member.right) {
        FlatSequent s = partial;
        s.right.push_back({lf.label, negate_nnf(lf.formula)});
        next.push_back(canonical(std::move(s)));
      }
    }
    collapse(next);
    acc = std::move(next);
  }
  return Interpolant::make(std::move(acc));
}

Interpolant orthogonal_bi(const Interpolant& i) {
  std::vector<PolarisedSequent> acc{PolarisedSequent{}};
  for (const auto& member : i.members) {
    std::vector<PolarisedSequent> next;
    for (const auto& partial : acc) {
      for (const auto& pf : polarise(member)) {
        PolarisedSequent s = partial;
        s.push_back({pf.label, pf.formula, dual(pf.polarity)});
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        next.push_back(std::move(s));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    acc = std::move(next);
  }
  std::vector<FlatSequent> out;
  out.reserve(acc.size());
  for (const auto& s : acc) out.push_back(depolarise(s));
  return Interpolant::make(std::move(out));
}

Interpolant orthogonal(Logic logic, const Interpolant& i) {
  return logic == Logic::Tense ? orthogonal_tense(i) : orthogonal_bi(i);
}

namespace {

// Right-nested fold; `unit` for the empty list.
Formula fold(Connective c, const std::vector<Formula>& fs, const Formula& unit) {
  if (fs.empty()) return unit;
  Formula acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = Formula::binary(c, *it, acc);
  return acc;
}

Formula big_or(const std::vector<Formula>& fs) { return fold(Connective::Or, fs, Formula::bot()); }
Formula big_and(const std::vector<Formula>& fs) { return fold(Connective::And, fs, Formula::top()); }

std::vector<Formula> take_label(std::vector<LabelledFormula>& side, const Label& y) {
  std::vector<Formula> taken;
  std::vector<LabelledFormula> rest;
  for (auto& lf : side) {
    if (lf.label == y) {
      taken.push_back(lf.formula);
    } else {
      rest.push_back(std::move(lf));
    }
  }
  side = std::move(rest);
  return taken;
}

}  // namespace

Interpolant box_transform(const Interpolant& i, const Label& x, const Label& y, Connective k) {
  std::vector<FlatSequent> out;
  for (FlatSequent m : i.members) {
    const std::vector<Formula> ys = take_label(m.right, y);
    m.right.push_back({x, Formula::unary(k, big_or(ys))});
    out.push_back(std::move(m));
  }
  return Interpolant::make(std::move(out));
}

namespace {

Interpolant bi_transform(const Interpolant& i, const Label& x, const Label& y, Connective k) {
  std::vector<FlatSequent> out;
  for (FlatSequent m : i.members) {
    const std::vector<Formula> c = take_label(m.left, y);
    const std::vector<Formula> d = take_label(m.right, y);
    LabelledFormula lf{x, Formula::binary(k, big_and(c), big_or(d))};
    (k == Connective::Imp ? m.right : m.left).push_back(std::move(lf));
    out.push_back(std::move(m));
  }
  return Interpolant::make(std::move(out));
}

}  // namespace

Interpolant imp_transform(const Interpolant& i, const Label& x, const Label& y) {
  return bi_transform(i, x, y, Connective::Imp);
}

Interpolant excl_transform(const Interpolant& i, const Label& x, const Label& y) {
  return bi_transform(i, x, y, Connective::Excl);
}

namespace {

Interpolant single(const Label& x, const Formula& f) {
  FlatSequent s;
  s.right.push_back({x, f});
  return Interpolant::make({s});
}

// Drops members that contain another member; orthogonals of the result
// keep exactly the minimal members of the full orthogonal.
template <typename T, typename Subset>
void absorb(std::vector<T>& v, Subset subset) {
  std::stable_sort(v.begin(), v.end(), [](const T& a, const T& b) { return a.size() < b.size(); });
  std::vector<T> kept;
  for (auto& m : v) {
    bool covered = false;
    for (const auto& k : kept) {
      if (subset(k, m)) {
        covered = true;
        break;
      }
    }
    if (!covered) kept.push_back(std::move(m));
  }
  v = std::move(kept);
}

bool polarised_subset(const PolarisedSequent& a, const PolarisedSequent& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Interpolant reduce(Interpolant i) {
  absorb(i.members, flat_subset);
  return Interpolant::make(std::move(i.members));
}

// orthogonal() followed by reduce(), absorbing at every step.
Interpolant reduced_orthogonal(Logic logic, const Interpolant& in) {
  const Interpolant i = reduce(in);
  std::vector<PolarisedSequent> acc{PolarisedSequent{}};
  for (const auto& member : i.members) {
    std::vector<PolarisedSequent> next;
    for (const auto& partial : acc) {
      for (const auto& pf : polarise(member)) {
        PolarisedSequent s = partial;
        if (logic == Logic::Tense) {
          s.push_back({pf.label, negate_nnf(pf.formula), Polarity::R});
        } else {
          s.push_back({pf.label, pf.formula, dual(pf.polarity)});
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        next.push_back(std::move(s));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    absorb(next, polarised_subset);
    acc = std::move(next);
  }
  std::vector<FlatSequent> out;
  out.reserve(acc.size());
  for (const auto& s : acc) out.push_back(depolarise(s));
  return Interpolant::make(std::move(out));
}

class Interpolator {
 public:
  Interpolator(Logic logic, InterpolateOptions opt) : logic_(logic), opt_(opt) {}

  Interpolant run(const Proof& p, const LabelledSequent& cur, bool flip) const {
    if (!same_sequent(p.conclusion, cur)) {
      throw MalformedProof(std::string(rule_name(p.rule)) + ": conclusion does not match the derived sequent");
    }
    const Part want = flip ? Part::One : Part::Two;
    auto in_two = [&](Part actual) { return actual == want; };
    const Principal& pr = p.principal;
    if (!pr.formula) throw MalformedProof(std::string(rule_name(p.rule)) + ": missing principal formula");
    const Formula& f = *pr.formula;
    const Label& x = pr.label;
    auto need_leaf = [&] {
      if (!p.premises.empty()) throw MalformedProof(std::string(rule_name(p.rule)) + ": axiom with premises");
    };

    switch (p.rule) {
      case Rule::Id: {
        need_leaf();
        // keyed on the right-hand occurrence (x:p)
        const std::size_t at = find_occurrence(cur.right, x, f, want);
        if (at == cur.right.size()) throw MalformedProof("id: missing x:p");
        const Part part = cur.right[at].part;
        if (!in_two(part)) return reduced_orthogonal(logic_, run(p, cur, !flip));
        const auto& mates = logic_ == Logic::Tense ? cur.right : cur.left;
        const Formula mate = logic_ == Logic::Tense ? Formula::neg_atom(f.name()) : f;
        const std::size_t m = find_occurrence(mates, x, mate, part);
        if (m == mates.size()) throw MalformedProof("id: missing complementary literal");
        return in_two(mates[m].part) ? single(x, Formula::top()) : single(x, f);
      }
      case Rule::Top:
      case Rule::Bot: {
        need_leaf();
        const auto& side = p.rule == Rule::Top ? cur.right : cur.left;
        const std::size_t at = find_occurrence(side, x, f, want);
        if (at == side.size()) throw MalformedProof(std::string(rule_name(p.rule)) + ": missing principal");
        if (!in_two(side[at].part)) return reduced_orthogonal(logic_, run(p, cur, !flip));
        return single(x, Formula::top());
      }
      default:
        break;
    }

    const auto& src = pr.side == Side::Left ? cur.left : cur.right;
    const std::size_t at = find_occurrence(src, x, f, want);
    if (at == src.size()) throw MalformedProof(std::string(rule_name(p.rule)) + ": principal not in conclusion");
    if (!in_two(src[at].part)) return reduced_orthogonal(logic_, run(p, cur, !flip));

    ApplyOptions ao;
    ao.prefer = want;
    if (opt_.exclr_principal_part1) ao.exclr_kept = other(want);
    const Application app = apply_rule(cur, p.rule, pr, ao);
    if (app.premises.size() != p.premises.size()) {
      throw MalformedProof(std::string(rule_name(p.rule)) + ": wrong number of premises");
    }
    std::vector<Interpolant> subs;
    for (std::size_t k = 0; k < app.premises.size(); ++k) subs.push_back(run(p.premises[k], app.premises[k], flip));

    switch (p.rule) {
      case Rule::Or:
      case Rule::Dia:
      case Rule::BDia:
      case Rule::OrR:
      case Rule::AndL:
      case Rule::MonL:
      case Rule::MonR:
        return subs[0];
      case Rule::And:
      case Rule::OrL:
      case Rule::AndR:
      case Rule::ImpL:
      case Rule::ExclR:
        return reduce(unite(subs[0], subs[1]));
      case Rule::Box:
        return reduce(box_transform(subs[0], x, pr.other, Connective::Box));
      case Rule::BBox:
        return reduce(box_transform(subs[0], x, pr.other, Connective::BBox));
      case Rule::ImpR:
        return reduce(imp_transform(subs[0], x, pr.other));
      case Rule::ExclL:
        return reduce(excl_transform(subs[0], x, pr.other));
      default:
        throw MalformedProof(std::string(rule_name(p.rule)) + ": not an interpolation rule");
    }
  }

 private:
  Logic logic_;
  InterpolateOptions opt_;
};

void require_split(const LabelledSequent& split) {
  if (!split.partitioned()) throw std::invalid_argument("split does not tag every occurrence");
}

}  // namespace

Interpolant interpolate_kt(const Proof& p, const LabelledSequent& split) {
  require_split(split);
  return Interpolator(Logic::Tense, {}).run(p, split, false);
}

Interpolant interpolate_bi(const Proof& p, const LabelledSequent& split, const InterpolateOptions& opt) {
  require_split(split);
  return Interpolator(Logic::BiInt, opt).run(p, split, false);
}

namespace {

void require_label(const std::vector<LabelledFormula>& side, const Label& x) {
  for (const auto& lf : side) {
    if (lf.label != x) throw MixedLabels("interpolant formula labelled " + lf.label + ", expected " + x);
  }
}

std::vector<Formula> formulas(const std::vector<LabelledFormula>& side) {
  std::vector<Formula> out;
  for (const auto& lf : side) out.push_back(lf.formula);
  return out;
}

}  // namespace

Formula formula_of_tense(const Interpolant& i, const Label& x) {
  std::vector<Formula> conj;
  for (const auto& m : i.members) {
    if (!m.left.empty()) throw std::invalid_argument("tense interpolant member with antecedent");
    require_label(m.right, x);
    conj.push_back(big_or(formulas(m.right)));
  }
  return big_and(conj);
}

Formula formula_of_bi(const Interpolant& i, const Label& x) {
  std::vector<Formula> conj;
  for (const auto& m : i.members) {
    require_label(m.left, x);
    require_label(m.right, x);
    conj.push_back(Formula::imp(big_and(formulas(m.left)), big_or(formulas(m.right))));
  }
  return big_and(conj);
}

namespace {

class DualityBuilder {
 public:
  using Leaf = std::function<Proof(const PolarisedSequent&)>;

  DualityBuilder(const Interpolant& i, Logic logic) : logic_(logic) {
    for (const auto& m : i.members) members_.push_back(polarise(m));
  }

  Proof build() {
    for (const auto& m : members_) {
      if (m.empty()) return hyp({});
    }
    return derive(0, [this](const PolarisedSequent& theta) { return hyp(theta); });
  }

 private:
  PolarisedFormula dual_of(const PolarisedFormula& a) const {
    if (logic_ == Logic::Tense) return {a.label, negate_nnf(a.formula), a.polarity};
    return {a.label, a.formula, dual(a.polarity)};
  }

  static PolarisedSequent canon(PolarisedSequent s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  static LabelledSequent seq(const PolarisedSequent& s) {
    LabelledSequent out;
    for (const auto& pf : s) {
      (pf.polarity == Polarity::L ? out.left : out.right).push_back({pf.label, pf.formula, Part::None});
    }
    return out;
  }

  static Proof hyp(const PolarisedSequent& s) {
    Proof p;
    p.rule = Rule::Hyp;
    p.conclusion = seq(s);
    return p;
  }

  static Proof weaken(const PolarisedSequent& to, Proof from) {
    Proof p;
    p.rule = Rule::Wk;
    p.conclusion = seq(to);
    p.premises.push_back(std::move(from));
    return p;
  }

  // Empty sequent from members_[k..] and their orthogonal; orthogonal leaves come from `leaf`.
  Proof derive(std::size_t k, const Leaf& leaf) {
    if (k == members_.size()) return leaf({});
    return derive(k + 1, [&, k](const PolarisedSequent& theta) { return xi(theta, members_[k], leaf); });
  }

  // Derivation of theta from lambda and the sequents theta + dual(a), a in lambda.
  Proof xi(const PolarisedSequent& theta, const PolarisedSequent& lambda, const Leaf& leaf) {
    auto with_tail = [&](std::size_t from) {
      PolarisedSequent s = theta;
      s.insert(s.end(), lambda.begin() + static_cast<std::ptrdiff_t>(from), lambda.end());
      return s;
    };
    Proof cur = weaken(with_tail(0), hyp(lambda));
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      const PolarisedFormula& a = lambda[j];
      const PolarisedFormula abar = dual_of(a);
      const PolarisedSequent concl = with_tail(j + 1);
      PolarisedSequent other_concl = concl;
      other_concl.push_back(abar);
      PolarisedSequent leaf_seq = theta;
      leaf_seq.push_back(abar);
      Proof other_side = weaken(other_concl, leaf(canon(std::move(leaf_seq))));

      Proof step;
      step.conclusion = seq(concl);
      step.principal.side = Side::Right;
      step.principal.label = a.label;
      step.principal.formula = a.formula;
      if (logic_ == Logic::Tense) {
        step.rule = Rule::Cut1;
        step.premises.push_back(std::move(cur));
        step.premises.push_back(std::move(other_side));
      } else {
        step.rule = Rule::Cut2;
        if (a.polarity == Polarity::R) {
          step.premises.push_back(std::move(cur));
          step.premises.push_back(std::move(other_side));
        } else {
          step.premises.push_back(std::move(other_side));
          step.premises.push_back(std::move(cur));
        }
      }
      cur = std::move(step);
    }
    return cur;
  }

  Logic logic_;
  std::vector<PolarisedSequent> members_;
};

}  // namespace

Proof duality_derivation(const Interpolant& i, Logic logic) { return DualityBuilder(i, logic).build(); }

LabelledSequent craig_goal_tense(const Formula& a, const Formula& b) {
  LabelledSequent s;
  s.right.push_back({"x", negate_nnf(a), Part::One});
  s.right.push_back({"x", b, Part::Two});
  return s;
}

LabelledSequent craig_goal_bi(const Formula& a, const Formula& b) {
  LabelledSequent s;
  s.left.push_back({"x", a, Part::One});
  s.right.push_back({"x", b, Part::Two});
  return s;
}

namespace {

std::size_t eigen_count(const Formula& f) {
  std::size_t n = 0;
  switch (f.kind()) {
    case Connective::Box:
    case Connective::BBox:
    case Connective::Imp:
    case Connective::Excl:
      n = 1;
      break;
    default:
      break;
  }
  for (std::size_t k = 0; k < f.arity(); ++k) n += eigen_count(k == 0 ? f.lhs() : f.rhs());
  return n;
}

Proof reprove(Logic logic, const Formula& goal, const SearchConfig& cfg, const Formula& c, const char* which) {
  SearchConfig again = cfg;
  again.depth_bound = 2 * cfg.depth_bound + eigen_count(c);
  SearchResult r = prove(logic, right_goal(goal), again);
  if (!r.proved()) {
    throw InterpolantReproofFailed(std::string("re-proof of ") + which + " failed (" +
                                   std::string(status_name(r.status)) + "): " + print(goal));
  }
  return std::move(*r.proof);
}

}  // namespace

CraigResult craig_tense(const Formula& a, const Formula& b, const SearchConfig& cfg) {
  CraigResult out;
  const LabelledSequent goal = craig_goal_tense(a, b);
  SearchResult r = prove_kt(goal, cfg);
  out.status = r.status;
  if (!r.proved()) return out;
  out.interpolant = interpolate_kt(*r.proof, goal);
  const Formula c = formula_of_tense(out.interpolant, "x");
  out.proof_ac = reprove(Logic::Tense, Formula::disj(negate_nnf(a), c), cfg, c, "A -> C");
  out.proof_cb = reprove(Logic::Tense, Formula::disj(negate_nnf(c), b), cfg, c, "C -> B");
  out.c = c;
  out.proof = std::move(r.proof);
  return out;
}

CraigResult craig_bi(const Formula& a, const Formula& b, const SearchConfig& cfg, const InterpolateOptions& opt) {
  CraigResult out;
  const LabelledSequent goal = craig_goal_bi(a, b);
  SearchResult r = prove_bi(goal, cfg);
  out.status = r.status;
  if (!r.proved()) return out;
  out.interpolant = interpolate_bi(*r.proof, goal, opt);
  const Formula c = formula_of_bi(out.interpolant, "x");
  out.proof_ac = reprove(Logic::BiInt, Formula::imp(a, c), cfg, c, "A -> C");
  out.proof_cb = reprove(Logic::BiInt, Formula::imp(c, b), cfg, c, "C -> B");
  out.c = c;
  out.proof = std::move(r.proof);
  return out;
}

}  // namespace nestcraig
