#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "nestcraig/formula.hpp"

namespace nestcraig {

using Label = std::string;

/// Relational atom R from to.
struct RelAtom {
  Label from;
  Label to;

  friend bool operator==(const RelAtom&, const RelAtom&) = default;
  friend auto operator<=>(const RelAtom&, const RelAtom&) = default;
};

/// Marks which side of an interpolation split an occurrence belongs to.
enum class Part : unsigned char { None = 0, One = 1, Two = 2 };

inline Part other(Part p) {
  return p == Part::One ? Part::Two : p == Part::Two ? Part::One : Part::None;
}

struct LabelledFormula {
  Label label;
  Formula formula;

  friend bool operator==(const LabelledFormula&, const LabelledFormula&) = default;
  friend std::strong_ordering operator<=>(const LabelledFormula& a, const LabelledFormula& b) {
    if (auto c = a.label <=> b.label; c != 0) return c;
    return a.formula <=> b.formula;
  }
};

/// A formula occurrence inside a labelled sequent, with its optional split tag.
struct Occurrence {
  Label label;
  Formula formula;
  Part part = Part::None;

  LabelledFormula lf() const { return {label, formula}; }
  bool same_formula(const Label& l, const Formula& f) const { return label == l && formula == f; }
};

/// R, Gamma |- Delta. Tense sequents keep `left` empty.
struct LabelledSequent {
  std::vector<RelAtom> rel;
  std::vector<Occurrence> left;
  std::vector<Occurrence> right;

  std::set<Label> labels() const;
  bool has_label(const Label& l) const;
  bool partitioned() const;
};

/// Multiset equality on relational atoms and labelled formulas; parts are ignored.
bool same_sequent(const LabelledSequent& a, const LabelledSequent& b);
/// True iff `small` is a sub-multiset of `big` (parts ignored).
bool sub_sequent(const LabelledSequent& small, const LabelledSequent& big);

/// Number of occurrences of l:f on the given side.
std::size_t count(const std::vector<Occurrence>& side, const Label& l, const Formula& f);
/// Removes one occurrence of l:f; returns false when absent.
bool remove_one(std::vector<Occurrence>& side, const Label& l, const Formula& f);

LabelledSequent strip_parts(LabelledSequent s);

/// Sequent without relational atoms. Interpolant members keep both sides sorted
/// and duplicate-free.
struct FlatSequent {
  std::vector<LabelledFormula> left;
  std::vector<LabelledFormula> right;

  bool empty() const { return left.empty() && right.empty(); }
  std::size_t size() const { return left.size() + right.size(); }

  friend bool operator==(const FlatSequent&, const FlatSequent&) = default;
  friend auto operator<=>(const FlatSequent&, const FlatSequent&) = default;
};

/// Sorts both sides and drops repeated occurrences.
FlatSequent canonical(FlatSequent s);
/// Canonical members are subsets of each other side-wise.
bool flat_subset(const FlatSequent& small, const FlatSequent& big);
LabelledSequent to_labelled(const FlatSequent& s);

enum class Polarity : unsigned char { L, R };

inline Polarity dual(Polarity p) { return p == Polarity::L ? Polarity::R : Polarity::L; }

struct PolarisedFormula {
  Label label;
  Formula formula;
  Polarity polarity;

  friend bool operator==(const PolarisedFormula&, const PolarisedFormula&) = default;
  friend std::strong_ordering operator<=>(const PolarisedFormula& a, const PolarisedFormula& b) {
    if (auto c = a.label <=> b.label; c != 0) return c;
    if (auto c = a.formula <=> b.formula; c != 0) return c;
    return a.polarity <=> b.polarity;
  }
};

using PolarisedSequent = std::vector<PolarisedFormula>;

PolarisedSequent polarise(const FlatSequent& s);
FlatSequent depolarise(const PolarisedSequent& s);

/// Replaces every occurrence of label `y` by `x`.
LabelledSequent substitute_label(const LabelledSequent& s, const Label& x, const Label& y);

/// Undirected graph of `rel` is a forest and all labels form one component.
bool validate_polytree(const LabelledSequent& s);

/// Fresh label supply scoped to one search session: x, y, z, w, u, v, l6, l7, ...
class LabelSupply {
 public:
  explicit LabelSupply(std::set<Label> taken = {}) : taken_(std::move(taken)) {}
  Label next();
  void reserve(const Label& l) { taken_.insert(l); }

 private:
  std::set<Label> taken_;
  std::size_t counter_ = 0;
};

std::string print(const LabelledFormula& lf);
std::string print(const FlatSequent& s);
std::string print(const LabelledSequent& s);

}  // namespace nestcraig
