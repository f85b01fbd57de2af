#include "nestcraig/sequent.hpp"

#include <algorithm>
#include <map>

namespace nestcraig {

std::set<Label> LabelledSequent::labels() const {
  std::set<Label> out;
  for (const auto& r : rel) {
    out.insert(r.from);
    out.insert(r.to);
  }
  for (const auto& o : left) out.insert(o.label);
  for (const auto& o : right) out.insert(o.label);
  return out;
}

bool LabelledSequent::has_label(const Label& l) const {
  for (const auto& r : rel) {
    if (r.from == l || r.to == l) return true;
  }
  for (const auto& o : left) {
    if (o.label == l) return true;
  }
  for (const auto& o : right) {
    if (o.label == l) return true;
  }
  return false;
}

bool LabelledSequent::partitioned() const {
  for (const auto& o : left) {
    if (o.part == Part::None) return false;
  }
  for (const auto& o : right) {
    if (o.part == Part::None) return false;
  }
  return true;
}

namespace {

std::vector<LabelledFormula> sorted_side(const std::vector<Occurrence>& side) {
  std::vector<LabelledFormula> out;
  out.reserve(side.size());
  for (const auto& o : side) out.push_back(o.lf());
  std::sort(out.begin(), out.end());
  return out;
}

template <typename T>
bool sub_multiset(std::vector<T> small, std::vector<T> big) {
  std::sort(small.begin(), small.end());
  std::sort(big.begin(), big.end());
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

bool same_sequent(const LabelledSequent& a, const LabelledSequent& b) {
  if (a.rel.size() != b.rel.size() || a.left.size() != b.left.size() || a.right.size() != b.right.size()) {
    return false;
  }
  auto ra = a.rel;
  auto rb = b.rel;
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb && sorted_side(a.left) == sorted_side(b.left) && sorted_side(a.right) == sorted_side(b.right);
}

bool sub_sequent(const LabelledSequent& small, const LabelledSequent& big) {
  return sub_multiset(small.rel, big.rel) && sub_multiset(sorted_side(small.left), sorted_side(big.left)) &&
         sub_multiset(sorted_side(small.right), sorted_side(big.right));
}

std::size_t count(const std::vector<Occurrence>& side, const Label& l, const Formula& f) {
  return static_cast<std::size_t>(
      std::count_if(side.begin(), side.end(), [&](const Occurrence& o) { return o.same_formula(l, f); }));
}

bool remove_one(std::vector<Occurrence>& side, const Label& l, const Formula& f) {
  auto it = std::find_if(side.begin(), side.end(), [&](const Occurrence& o) { return o.same_formula(l, f); });
  if (it == side.end()) return false;
  side.erase(it);
  return true;
}

LabelledSequent strip_parts(LabelledSequent s) {
  for (auto& o : s.left) o.part = Part::None;
  for (auto& o : s.right) o.part = Part::None;
  return s;
}

FlatSequent canonical(FlatSequent s) {
  for (auto* side : {&s.left, &s.right}) {
    std::sort(side->begin(), side->end());
    side->erase(std::unique(side->begin(), side->end()), side->end());
  }
  return s;
}

bool flat_subset(const FlatSequent& small, const FlatSequent& big) {
  return std::includes(big.left.begin(), big.left.end(), small.left.begin(), small.left.end()) &&
         std::includes(big.right.begin(), big.right.end(), small.right.begin(), small.right.end());
}

LabelledSequent to_labelled(const FlatSequent& s) {
  LabelledSequent out;
  for (const auto& lf : s.left) out.left.push_back({lf.label, lf.formula, Part::None});
  for (const auto& lf : s.right) out.right.push_back({lf.label, lf.formula, Part::None});
  return out;
}

PolarisedSequent polarise(const FlatSequent& s) {
  PolarisedSequent out;
  out.reserve(s.size());
  for (const auto& lf : s.left) out.push_back({lf.label, lf.formula, Polarity::L});
  for (const auto& lf : s.right) out.push_back({lf.label, lf.formula, Polarity::R});
  return out;
}

FlatSequent depolarise(const PolarisedSequent& s) {
  FlatSequent out;
  for (const auto& pf : s) {
    (pf.polarity == Polarity::L ? out.left : out.right).push_back({pf.label, pf.formula});
  }
  return out;
}

LabelledSequent substitute_label(const LabelledSequent& s, const Label& x, const Label& y) {
  LabelledSequent out = s;
  auto sub = [&](Label& l) {
    if (l == y) l = x;
  };
  for (auto& r : out.rel) {
    sub(r.from);
    sub(r.to);
  }
  for (auto& o : out.left) sub(o.label);
  for (auto& o : out.right) sub(o.label);
  return out;
}

bool validate_polytree(const LabelledSequent& s) {
  const std::set<Label> labels = s.labels();
  if (labels.empty()) return true;
  std::map<Label, Label> parent;
  for (const auto& l : labels) parent[l] = l;
  auto find = [&](Label l) {
    while (parent[l] != l) {
      parent[l] = parent[parent[l]];
      l = parent[l];
    }
    return l;
  };
  for (const auto& r : s.rel) {
    if (r.from == r.to) return false;
    Label a = find(r.from);
    Label b = find(r.to);
    if (a == b) return false;
    parent[a] = b;
  }
  const Label root = find(*labels.begin());
  return std::all_of(labels.begin(), labels.end(), [&](const Label& l) { return find(l) == root; });
}

Label LabelSupply::next() {
  static const char* const kBase[] = {"x", "y", "z", "w", "u", "v"};
  for (;;) {
    const std::size_t i = counter_++;
    Label candidate = i < 6 ? Label(kBase[i]) : "l" + std::to_string(i);
    if (taken_.insert(candidate).second) return candidate;
  }
}

std::string print(const LabelledFormula& lf) { return lf.label + ": " + print(lf.formula); }

namespace {

template <typename Range>
std::string join_side(const Range& side) {
  std::string out;
  bool first = true;
  for (const auto& item : side) {
    if (!first) out += ", ";
    first = false;
    out += item.label + ": " + print(item.formula);
  }
  return out;
}

}  // namespace

std::string print(const FlatSequent& s) {
  std::string l = join_side(s.left);
  std::string r = join_side(s.right);
  return (l.empty() ? "" : l + " ") + "|-" + (r.empty() ? "" : " " + r);
}

std::string print(const LabelledSequent& s) {
  std::string out;
  for (const auto& r : s.rel) {
    if (!out.empty()) out += ", ";
    out += "R(" + r.from + "," + r.to + ")";
  }
  std::string l = join_side(s.left);
  if (!l.empty()) out += (out.empty() ? "" : ", ") + l;
  std::string r = join_side(s.right);
  return out + (out.empty() ? "" : " ") + "|-" + (r.empty() ? "" : " " + r);
}

}  // namespace nestcraig
