#include "nestcraig/formula.hpp"

#include <functional>
#include <utility>

namespace nestcraig {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Connective kind, std::string name, std::vector<Formula> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->children = std::move(children);
  std::size_t h = mix(0, static_cast<std::size_t>(kind) + 1);
  h = mix(h, std::hash<std::string>{}(node->name));
  for (const auto& c : node->children) {
    node->size += c.size();
    h = mix(h, c.hash());
  }
  node->hash = h;
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) { return make(Connective::Atom, std::move(name), {}); }
Formula Formula::neg_atom(std::string name) { return make(Connective::NegAtom, std::move(name), {}); }
Formula Formula::top() { return make(Connective::Top, {}, {}); }
Formula Formula::bot() { return make(Connective::Bot, {}, {}); }
Formula Formula::conj(Formula lhs, Formula rhs) { return make(Connective::And, {}, {std::move(lhs), std::move(rhs)}); }
Formula Formula::disj(Formula lhs, Formula rhs) { return make(Connective::Or, {}, {std::move(lhs), std::move(rhs)}); }
Formula Formula::box(Formula body) { return make(Connective::Box, {}, {std::move(body)}); }
Formula Formula::dia(Formula body) { return make(Connective::Dia, {}, {std::move(body)}); }
Formula Formula::bbox(Formula body) { return make(Connective::BBox, {}, {std::move(body)}); }
Formula Formula::bdia(Formula body) { return make(Connective::BDia, {}, {std::move(body)}); }
Formula Formula::neg(Formula body) { return make(Connective::Neg, {}, {std::move(body)}); }
Formula Formula::imp(Formula lhs, Formula rhs) { return make(Connective::Imp, {}, {std::move(lhs), std::move(rhs)}); }
Formula Formula::excl(Formula lhs, Formula rhs) { return make(Connective::Excl, {}, {std::move(lhs), std::move(rhs)}); }

Formula Formula::unary(Connective kind, Formula body) {
  if (!is_unary(kind)) throw std::invalid_argument("Formula::unary: not a unary connective");
  return make(kind, {}, {std::move(body)});
}

Formula Formula::binary(Connective kind, Formula lhs, Formula rhs) {
  if (!is_binary(kind)) throw std::invalid_argument("Formula::binary: not a binary connective");
  return make(kind, {}, {std::move(lhs), std::move(rhs)});
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.node_->children[i] == b.node_->children[i])) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name().compare(b.name()); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (auto c = a.node_->children[i] <=> b.node_->children[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool is_unary(Connective c) {
  switch (c) {
    case Connective::Box:
    case Connective::Dia:
    case Connective::BBox:
    case Connective::BDia:
    case Connective::Neg:
      return true;
    default:
      return false;
  }
}

bool is_binary(Connective c) {
  switch (c) {
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
    case Connective::Excl:
      return true;
    default:
      return false;
  }
}

bool is_modal(Connective c) {
  return c == Connective::Box || c == Connective::Dia || c == Connective::BBox || c == Connective::BDia;
}

bool is_tense_nnf(const Formula& f) {
  switch (f.kind()) {
    case Connective::Neg:
    case Connective::Imp:
    case Connective::Excl:
      return false;
    default:
      break;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (!is_tense_nnf(i == 0 ? f.lhs() : f.rhs())) return false;
  }
  return true;
}

bool is_bi_formula(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::Top:
    case Connective::Bot:
      return true;
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
    case Connective::Excl:
      return is_bi_formula(f.lhs()) && is_bi_formula(f.rhs());
    default:
      return false;
  }
}

bool has_past_modality(const Formula& f) {
  if (f.kind() == Connective::BBox || f.kind() == Connective::BDia) return true;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (has_past_modality(i == 0 ? f.lhs() : f.rhs())) return true;
  }
  return false;
}

Formula negate_nnf(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom: return Formula::neg_atom(f.name());
    case Connective::NegAtom: return Formula::atom(f.name());
    case Connective::Top: return Formula::bot();
    case Connective::Bot: return Formula::top();
    case Connective::And: return Formula::disj(negate_nnf(f.lhs()), negate_nnf(f.rhs()));
    case Connective::Or: return Formula::conj(negate_nnf(f.lhs()), negate_nnf(f.rhs()));
    case Connective::Box: return Formula::dia(negate_nnf(f.body()));
    case Connective::Dia: return Formula::box(negate_nnf(f.body()));
    case Connective::BBox: return Formula::bdia(negate_nnf(f.body()));
    case Connective::BDia: return Formula::bbox(negate_nnf(f.body()));
    case Connective::Neg:
    case Connective::Imp:
    case Connective::Excl:
      break;
  }
  throw std::invalid_argument("negate_nnf: formula is not in negation normal form: " + print(f));
}

Formula normalize(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::NegAtom:
    case Connective::Top:
    case Connective::Bot:
      return f;
    case Connective::And:
    case Connective::Or:
      return Formula::binary(f.kind(), normalize(f.lhs()), normalize(f.rhs()));
    case Connective::Box:
    case Connective::Dia:
    case Connective::BBox:
    case Connective::BDia:
      return Formula::unary(f.kind(), normalize(f.body()));
    case Connective::Neg:
      return negate_nnf(normalize(f.body()));
    case Connective::Imp:
      return Formula::disj(negate_nnf(normalize(f.lhs())), normalize(f.rhs()));
    case Connective::Excl:
      break;
  }
  throw std::invalid_argument("normalize: exclusion is not a tense connective");
}

namespace {

void collect_vars(const Formula& f, std::set<std::string>& out) {
  if (f.is_literal()) {
    out.insert(f.name());
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_vars(i == 0 ? f.lhs() : f.rhs(), out);
}

const char* unary_prefix(Connective c) {
  switch (c) {
    case Connective::Box: return "[]";
    case Connective::Dia: return "<>";
    case Connective::BBox: return "[b]";
    case Connective::BDia: return "<b>";
    default: return "~";
  }
}

const char* binary_op(Connective c) {
  switch (c) {
    case Connective::And: return "&";
    case Connective::Or: return "|";
    case Connective::Imp: return "->";
    default: return "-<";
  }
}

int precedence(Connective c) {
  switch (c) {
    case Connective::Imp:
    case Connective::Excl:
      return 1;
    case Connective::Or:
      return 2;
    case Connective::And:
      return 3;
    default:
      return 4;
  }
}

void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Connective::Atom: out += f.name(); return;
    case Connective::NegAtom: out += '~'; out += f.name(); return;
    case Connective::Top: out += "top"; return;
    case Connective::Bot: out += "bot"; return;
    case Connective::Neg:
      out += "~(";
      print_into(f.body(), out);
      out += ')';
      return;
    default:
      break;
  }
  if (is_unary(f.kind())) {
    out += unary_prefix(f.kind());
    print_into(f.body(), out);
    return;
  }
  out += '(';
  print_into(f.lhs(), out);
  out += ' ';
  out += binary_op(f.kind());
  out += ' ';
  print_into(f.rhs(), out);
  out += ')';
}

void pretty_into(const Formula& f, int required, std::string& out) {
  const int prec = precedence(f.kind());
  const bool parens = prec < required;
  if (parens) out += '(';
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::NegAtom:
    case Connective::Top:
    case Connective::Bot:
      print_into(f, out);
      break;
    case Connective::Neg:
      out += "~(";
      pretty_into(f.body(), 0, out);
      out += ')';
      break;
    default:
      if (is_unary(f.kind())) {
        out += unary_prefix(f.kind());
        pretty_into(f.body(), 4, out);
      } else {
        pretty_into(f.lhs(), prec + 1, out);
        out += ' ';
        out += binary_op(f.kind());
        out += ' ';
        pretty_into(f.rhs(), prec, out);
      }
  }
  if (parens) out += ')';
}

}  // namespace

std::set<std::string> vars(const Formula& f) {
  std::set<std::string> out;
  collect_vars(f, out);
  return out;
}

std::string print(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

std::string pretty(const Formula& f) {
  std::string out;
  pretty_into(f, 0, out);
  return out;
}

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return name != "top" && name != "bot";
}

}  // namespace nestcraig
