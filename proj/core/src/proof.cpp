#include "nestcraig/proof.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace nestcraig {

namespace {

constexpr std::array<std::string_view, 27> kNames = {
    "id",   "Top",  "Bot",  "Or",   "And",   "Dia",   "Box", "BDia",     "BBox",      "OrL",
    "OrR",  "AndL", "AndR", "MonL", "MonR",  "ImpL",  "ImpR", "ExclL",   "ExclR",     "Ctr",
    "Wk",   "Cut1", "Cut2", "ImpLStar", "ExclRStar", "Refl", "Hyp",
};

}  // namespace

std::string_view rule_name(Rule r) { return kNames[static_cast<std::size_t>(r)]; }

std::optional<Rule> rule_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Rule>(i);
  }
  return std::nullopt;
}

std::vector<Rule> all_rules() {
  std::vector<Rule> out;
  for (std::size_t i = 0; i < kNames.size(); ++i) out.push_back(static_cast<Rule>(i));
  return out;
}

bool rule_in_logic(Rule r, Logic logic) {
  switch (r) {
    case Rule::Id:
    case Rule::Top:
    case Rule::Ctr:
    case Rule::Wk:
    case Rule::Hyp:
      return true;
    case Rule::Or:
    case Rule::And:
    case Rule::Dia:
    case Rule::Box:
    case Rule::BDia:
    case Rule::BBox:
    case Rule::Cut1:
      return logic == Logic::Tense;
    default:
      return logic == Logic::BiInt;
  }
}

std::size_t proof_size(const Proof& p) {
  std::size_t n = 1;
  for (const auto& q : p.premises) n += proof_size(q);
  return n;
}

std::size_t proof_height(const Proof& p) {
  std::size_t h = 0;
  for (const auto& q : p.premises) h = std::max(h, proof_height(q));
  return h + 1;
}

std::vector<std::pair<Rule, std::size_t>> rule_counts(const Proof& p) {
  std::map<Rule, std::size_t> counts;
  std::vector<const Proof*> stack{&p};
  while (!stack.empty()) {
    const Proof* cur = stack.back();
    stack.pop_back();
    ++counts[cur->rule];
    for (const auto& q : cur->premises) stack.push_back(&q);
  }
  return {counts.begin(), counts.end()};
}

namespace {

void render_into(const Proof& p, std::size_t depth, std::string& out) {
  out.append(depth * 2, ' ');
  out += '[';
  out += rule_name(p.rule);
  out += "] ";
  out += print(p.conclusion);
  out += '\n';
  for (const auto& q : p.premises) render_into(q, depth + 1, out);
}

}  // namespace

std::string render(const Proof& p) {
  std::string out;
  render_into(p, 0, out);
  return out;
}

}  // namespace nestcraig
