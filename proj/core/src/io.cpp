#include "nestcraig/io.hpp"

#include <json.hpp>

namespace nestcraig {

using json = nlohmann::json;

std::string_view logic_name(Logic logic) { return logic == Logic::Tense ? "kt" : "bi"; }

std::optional<Logic> logic_from_name(std::string_view name) {
  if (name == "kt") return Logic::Tense;
  if (name == "bi") return Logic::BiInt;
  return std::nullopt;
}

namespace {

std::string kind_char(DiamondKind k) { return k == DiamondKind::White ? "d" : "b"; }

DiamondKind kind_from(const std::string& s) {
  if (s == "d") return DiamondKind::White;
  if (s == "b") return DiamondKind::Black;
  throw FormatError("diamond kind must be \"d\" or \"b\", got \"" + s + "\"");
}

Formula formula_from(const std::string& text, Logic logic) {
  try {
    return parse(text, logic);
  } catch (const ParseError& e) {
    throw FormatError("bad formula \"" + text + "\": " + e.what());
  }
}

std::string lf_text(const Occurrence& o) { return o.label + ": " + print(o.formula); }

Occurrence occurrence_from(const std::string& text, Logic logic) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0) throw FormatError("labelled formula without label: \"" + text + "\"");
  return {text.substr(0, colon), formula_from(text.substr(colon + 1), logic), Part::None};
}

json rel_json(const RelAtom& r) { return r.from + " " + r.to; }

RelAtom rel_from(const std::string& text) {
  const auto sp = text.find(' ');
  if (sp == std::string::npos || sp == 0 || sp + 1 >= text.size()) {
    throw FormatError("relational atom must be \"x y\", got \"" + text + "\"");
  }
  return {text.substr(0, sp), text.substr(sp + 1)};
}

json sequent_json(const LabelledSequent& s) {
  json j;
  j["rel"] = json::array();
  for (const auto& r : s.rel) j["rel"].push_back(rel_json(r));
  j["left"] = json::array();
  j["right"] = json::array();
  bool tagged = false;
  json parts = json::array();
  for (const auto* side : {&s.left, &s.right}) {
    for (const auto& o : *side) {
      (side == &s.left ? j["left"] : j["right"]).push_back(lf_text(o));
      parts.push_back(static_cast<int>(o.part));
      tagged = tagged || o.part != Part::None;
    }
  }
  if (tagged) j["part"] = parts;
  return j;
}

LabelledSequent sequent_from(const json& j, Logic logic) {
  if (!j.is_object()) throw FormatError("sequent must be an object");
  LabelledSequent s;
  for (const auto& r : j.value("rel", json::array())) s.rel.push_back(rel_from(r.get<std::string>()));
  for (const auto& o : j.value("left", json::array())) s.left.push_back(occurrence_from(o.get<std::string>(), logic));
  for (const auto& o : j.value("right", json::array())) s.right.push_back(occurrence_from(o.get<std::string>(), logic));
  if (j.contains("part")) {
    const auto& parts = j.at("part");
    if (!parts.is_array() || parts.size() != s.left.size() + s.right.size()) {
      throw FormatError("\"part\" must tag every occurrence");
    }
    std::size_t k = 0;
    for (auto* side : {&s.left, &s.right}) {
      for (auto& o : *side) {
        const int v = parts.at(k++).get<int>();
        if (v < 0 || v > 2) throw FormatError("part must be 1 or 2");
        o.part = static_cast<Part>(v);
      }
    }
  }
  return s;
}

json flat_json(const FlatSequent& s) {
  json j;
  j["left"] = json::array();
  j["right"] = json::array();
  for (const auto& lf : s.left) j["left"].push_back(print(lf));
  for (const auto& lf : s.right) j["right"].push_back(print(lf));
  return j;
}

json interpolant_json(const Interpolant& i) {
  json j;
  j["members"] = json::array();
  for (const auto& m : i.members) j["members"].push_back(flat_json(m));
  return j;
}

Interpolant interpolant_from(const json& j, Logic logic) {
  if (!j.is_object() || !j.contains("members")) throw FormatError("interpolant needs \"members\"");
  std::vector<FlatSequent> members;
  for (const auto& m : j.at("members")) {
    FlatSequent s;
    for (const auto& o : m.value("left", json::array())) s.left.push_back(occurrence_from(o.get<std::string>(), logic).lf());
    for (const auto& o : m.value("right", json::array())) s.right.push_back(occurrence_from(o.get<std::string>(), logic).lf());
    members.push_back(std::move(s));
  }
  return Interpolant::make(std::move(members));
}

json principal_json(const Principal& p) {
  json j;
  j["side"] = p.side == Side::Left ? "left" : "right";
  j["label"] = p.label;
  if (p.formula) j["formula"] = print(*p.formula);
  if (!p.other.empty()) j["other"] = p.other;
  if (p.path) {
    json kinds = json::array();
    for (auto k : p.path->kinds) kinds.push_back(kind_char(k));
    j["path"] = {{"nodes", p.path->nodes}, {"kinds", kinds}};
  }
  if (p.rel) j["rel"] = rel_json(*p.rel);
  return j;
}

Principal principal_from(const json& j, Logic logic) {
  Principal p;
  if (j.is_null()) return p;
  const std::string side = j.value("side", "right");
  if (side != "left" && side != "right") throw FormatError("principal side must be left or right");
  p.side = side == "left" ? Side::Left : Side::Right;
  p.label = j.value("label", "");
  if (j.contains("formula")) p.formula = formula_from(j.at("formula").get<std::string>(), logic);
  p.other = j.value("other", "");
  if (j.contains("path")) {
    Path path;
    path.nodes = j.at("path").at("nodes").get<std::vector<std::string>>();
    for (const auto& k : j.at("path").at("kinds")) path.kinds.push_back(kind_from(k.get<std::string>()));
    p.path = std::move(path);
  }
  if (j.contains("rel")) p.rel = rel_from(j.at("rel").get<std::string>());
  return p;
}

json proof_json(const Proof& p) {
  json j;
  j["rule"] = std::string(rule_name(p.rule));
  j["conclusion"] = sequent_json(p.conclusion);
  j["principal"] = principal_json(p.principal);
  j["premises"] = json::array();
  for (const auto& q : p.premises) j["premises"].push_back(proof_json(q));
  return j;
}

Proof proof_from(const json& j, Logic logic) {
  if (!j.is_object()) throw FormatError("proof node must be an object");
  Proof p;
  const auto rule = rule_from_name(j.at("rule").get<std::string>());
  if (!rule) throw FormatError("unknown rule \"" + j.at("rule").get<std::string>() + "\"");
  p.rule = *rule;
  p.conclusion = sequent_from(j.at("conclusion"), logic);
  p.principal = principal_from(j.value("principal", json()), logic);
  for (const auto& q : j.value("premises", json::array())) p.premises.push_back(proof_from(q, logic));
  return p;
}

json axioms_json(const std::vector<PathAxiom>& axioms) {
  json j = json::array();
  for (const auto& a : axioms) j.push_back(print(a));
  return j;
}

std::vector<PathAxiom> axioms_from(const json& j) {
  std::vector<PathAxiom> out;
  for (const auto& a : j) {
    try {
      out.push_back(parse_axiom(a.get<std::string>()));
    } catch (const AxiomParseError& e) {
      throw FormatError(std::string("bad axiom: ") + e.what());
    }
  }
  return out;
}

Logic logic_of(const json& j) {
  const auto logic = logic_from_name(j.at("logic").get<std::string>());
  if (!logic) throw FormatError("logic must be \"kt\" or \"bi\"");
  return *logic;
}

json report_json(const CheckReport& r) {
  json j;
  j["ok"] = r.ok;
  j["failures"] = json::array();
  for (const auto& f : r.failures) {
    j["failures"].push_back({{"rule", std::string(rule_name(f.rule))}, {"position", f.position}, {"reason", f.reason}});
  }
  j["reachability_queries"] = r.reachability_queries;
  return j;
}

CheckReport report_from(const json& j) {
  CheckReport r;
  r.ok = j.value("ok", false);
  for (const auto& f : j.value("failures", json::array())) {
    const auto rule = rule_from_name(f.value("rule", "Hyp"));
    r.failures.push_back({rule.value_or(Rule::Hyp), f.value("position", ""), f.value("reason", "")});
  }
  r.reachability_queries = j.value("reachability_queries", std::size_t{0});
  return r;
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

std::string to_json(const Certificate& c, int indent) {
  json j;
  j["logic"] = std::string(logic_name(c.logic));
  j["axioms"] = axioms_json(c.axioms);
  if (c.inverses) j["inverses"] = true;
  j["mode"] = std::string(mode_name(c.mode));
  j["assumptions"] = json::array();
  for (const auto& a : c.assumptions) j["assumptions"].push_back(sequent_json(a));
  j["proof"] = proof_json(c.proof);
  return j.dump(indent);
}

std::string to_json(const Bundle& b, int indent) {
  json j;
  j["logic"] = std::string(logic_name(b.logic));
  j["axioms"] = axioms_json(b.axioms);
  if (b.inverses) j["inverses"] = true;
  j["a"] = print(b.a);
  j["b"] = print(b.b);
  j["c"] = print(b.c);
  j["interpolant"] = interpolant_json(b.interpolant);
  j["proof_ac"] = proof_json(b.proof_ac);
  j["proof_cb"] = proof_json(b.proof_cb);
  if (b.verification) j["verification"] = report_json(*b.verification);
  return j.dump(indent);
}

std::string to_json(const Interpolant& i, int indent) { return interpolant_json(i).dump(indent); }

std::string to_json(const CheckReport& r, int indent) { return report_json(r).dump(indent); }

Certificate certificate_from_json(std::string_view text) {
  return guarded([&] {
    const json j = json::parse(text);
    Certificate c;
    c.logic = logic_of(j);
    c.axioms = axioms_from(j.value("axioms", json::array()));
    c.inverses = j.value("inverses", false);
    const auto mode = mode_from_name(j.value("mode", "core"));
    if (!mode) throw FormatError("mode must be core, extended or derived");
    c.mode = *mode;
    for (const auto& a : j.value("assumptions", json::array())) c.assumptions.push_back(sequent_from(a, c.logic));
    c.proof = proof_from(j.at("proof"), c.logic);
    return c;
  });
}

Bundle bundle_from_json(std::string_view text) {
  return guarded([&] {
    const json j = json::parse(text);
    Bundle b;
    b.logic = logic_of(j);
    b.axioms = axioms_from(j.value("axioms", json::array()));
    b.inverses = j.value("inverses", false);
    b.a = formula_from(j.at("a").get<std::string>(), b.logic);
    b.b = formula_from(j.at("b").get<std::string>(), b.logic);
    b.c = formula_from(j.at("c").get<std::string>(), b.logic);
    if (j.contains("interpolant")) b.interpolant = interpolant_from(j.at("interpolant"), b.logic);
    b.proof_ac = proof_from(j.at("proof_ac"), b.logic);
    b.proof_cb = proof_from(j.at("proof_cb"), b.logic);
    if (j.contains("verification")) b.verification = report_from(j.at("verification"));
    return b;
  });
}

Interpolant interpolant_from_json(std::string_view text, Logic logic) {
  return guarded([&] { return interpolant_from(json::parse(text), logic); });
}

bool is_bundle_json(std::string_view text) {
  const json j = json::parse(text, nullptr, false);
  return j.is_object() && j.contains("proof_ac");
}

}  // namespace nestcraig
