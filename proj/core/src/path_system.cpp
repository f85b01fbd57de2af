#include "nestcraig/path_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <tuple>

namespace nestcraig {

AxiomParseError::AxiomParseError(std::size_t line, const std::string& message)
    : std::runtime_error("axiom line " + std::to_string(line) + ": " + message), line_(line) {}

PathAxiom invert(const PathAxiom& f) {
  PathAxiom out;
  out.prefix.reserve(f.prefix.size());
  for (auto it = f.prefix.rbegin(); it != f.prefix.rend(); ++it) out.prefix.push_back(flip(*it));
  out.target = flip(f.target);
  return out;
}

PathAxiom compose(const PathAxiom& f, const PathAxiom& g, std::size_t i) {
  if (i < 1 || i > g.prefix.size()) throw NotComposable("compose: position out of range");
  if (g.prefix[i - 1] != f.target) throw NotComposable("compose: target does not match prefix position");
  PathAxiom out;
  out.prefix.assign(g.prefix.begin(), g.prefix.begin() + static_cast<std::ptrdiff_t>(i - 1));
  out.prefix.insert(out.prefix.end(), f.prefix.begin(), f.prefix.end());
  out.prefix.insert(out.prefix.end(), g.prefix.begin() + static_cast<std::ptrdiff_t>(i), g.prefix.end());
  out.target = g.target;
  return out;
}

namespace {

char letter(DiamondKind k) { return k == DiamondKind::White ? 'd' : 'b'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

PathAxiom parse_line(std::string_view line, std::size_t lineno) {
  const auto arrow = line.find("->");
  if (arrow == std::string_view::npos) throw AxiomParseError(lineno, "missing '->'");
  const std::string_view lhs = trim(line.substr(0, arrow));
  const std::string_view rhs = trim(line.substr(arrow + 2));
  if (lhs.empty()) throw AxiomParseError(lineno, "prefix must contain at least one diamond");
  PathAxiom out;
  for (char c : lhs) {
    if (c == 'd') {
      out.prefix.push_back(DiamondKind::White);
    } else if (c == 'b') {
      out.prefix.push_back(DiamondKind::Black);
    } else {
      throw AxiomParseError(lineno, std::string("unexpected character '") + c + "' in prefix");
    }
  }
  if (rhs == "d") {
    out.target = DiamondKind::White;
  } else if (rhs == "b") {
    out.target = DiamondKind::Black;
  } else {
    throw AxiomParseError(lineno, "target must be 'd' or 'b'");
  }
  return out;
}

}  // namespace

std::string print(const PathAxiom& f) {
  std::string out;
  for (auto k : f.prefix) out += letter(k);
  out += " -> ";
  out += letter(f.target);
  return out;
}

PathAxiom parse_axiom(std::string_view text) { return parse_line(trim(text), 1); }

std::vector<PathAxiom> parse_axiom_file(std::string_view text) {
  std::vector<PathAxiom> out;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    out.push_back(parse_line(line, lineno));
  }
  return out;
}

PathAxiomSystem::PathAxiomSystem(std::vector<PathAxiom> axioms, bool include_inverses)
    : axioms_(std::move(axioms)), include_inverses_(include_inverses) {
  for (const auto& f : axioms_) {
    if (f.prefix.empty()) throw std::invalid_argument("path axiom prefix must be nonempty");
  }
  effective_ = axioms_;
  if (include_inverses_) {
    for (const auto& f : axioms_) effective_.push_back(invert(f));
  }
  std::sort(effective_.begin(), effective_.end());
  effective_.erase(std::unique(effective_.begin(), effective_.end()), effective_.end());

  for (const auto& f : effective_) {
    const std::size_t lhs = nonterminal(f.target);
    const std::size_t n = f.prefix.size();
    if (n == 1) {
      if (nonterminal(f.prefix[0]) != lhs) unit_.push_back({lhs, nonterminal(f.prefix[0])});
      continue;
    }
    std::size_t head = lhs;
    for (std::size_t i = 0; i + 2 < n; ++i) {
      const std::size_t fresh = nonterminals_++;
      binary_.push_back({head, nonterminal(f.prefix[i]), fresh});
      head = fresh;
    }
    binary_.push_back({head, nonterminal(f.prefix[n - 2]), nonterminal(f.prefix[n - 1])});
  }

  closure_.assign(nonterminals_, {});
  for (std::size_t b = 0; b < nonterminals_; ++b) {
    std::vector<bool> seen(nonterminals_, false);
    std::vector<std::size_t> stack{b};
    seen[b] = true;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      closure_[b].push_back(cur);
      for (const auto& u : unit_) {
        if (u.rhs == cur && !seen[u.lhs]) {
          seen[u.lhs] = true;
          stack.push_back(u.lhs);
        }
      }
    }
    std::sort(closure_[b].begin(), closure_[b].end());
  }
}

bool PathAxiomSystem::completion_member(const std::vector<DiamondKind>& w, DiamondKind t) const {
  const std::size_t n = w.size();
  if (n == 0) return false;
  // cell(i, len) holds the nonterminals deriving w[i, i+len).
  std::vector<std::vector<bool>> table(n * (n + 1), std::vector<bool>(nonterminals_, false));
  auto cell = [&](std::size_t i, std::size_t len) -> std::vector<bool>& { return table[i * (n + 1) + len]; };
  auto close = [&](std::vector<bool>& set) {
    for (std::size_t b = 0; b < nonterminals_; ++b) {
      if (!set[b]) continue;
      for (std::size_t a : closure_[b]) set[a] = true;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    auto& c = cell(i, 1);
    c[nonterminal(w[i])] = true;
    close(c);
  }
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      auto& c = cell(i, len);
      for (std::size_t k = 1; k < len; ++k) {
        const auto& l = cell(i, k);
        const auto& r = cell(i + k, len - k);
        for (const auto& rule : binary_) {
          if (l[rule.first] && r[rule.second]) c[rule.lhs] = true;
        }
      }
      close(c);
    }
  }
  return cell(0, n)[nonterminal(t)];
}

PropagationGraph build_graph(const LabelledSequent& s) {
  PropagationGraph g;
  const auto labels = s.labels();
  g.nodes.assign(labels.begin(), labels.end());
  for (const auto& r : s.rel) {
    g.edges.push_back({r.from, r.to, DiamondKind::White});
    g.edges.push_back({r.to, r.from, DiamondKind::Black});
  }
  return g;
}

Reachability::Reachability(const PropagationGraph& g, const PathAxiomSystem& sys)
    : nodes_(g.nodes), nt_(sys.nonterminal_count()) {
  for (const auto& e : g.edges) {
    for (const Label* l : {&e.from, &e.to}) {
      if (std::find(nodes_.begin(), nodes_.end(), *l) == nodes_.end()) nodes_.push_back(*l);
    }
  }
  n_ = nodes_.size();
  for (std::size_t i = 0; i < n_; ++i) index_[nodes_[i]] = i;
  facts_.assign(nt_ * n_ * n_, Origin{});

  // Rules indexed by the right-hand nonterminal they are triggered from.
  std::vector<std::vector<std::size_t>> unit_by_rhs(nt_);
  for (const auto& u : sys.unit_rules()) unit_by_rhs[u.rhs].push_back(u.lhs);
  std::vector<std::vector<const PathAxiomSystem::Binary*>> by_first(nt_), by_second(nt_);
  for (const auto& b : sys.binary_rules()) {
    by_first[b.first].push_back(&b);
    by_second[b.second].push_back(&b);
  }

  std::deque<std::tuple<std::size_t, std::size_t, std::size_t>> work;
  auto add = [&](std::size_t nt, std::size_t u, std::size_t v, Origin o) {
    Origin& slot = facts_[key(nt, u, v)];
    if (slot.kind != Origin::None) return;
    slot = o;
    ++count_;
    work.emplace_back(nt, u, v);
  };
  auto has = [&](std::size_t nt, std::size_t u, std::size_t v) {
    return facts_[key(nt, u, v)].kind != Origin::None;
  };

  for (const auto& e : g.edges) {
    add(PathAxiomSystem::nonterminal(e.kind), index_.at(e.from), index_.at(e.to), Origin{Origin::Edge});
  }
  while (!work.empty()) {
    const auto [b, u, v] = work.front();
    work.pop_front();
    for (std::size_t a : unit_by_rhs[b]) add(a, u, v, Origin{Origin::Unit, b});
    for (const auto* rule : by_first[b]) {
      for (std::size_t w = 0; w < n_; ++w) {
        if (has(rule->second, v, w)) add(rule->lhs, u, w, Origin{Origin::Binary, b, rule->second, v});
      }
    }
    for (const auto* rule : by_second[b]) {
      for (std::size_t w = 0; w < n_; ++w) {
        if (has(rule->first, w, u)) add(rule->lhs, w, v, Origin{Origin::Binary, rule->first, b, u});
      }
    }
  }
}

bool Reachability::reachable(const Label& x, const Label& y, DiamondKind k) const {
  auto ix = index_.find(x);
  auto iy = index_.find(y);
  if (ix == index_.end() || iy == index_.end()) return false;
  return facts_[key(PathAxiomSystem::nonterminal(k), ix->second, iy->second)].kind != Origin::None;
}

void Reachability::expand(std::size_t nt, std::size_t u, std::size_t v, Path& out) const {
  const Origin& o = facts_[key(nt, u, v)];
  switch (o.kind) {
    case Origin::Edge:
      out.kinds.push_back(nt == PathAxiomSystem::kWhite ? DiamondKind::White : DiamondKind::Black);
      out.nodes.push_back(nodes_[v]);
      return;
    case Origin::Unit:
      expand(o.a, u, v, out);
      return;
    case Origin::Binary:
      expand(o.a, u, o.mid, out);
      expand(o.b, o.mid, v, out);
      return;
    case Origin::None:
      return;
  }
}

std::optional<Path> Reachability::witness(const Label& x, const Label& y, DiamondKind k) const {
  if (!reachable(x, y, k)) return std::nullopt;
  Path p;
  p.nodes.push_back(x);
  expand(PathAxiomSystem::nonterminal(k), index_.at(x), index_.at(y), p);
  return p;
}

bool reachable(const Label& x, const Label& y, DiamondKind k, const PropagationGraph& g,
               const PathAxiomSystem& sys) {
  return Reachability(g, sys).reachable(x, y, k);
}

bool oracle_reachable(const Label& x, const Label& y, DiamondKind k, const PropagationGraph& g,
                      const PathAxiomSystem& sys, std::size_t max_len) {
  // Distinct (endpoint, string) pairs of all paths from x, one layer per length.
  using State = std::pair<Label, std::vector<DiamondKind>>;
  std::set<State> layer{{x, {}}};
  std::set<std::vector<DiamondKind>> tested;
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::set<State> next;
    for (const auto& [at, word] : layer) {
      for (const auto& e : g.edges) {
        if (e.from != at) continue;
        auto w = word;
        w.push_back(e.kind);
        if (e.to == y && tested.insert(w).second && sys.completion_member(w, k)) return true;
        next.emplace(e.to, std::move(w));
      }
    }
    layer = std::move(next);
  }
  return false;
}

}  // namespace nestcraig
