#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "nestcraig/certify.hpp"
#include "nestcraig/formula.hpp"
#include "nestcraig/interpolate.hpp"
#include "nestcraig/io.hpp"
#include "nestcraig/path_system.hpp"
#include "nestcraig/prover.hpp"

namespace nestcraig::cli {

namespace {

struct Options {
  std::string logic = "kt";
  std::string axioms_path;
  std::size_t bound = 12;
  bool inverses = false;
  bool exclr_part1 = false;
  std::string out_path;
  std::string format = "json";
  std::string input;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Session {
 public:
  Session(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {
    logic_ = *logic_from_name(opt.logic);
    if (!opt.axioms_path.empty() && logic_ != Logic::Tense) throw UsageError("--axioms is only valid with --logic kt");
  }

  int prove_cmd() {
    const Formula f = read_formula(opt_.input);
    SearchConfig cfg = config(axioms());
    const SearchResult r = prove(logic_, right_goal(f), cfg);
    if (!r.proved()) {
      err_ << "not proved: " << status_name(r.status) << " (bound " << opt_.bound << ", " << r.steps << " steps)\n";
      return kNotProved;
    }
    Certificate c{logic_, axioms(), opt_.inverses, CheckMode::Core, {}, *r.proof};
    if (json()) {
      emit(to_json(c) + "\n");
    } else {
      emit("proved " + print(f) + "\n" + render(*r.proof));
    }
    return kOk;
  }

  int interpolate_cmd() {
    const Formula f = parse(opt_.input, logic_);
    if (f.kind() != Connective::Imp) throw UsageError("expected an implication A -> B");
    const Formula a = logic_ == Logic::Tense ? normalize(f.lhs()) : f.lhs();
    const Formula b = logic_ == Logic::Tense ? normalize(f.rhs()) : f.rhs();
    const std::vector<PathAxiom> ax = axioms();
    const PathAxiomSystem sys(ax, opt_.inverses);
    SearchConfig cfg = config(ax);
    InterpolateOptions io;
    io.exclr_principal_part1 = opt_.exclr_part1;
    CraigResult r;
    try {
      r = logic_ == Logic::Tense ? craig_tense(a, b, cfg) : craig_bi(a, b, cfg, io);
    } catch (const InterpolantReproofFailed& e) {
      err_ << "internal error: " << e.what() << "\n";
      return kInternal;
    }
    if (!r.proved()) {
      err_ << "not proved: " << status_name(r.status) << " (bound " << opt_.bound << ")\n";
      return kNotProved;
    }
    CheckReport v = verify_interpolant(a, b, *r.c, *r.proof_ac, *r.proof_cb, logic_, sys);
    if (!v.ok) {
      err_ << "internal error: interpolant failed verification\n" << print(v);
      return kInternal;
    }
    Bundle bundle{logic_, ax, opt_.inverses, a, b, *r.c, r.interpolant, *r.proof_ac, *r.proof_cb, v};
    if (json()) {
      emit(to_json(bundle) + "\n");
    } else {
      std::string text = "C = " + pretty(*r.c) + "\ninterpolant:\n";
      for (const auto& m : r.interpolant.members) text += "  " + print(m) + "\n";
      text += "verification: " + print(v);
      emit(text);
    }
    return kOk;
  }

  int check_cmd() {
    const std::string text = slurp(opt_.input);
    if (is_bundle_json(text)) {
      const Bundle b = bundle_from_json(text);
      const PathAxiomSystem sys(opt_.axioms_path.empty() ? b.axioms : axioms(), opt_.inverses || b.inverses);
      const CheckReport r = verify_interpolant(b.a, b.b, b.c, b.proof_ac, b.proof_cb, b.logic, sys);
      return report(r);
    }
    const Certificate c = certificate_from_json(text);
    const PathAxiomSystem sys(opt_.axioms_path.empty() ? c.axioms : axioms(), opt_.inverses || c.inverses);
    return report(check(c.proof, c.logic, sys, c.mode, c.assumptions));
  }

  int orth_cmd() {
    const std::string text = !opt_.input.empty() && opt_.input.front() == '{' ? opt_.input : slurp(opt_.input);
    const Interpolant o = orthogonal(logic_, interpolant_from_json(text, logic_));
    if (json()) {
      emit(to_json(o) + "\n");
    } else {
      std::string s;
      for (const auto& m : o.members) s += print(m) + "\n";
      emit(s);
    }
    return kOk;
  }

 private:
  bool json() const { return opt_.format == "json"; }

  Formula read_formula(const std::string& text) const {
    const Formula f = parse(text, logic_);
    return logic_ == Logic::Tense ? normalize(f) : f;
  }

  std::vector<PathAxiom> axioms() const {
    if (opt_.axioms_path.empty()) return {};
    return parse_axiom_file(slurp(opt_.axioms_path));
  }

  SearchConfig config(const std::vector<PathAxiom>& ax) const {
    SearchConfig cfg;
    cfg.depth_bound = opt_.bound;
    cfg.axioms = PathAxiomSystem(ax, opt_.inverses);
    return cfg;
  }

  int report(const CheckReport& r) {
    if (json()) {
      emit(to_json(r) + "\n");
    } else {
      emit(print(r));
    }
    return r.ok ? kOk : kNotProved;
  }

  void emit(const std::string& text) {
    if (opt_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(opt_.out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + opt_.out_path);
    f << text;
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  Logic logic_ = Logic::Tense;
};

void common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--logic", opt.logic, "kt or bi")->check(CLI::IsMember({"kt", "bi"}));
  cmd->add_option("--axioms", opt.axioms_path, "path axiom file (kt only)");
  cmd->add_option("--bound", opt.bound, "fresh-label bound per branch")->check(CLI::PositiveNumber);
  cmd->add_flag("--inverses", opt.inverses, "close the axioms under inverses");
  cmd->add_flag("--exclr-principal-part1,!--no-exclr-principal-part1", opt.exclr_part1,
                "ExclR keeps its principal in the first part of the second premise");
  cmd->add_option("--out", opt.out_path, "output file");
  cmd->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"nested-sequent prover and interpolant synthesizer", "nestcraig"};
  app.require_subcommand(1);
  Options opt;

  auto* prove = app.add_subcommand("prove", "search for a proof of a formula");
  prove->add_option("formula", opt.input, "formula text")->required();
  common_flags(prove, opt);
  auto* interp = app.add_subcommand("interpolate", "compute a verified interpolant for A -> B");
  interp->add_option("implication", opt.input, "A -> B")->required();
  common_flags(interp, opt);
  auto* chk = app.add_subcommand("check", "check a certificate or bundle");
  chk->add_option("file", opt.input, "certificate or bundle path")->required();
  common_flags(chk, opt);
  auto* orth = app.add_subcommand("orth", "orthogonal of an interpolant");
  orth->add_option("interpolant", opt.input, "interpolant JSON or path")->required();
  common_flags(orth, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Session s(opt, out, err);
    if (prove->parsed()) return s.prove_cmd();
    if (interp->parsed()) return s.interpolate_cmd();
    if (chk->parsed()) return s.check_cmd();
    return s.orth_cmd();
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.offset() << ": " << e.what() << "\n";
  } catch (const AxiomParseError& e) {
    err << "axiom file line " << e.line() << ": " << e.what() << "\n";
  } catch (const FormatError& e) {
    err << "malformed input: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace nestcraig::cli
