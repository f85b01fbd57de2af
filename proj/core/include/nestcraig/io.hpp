#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nestcraig/certify.hpp"
#include "nestcraig/interpolate.hpp"
#include "nestcraig/path_system.hpp"
#include "nestcraig/proof.hpp"

namespace nestcraig {

/// Malformed certificate, bundle or interpolant document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view logic_name(Logic logic);  // "kt" | "bi"
std::optional<Logic> logic_from_name(std::string_view name);

struct Certificate {
  Logic logic = Logic::Tense;
  std::vector<PathAxiom> axioms;
  bool inverses = false;
  CheckMode mode = CheckMode::Core;
  std::vector<LabelledSequent> assumptions;
  Proof proof;
};

struct Bundle {
  Logic logic = Logic::Tense;
  std::vector<PathAxiom> axioms;
  bool inverses = false;
  Formula a = Formula::top();
  Formula b = Formula::top();
  Formula c = Formula::top();
  Interpolant interpolant;
  Proof proof_ac;
  Proof proof_cb;
  std::optional<CheckReport> verification;
};

std::string to_json(const Certificate& c, int indent = 2);
std::string to_json(const Bundle& b, int indent = 2);
std::string to_json(const Interpolant& i, int indent = 2);
std::string to_json(const CheckReport& r, int indent = 2);

Certificate certificate_from_json(std::string_view text);
Bundle bundle_from_json(std::string_view text);
Interpolant interpolant_from_json(std::string_view text, Logic logic);

/// True when the document has a "proof_ac" field.
bool is_bundle_json(std::string_view text);

}  // namespace nestcraig
