#include "nestcraig/formula.hpp"

#include <cctype>
#include <sstream>

namespace nestcraig {

namespace {

std::string describe_error(std::size_t offset, const std::vector<std::string>& expected,
                           const std::string& found) {
  std::ostringstream os;
  os << "parse error at offset " << offset << ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
    os << expected[i];
  }
  os << ", found " << found;
  return os.str();
}

enum class Tok { Ident, Top, Bot, LParen, RParen, Tilde, Box, Dia, BBox, BDia, And, Or, Imp, Excl, End, Bad };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

class Parser {
 public:
  Parser(std::string_view text, Logic logic) : text_(text), logic_(logic) { advance(); }

  Formula parse_all() {
    Formula f = expr();
    if (cur_.kind != Tok::End) fail(after_operand(true));
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  void advance() {
    skip_ws();
    const std::size_t at = pos_;
    auto take = [&](Tok k, std::size_t n) {
      cur_ = Token{k, at, std::string(text_.substr(at, n))};
      pos_ += n;
    };
    if (pos_ >= text_.size()) {
      cur_ = Token{Tok::End, at, {}};
      return;
    }
    const char c = text_[pos_];
    if (c >= 'a' && c <= 'z') {
      std::size_t end = pos_;
      while (end < text_.size()) {
        const char d = text_[end];
        if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_') {
          ++end;
        } else {
          break;
        }
      }
      std::string word(text_.substr(pos_, end - pos_));
      Tok k = Tok::Ident;
      if (word == "top") k = Tok::Top;
      if (word == "bot") k = Tok::Bot;
      take(k, end - pos_);
      return;
    }
    if (starts_with("[]")) return take(Tok::Box, 2);
    if (starts_with("<>")) return take(Tok::Dia, 2);
    if (starts_with("[b]")) return take(Tok::BBox, 3);
    if (starts_with("<b>")) return take(Tok::BDia, 3);
    if (starts_with("->")) return take(Tok::Imp, 2);
    if (starts_with("-<")) return take(Tok::Excl, 2);
    switch (c) {
      case '(': return take(Tok::LParen, 1);
      case ')': return take(Tok::RParen, 1);
      case '~': return take(Tok::Tilde, 1);
      case '&': return take(Tok::And, 1);
      case '|': return take(Tok::Or, 1);
      default: return take(Tok::Bad, 1);
    }
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = cur_.kind == Tok::End ? "end of input" : "'" + cur_.text + "'";
    throw ParseError(cur_.offset, std::move(expected), found);
  }

  std::vector<std::string> operand_start() const {
    if (logic_ == Logic::Tense) {
      return {"atom", "top", "bot", "'('", "'~'", "'[]'", "'<>'", "'[b]'", "'<b>'"};
    }
    return {"atom", "top", "bot", "'('"};
  }

  std::vector<std::string> after_operand(bool at_top) const {
    std::vector<std::string> out{"'&'", "'|'", "'->'"};
    if (logic_ == Logic::BiInt) out.push_back("'-<'");
    out.push_back(at_top ? "end of input" : "')'");
    return out;
  }

  bool is_binary_tok(Tok k) const {
    return k == Tok::Imp || (k == Tok::Excl && logic_ == Logic::BiInt);
  }

  Formula expr() {
    Formula lhs = disjunction();
    if (is_binary_tok(cur_.kind)) {
      const Tok op = cur_.kind;
      advance();
      Formula rhs = expr();
      return op == Tok::Imp ? Formula::imp(lhs, rhs) : Formula::excl(lhs, rhs);
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    if (cur_.kind == Tok::Or) {
      advance();
      return Formula::disj(lhs, disjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    if (cur_.kind == Tok::And) {
      advance();
      return Formula::conj(lhs, conjunction());
    }
    return lhs;
  }

  Formula unary() {
    if (logic_ == Logic::Tense) {
      switch (cur_.kind) {
        case Tok::Tilde: {
          advance();
          if (cur_.kind == Tok::Ident) {
            std::string name = cur_.text;
            advance();
            return Formula::neg_atom(std::move(name));
          }
          return Formula::neg(unary());
        }
        case Tok::Box: advance(); return Formula::box(unary());
        case Tok::Dia: advance(); return Formula::dia(unary());
        case Tok::BBox: advance(); return Formula::bbox(unary());
        case Tok::BDia: advance(); return Formula::bdia(unary());
        default: break;
      }
    }
    return primary();
  }

  Formula primary() {
    switch (cur_.kind) {
      case Tok::Ident: {
        std::string name = cur_.text;
        advance();
        return Formula::atom(std::move(name));
      }
      case Tok::Top: advance(); return Formula::top();
      case Tok::Bot: advance(); return Formula::bot();
      case Tok::LParen: {
        advance();
        Formula f = expr();
        if (cur_.kind != Tok::RParen) fail(after_operand(false));
        advance();
        return f;
      }
      default:
        fail(operand_start());
    }
  }

  std::string_view text_;
  Logic logic_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, 0, {}};
};

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error(describe_error(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)) {}

Formula parse(std::string_view text, Logic logic) { return Parser(text, logic).parse_all(); }

}  // namespace nestcraig
