#include <doctest.h>

#include "generators.hpp"
#include "nestcraig/formula.hpp"

using namespace nestcraig;
using nestcraig::testing::Gen;
using nestcraig::testing::TenseShape;

namespace {

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }

bool surface_free(const Formula& f) {
  if (f.kind() == Connective::Neg || f.kind() == Connective::Imp || f.kind() == Connective::Excl) return false;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (!surface_free(i == 0 ? f.lhs() : f.rhs())) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("formula") {
  TEST_CASE("negation of box and atoms") {
    CHECK(negate_nnf(Formula::box(p())) == Formula::dia(Formula::neg_atom("p")));
    CHECK(negate_nnf(p()) == Formula::neg_atom("p"));
    const Formula f = Formula::disj(p(), Formula::bbox(q()));
    CHECK(negate_nnf(negate_nnf(f)) == f);
    CHECK(negate_nnf(Formula::top()) == Formula::bot());
    CHECK(negate_nnf(Formula::bdia(Formula::conj(p(), q()))) ==
          Formula::bbox(Formula::disj(Formula::neg_atom("p"), Formula::neg_atom("q"))));
  }

  TEST_CASE("negation rejects surface connectives") {
    CHECK_THROWS_AS(negate_nnf(Formula::neg(p())), std::invalid_argument);
  }

  TEST_CASE("normalize pushes negation and implication") {
    CHECK(normalize(Formula::imp(p(), q())) == Formula::disj(Formula::neg_atom("p"), q()));
    CHECK(normalize(Formula::neg(Formula::box(p()))) == Formula::dia(Formula::neg_atom("p")));
    CHECK(normalize(Formula::neg(Formula::neg(p()))) == p());
  }

  TEST_CASE("variables") {
    CHECK(vars(Formula::disj(p(), Formula::neg_atom("p"))) == std::set<std::string>{"p"});
    CHECK(vars(Formula::box(Formula::dia(q()))) == std::set<std::string>{"q"});
    CHECK(vars(Formula::excl(p(), Formula::imp(q(), Formula::bot()))) == std::set<std::string>{"p", "q"});
    CHECK(vars(Formula::top()).empty());
  }

  TEST_CASE("parsing the worked implication") {
    const Formula f = parse("[]<>q -> [](<>~p | <><>p)", Logic::Tense);
    const Formula expected = Formula::imp(
        Formula::box(Formula::dia(q())),
        Formula::box(Formula::disj(Formula::dia(Formula::neg_atom("p")), Formula::dia(Formula::dia(p())))));
    CHECK(f == expected);
  }

  TEST_CASE("parsing co-implication") {
    CHECK(parse("p -< q", Logic::BiInt) == Formula::excl(p(), q()));
    CHECK(parse("top -> bot", Logic::BiInt) == Formula::imp(Formula::top(), Formula::bot()));
  }

  TEST_CASE("precedence and associativity") {
    CHECK(parse("p & q | r", Logic::BiInt) == Formula::disj(Formula::conj(p(), q()), Formula::atom("r")));
    CHECK(parse("p -> q -> r", Logic::BiInt) == Formula::imp(p(), Formula::imp(q(), Formula::atom("r"))));
    CHECK(parse("~p & q", Logic::Tense) == Formula::conj(Formula::neg_atom("p"), q()));
    CHECK(parse("~[]p", Logic::Tense) == Formula::neg(Formula::box(p())));
    CHECK(parse("[b]<b>p", Logic::Tense) == Formula::bbox(Formula::bdia(p())));
  }

  TEST_CASE("parse errors carry the offset") {
    try {
      parse("p &", Logic::Tense);
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 3);
      CHECK(!e.expected().empty());
    }
    CHECK_THROWS_AS(parse("p -< q", Logic::Tense), ParseError);
    CHECK_THROWS_AS(parse("[]p", Logic::BiInt), ParseError);
    CHECK_THROWS_AS(parse("(p", Logic::BiInt), ParseError);
    CHECK_THROWS_AS(parse("P", Logic::BiInt), ParseError);
  }

  TEST_CASE("atom names") {
    CHECK(is_valid_atom_name("p"));
    CHECK(is_valid_atom_name("x_1"));
    CHECK(!is_valid_atom_name("1x"));
    CHECK(!is_valid_atom_name(""));
  }

  TEST_CASE("printing is canonical") {
    CHECK(print(Formula::excl(p(), q())) == "(p -< q)");
    CHECK(print(Formula::box(Formula::dia(Formula::dia(Formula::top())))) == "[]<><>top");
    CHECK(pretty(Formula::disj(Formula::conj(p(), q()), p())) == "p & q | p");
  }

  TEST_CASE("past modalities") {
    CHECK(has_past_modality(Formula::dia(Formula::bbox(p()))));
    CHECK(!has_past_modality(Formula::box(Formula::dia(p()))));
  }

  TEST_CASE("property: negation is an involution preserving size and variables") {
    Gen g(11);
    for (int i = 0; i < 500; ++i) {
      const Formula f = g.tense(TenseShape{6, 4, 3, true, true});
      const Formula n = negate_nnf(f);
      REQUIRE(is_tense_nnf(n));
      CHECK(negate_nnf(n) == f);
      CHECK(n.size() == f.size());
      CHECK(vars(n) == vars(f));
    }
  }

  TEST_CASE("property: normalize yields NNF") {
    Gen g(12);
    for (int i = 0; i < 500; ++i) {
      const Formula f = normalize(g.surface(6));
      CHECK(surface_free(f));
      CHECK(is_tense_nnf(f));
    }
  }

  TEST_CASE("property: printing round-trips through the parser") {
    Gen g(13);
    for (int i = 0; i < 500; ++i) {
      const Formula s = g.surface(6);
      CHECK(parse(print(s), Logic::Tense) == s);
      CHECK(parse(pretty(s), Logic::Tense) == s);
      const Formula b = g.bi(6);
      CHECK(parse(print(b), Logic::BiInt) == b);
      CHECK(parse(pretty(b), Logic::BiInt) == b);
    }
  }
}
