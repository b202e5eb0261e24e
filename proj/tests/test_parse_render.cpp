#include <doctest.h>

#include <random>

#include "wick/errors.hpp"
#include "wick/models.hpp"
#include "wick/parse.hpp"
#include "wick/render.hpp"
#include "wick/wick.hpp"

using namespace wick;

TEST_CASE("parsing the basic atom shapes") {
  const OperatorExpr e1 = parse("c+(1) c(1)");
  REQUIRE(e1.atoms.size() == 2);
  CHECK(e1.atoms[0].name == "c");
  CHECK(e1.atoms[0].dagger);
  CHECK(e1.atoms[0].mode == 1);
  CHECK(!e1.atoms[1].dagger);

  const OperatorExpr e2 = parse("psi(2)@1.0 psi+(2)@0.0");
  REQUIRE(e2.atoms.size() == 2);
  CHECK(e2.atoms[0].time == 1.0);
  CHECK(e2.atoms[1].time == 0.0);
  CHECK(e2.atoms[1].dagger);

  const OperatorExpr e3 = parse("a(3,up) a(3,down)");
  REQUIRE(e3.atoms.size() == 2);
  CHECK(e3.atoms[0].spin == Spin::Up);
  CHECK(e3.atoms[1].spin == Spin::Down);

  const OperatorExpr e4 = parse("alpha+(2)@-0.5 A(1)@1e-3");
  CHECK(e4.atoms[0].time == -0.5);
  CHECK(e4.atoms[1].time == 1e-3);
}

TEST_CASE("parse errors carry a column") {
  CHECK_THROWS_AS(parse("foo(1)"), ParseError);
  CHECK_THROWS_AS(parse("c(0)"), ParseError);
  CHECK_THROWS_AS(parse("c+("), ParseError);
  CHECK_THROWS_AS(parse("c(1)@abc"), ParseError);
  CHECK_THROWS_AS(parse("c(1,up)"), ParseError);
  CHECK_THROWS_AS(parse("a(1,sideways)"), ParseError);
  CHECK_THROWS_AS(parse("c(1"), ParseError);
  try {
    parse("c(1) d(2)");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.column == 6);
  }
}

TEST_CASE("print and parse round-trip") {
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> times(-10.0, 10.0);
  const std::vector<std::string> names{"A", "c", "psi", "alpha", "a"};
  for (int round = 0; round < 100; ++round) {
    OperatorExpr expr;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) {
      Atom atom;
      atom.name = names[rng() % names.size()];
      atom.dagger = rng() % 2;
      atom.mode = 1 + static_cast<int>(rng() % 9);
      if (atom.name == "a" && rng() % 2) {
        atom.spin = rng() % 2 ? Spin::Up : Spin::Down;
      }
      if (rng() % 2) atom.time = times(rng);
      expr.atoms.push_back(atom);
    }
    CHECK(parse(print(expr)) == expr);
  }
}

TEST_CASE("atoms map onto model symbols with 0-based modes") {
  const FermiSeaModel model(4, 2);
  const Product p = to_symbols(parse("c+(1) psi(4) alpha(2)"), model);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == field_create(0));
  CHECK(p[1] == field_annihilate(3));
  CHECK(p[2] == quasi_annihilate(1));
  CHECK_THROWS_AS(to_symbols(parse("c(5)"), model), UnknownMode);

  const BcsModel bcs({{Complex{0.6, 0.0}, Complex{0.8, 0.0}, 1.0},
                      {Complex{0.8, 0.0}, Complex{0.6, 0.0}, 2.0}});
  const Product q = to_symbols(parse("a(1,up) a+(2,down)"), bcs);
  CHECK(q[0] == field_annihilate(0));
  CHECK(q[1] == field_create(3));
  CHECK_THROWS_AS(to_symbols(parse("a(3,up)"), bcs), UnknownPair);
}

TEST_CASE("text rendering of the three-operator expansion") {
  const AbstractModel model(Statistics::Fermi, 3);
  const OperatorExpr expr = parse("A(1) A(2) A(3)");
  const Expansion e = wick_expand(to_symbols(expr, model), model);
  const std::string text = render_text(e, expr.atoms, model, false);
  CHECK(text ==
        "+ N[A(1) A(2) A(3)]\n"
        "+ <1 2> N[A(3)]\n"
        "- <1 3> N[A(2)]\n"
        "+ <2 3> N[A(1)]\n");
}

TEST_CASE("structured output is deterministic and agrees with the text form") {
  const AbstractModel model(Statistics::Fermi, 4);
  const OperatorExpr expr = parse("A(1) A(2) A(3) A(4)");
  const Expansion e = wick_expand(to_symbols(expr, model), model);
  const std::string once = render_json(e, expr.atoms, model, false);
  const std::string twice = render_json(wick_expand(to_symbols(expr, model), model), expr.atoms,
                                        model, false);
  CHECK(once == twice);

  const std::string text = render_text(e, expr.atoms, model, false);
  std::size_t lines = 0;
  for (char ch : text) lines += ch == '\n';
  CHECK(lines == e.terms.size());
  CHECK(once.find("\"schema\": 1") != std::string::npos);
  CHECK(once.find("\"terms\"") != std::string::npos);
}

TEST_CASE("evaluated coefficients render with 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(format_complex(Complex{0.0, -1.0}) == "(0,-1)");
}

TEST_CASE("bcs factors render back in spin-momentum form") {
  const BcsModel model({{Complex{0.6, 0.0}, Complex{0.8, 0.0}, 1.0}});
  const Atom atom = atom_from_symbol(field_create(1), model);
  CHECK(atom.name == "a");
  CHECK(atom.mode == 1);
  CHECK(atom.spin == Spin::Down);
  CHECK(atom.dagger);
  CHECK(print(atom) == "a+(1,down)");
}
