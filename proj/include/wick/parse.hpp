#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wick/model.hpp"
#include "wick/operators.hpp"

namespace wick {

enum class Spin { Up, Down };

// One token of the operator DSL:  name ['+'] '(' mode [',' spin] ')' ['@' time]
// e.g.  c+(1)   psi(2)@1.5   alpha+(3)   a(2,down)@-0.25   A(1)
// Modes are 1-based in the DSL.
struct Atom {
  std::string name;  // one of: A, c, psi, alpha, a
  bool dagger = false;
  int mode = 1;
  std::optional<Spin> spin;  // only for name "a"
  std::optional<double> time;
  int column = 0;  // 1-based source position, for error reporting

  friend bool operator==(const Atom& l, const Atom& r) {
    return l.name == r.name && l.dagger == r.dagger && l.mode == r.mode && l.spin == r.spin &&
           l.time == r.time;
  }
};

struct OperatorExpr {
  std::vector<Atom> atoms;

  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;
};

// Throws ParseError with a 1-based column on syntax errors, unknown names or
// malformed numbers.
OperatorExpr parse(const std::string& input);

std::string print(const Atom& atom);
std::string print(const OperatorExpr& expr);

// Maps atoms onto model symbols. A/c/psi address field modes directly
// (1-based -> 0-based); a(k,spin) flattens to field mode 2(k-1) + [spin=down];
// alpha(q) addresses quasiparticle mode q-1. Mode range errors surface as
// UnknownMode (UnknownPair for BCS field modes).
Product to_symbols(const OperatorExpr& expr, const Model& model);

// Inverse rendering of a symbol as a DSL atom, used when the original source
// atom is unavailable. BCS models print field modes back in (k, spin) form.
Atom atom_from_symbol(const OperatorSymbol& symbol, const Model& model);

}  // namespace wick
