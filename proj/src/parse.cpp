#include "wick/parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "wick/errors.hpp"
#include "wick/models.hpp"
#include "wick/render.hpp"

namespace wick {

namespace {

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  int column() const { return static_cast<int>(pos) + 1; }
  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  char take() { return done() ? '\0' : text[pos++]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  void expect(char c) {
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", column());
    }
    ++pos;
  }

  std::string word() {
    std::size_t start = pos;
    while (!done() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  }

  int integer() {
    const int at = column();
    std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a mode index", at);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc{} || ptr != text.data() + pos) {
      throw ParseError("mode index out of range", at);
    }
    return value;
  }

  double real() {
    const int at = column();
    std::size_t start = pos;
    if (peek() == '+' || peek() == '-') ++pos;
    bool digits = false;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos, digits = true;
    if (peek() == '.') {
      ++pos;
      while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos, digits = true;
    }
    if (!digits) throw ParseError("malformed time", at);
    if (peek() == 'e' || peek() == 'E') {
      ++pos;
      if (peek() == '+' || peek() == '-') ++pos;
      bool exp_digits = false;
      while (!done() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos, exp_digits = true;
      if (!exp_digits) throw ParseError("malformed time exponent", at);
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc{} || ptr != text.data() + pos) throw ParseError("malformed time", at);
    return value;
  }
};

bool known_name(const std::string& name) {
  return name == "A" || name == "c" || name == "psi" || name == "alpha" || name == "a";
}

}  // namespace

OperatorExpr parse(const std::string& input) {
  OperatorExpr expr;
  Scanner s{input};
  s.skip_ws();
  while (!s.done()) {
    Atom atom;
    atom.column = s.column();
    atom.name = s.word();
    if (atom.name.empty()) throw ParseError("expected an operator name", s.column());
    if (!known_name(atom.name)) {
      throw ParseError("unknown operator name '" + atom.name + "'", atom.column);
    }
    if (s.peek() == '+') {
      s.take();
      atom.dagger = true;
    }
    s.expect('(');
    atom.mode = s.integer();
    if (atom.mode < 1) throw ParseError("mode indices are 1-based", s.column());
    if (s.peek() == ',') {
      s.take();
      const int at = s.column();
      const std::string spin = s.word();
      if (atom.name != "a") throw ParseError("only 'a' atoms take a spin label", at);
      if (spin == "up") {
        atom.spin = Spin::Up;
      } else if (spin == "down") {
        atom.spin = Spin::Down;
      } else {
        throw ParseError("spin must be 'up' or 'down'", at);
      }
    }
    s.expect(')');
    if (s.peek() == '@') {
      s.take();
      atom.time = s.real();
    }
    expr.atoms.push_back(std::move(atom));
    s.skip_ws();
  }
  return expr;
}

std::string print(const Atom& atom) {
  std::string out = atom.name;
  if (atom.dagger) out += '+';
  out += '(';
  out += std::to_string(atom.mode);
  if (atom.spin) out += (*atom.spin == Spin::Up) ? ",up" : ",down";
  out += ')';
  if (atom.time) {
    out += '@';
    out += format_double(*atom.time);
  }
  return out;
}

std::string print(const OperatorExpr& expr) {
  std::string out;
  for (std::size_t i = 0; i < expr.atoms.size(); ++i) {
    if (i) out += ' ';
    out += print(expr.atoms[i]);
  }
  return out;
}

Product to_symbols(const OperatorExpr& expr, const Model& model) {
  Product product;
  product.reserve(expr.atoms.size());
  for (const auto& atom : expr.atoms) {
    OperatorSymbol sym;
    sym.time = atom.time;
    if (atom.name == "alpha") {
      sym.base = atom.dagger ? OpBase::QuasiCreate : OpBase::QuasiAnnihilate;
      sym.mode = atom.mode - 1;
    } else {
      sym.base = atom.dagger ? OpBase::FieldCreate : OpBase::FieldAnnihilate;
      if (atom.spin) {
        // (k, spin) -> 2(k-1) + [spin = down]
        sym.mode = 2 * (atom.mode - 1) + (*atom.spin == Spin::Down ? 1 : 0);
      } else {
        sym.mode = atom.mode - 1;
      }
    }
    model.decompose(sym);  // eager mode validation
    product.push_back(sym);
  }
  return product;
}

Atom atom_from_symbol(const OperatorSymbol& symbol, const Model& model) {
  Atom atom;
  atom.dagger = symbol.base == OpBase::FieldCreate || symbol.base == OpBase::QuasiCreate;
  atom.time = symbol.time;
  if (symbol.is_pure()) {
    atom.name = "alpha";
    atom.mode = symbol.mode + 1;
    return atom;
  }
  if (dynamic_cast<const BcsModel*>(&model) != nullptr) {
    atom.name = "a";
    atom.mode = symbol.mode / 2 + 1;
    atom.spin = (symbol.mode % 2 == 0) ? Spin::Up : Spin::Down;
    return atom;
  }
  atom.name = dynamic_cast<const AbstractModel*>(&model) != nullptr ? "A" : "c";
  atom.mode = symbol.mode + 1;
  return atom;
}

}  // namespace wick
