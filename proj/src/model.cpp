#include "wick/model.hpp"

#include <cmath>

#include "wick/errors.hpp"

namespace wick {

namespace {

Complex time_phase(double frequency, int direction, double t) {
  return std::polar(1.0, direction * frequency * t);
}

}  // namespace

Complex Model::quasi_bracket(int a, int b) const {
  return a == b ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
}

double Model::quasi_frequency(int) const { return 0.0; }

std::vector<ModeOpTerm> Model::quasi_mode_ops(const OperatorSymbol&) const {
  throw UnknownSymbol(std::string(name()) + ": model has no Fock-space representation");
}

std::vector<ModeOpTerm> Model::mode_op_expansion(const OperatorSymbol& symbol) const {
  if (symbol.is_pure()) return quasi_mode_ops(symbol);
  std::vector<ModeOpTerm> out;
  for (const auto& comp : decompose(symbol)) {
    if (comp.is_scalar) {
      throw UnknownSymbol(std::string(name()) +
                          ": condensate piece has no default operator expansion");
    }
    for (auto term : quasi_mode_ops(comp.op)) {
      term.coeff *= comp.coeff;
      out.push_back(term);
    }
  }
  return out;
}

Complex Model::bracket_contraction(const OperatorSymbol& a, const OperatorSymbol& b) const {
  Complex value{0.0, 0.0};
  for (const auto& ca : decompose(a)) {
    if (ca.is_scalar || !ca.op.is_minus_class()) continue;
    for (const auto& cb : decompose(b)) {
      if (cb.is_scalar || !cb.op.is_plus_class()) continue;
      value += ca.coeff * cb.coeff * quasi_bracket(ca.op.mode, cb.op.mode);
    }
  }
  return value;
}

Complex Model::contraction(const OperatorSymbol& a, const OperatorSymbol& b) const {
  return bracket_contraction(a, b) + condensate_scalar(a) * condensate_scalar(b);
}

Complex Model::evolved_bracket(const OperatorSymbol& a, const OperatorSymbol& b) const {
  if (!a.time || !b.time) {
    throw MissingTime("evolved contraction: both symbols need time labels");
  }
  Complex value{0.0, 0.0};
  for (const auto& ca : decompose(a)) {
    if (ca.is_scalar || !ca.op.is_minus_class()) continue;
    const Complex pa = time_phase(quasi_frequency(ca.op.mode), -1, *a.time);
    for (const auto& cb : decompose(b)) {
      if (cb.is_scalar || !cb.op.is_plus_class()) continue;
      const Complex pb = time_phase(quasi_frequency(cb.op.mode), +1, *b.time);
      value += ca.coeff * pa * cb.coeff * pb * quasi_bracket(ca.op.mode, cb.op.mode);
    }
  }
  return value;
}

Complex Model::evolved_contraction(const OperatorSymbol& a, const OperatorSymbol& b) const {
  return evolved_bracket(a, b) + evolved_condensate_scalar(a) * evolved_condensate_scalar(b);
}

Complex Model::condensate_scalar(const OperatorSymbol& symbol) const {
  Complex value{0.0, 0.0};
  for (const auto& c : decompose(symbol)) {
    if (c.is_scalar) value += c.coeff;
  }
  return value;
}

Complex Model::evolved_condensate_scalar(const OperatorSymbol& symbol) const {
  Complex value{0.0, 0.0};
  for (const auto& c : decompose(symbol)) {
    if (!c.is_scalar) continue;
    if (!symbol.time) throw MissingTime("evolved condensate piece needs a time label");
    value += c.coeff * time_phase(c.scalar_frequency, c.scalar_direction, *symbol.time);
  }
  return value;
}

bool Model::could_contract(const OperatorSymbol& a, const OperatorSymbol& b) const {
  bool a_minus = false;
  for (const auto& c : decompose(a)) {
    if (!c.is_scalar && c.op.is_minus_class()) {
      a_minus = true;
      break;
    }
  }
  if (!a_minus) return false;
  for (const auto& c : decompose(b)) {
    if (!c.is_scalar && c.op.is_plus_class()) return true;
  }
  return false;
}

}  // namespace wick
