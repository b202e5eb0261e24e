#include "wick/normal_order.hpp"

#include "wick/errors.hpp"

namespace wick {

SignedTerm normal_order(std::span<const OperatorSymbol> product, Statistics statistics) {
  SignedTerm term;
  term.normal_factors.reserve(product.size());
  int position = 0;
  for (const auto& op : product) {
    if (!op.is_pure()) {
      throw NotPureClass("normal_order: field symbol has no definite +/- class");
    }
    term.normal_factors.push_back({op, position++});
  }
  canonicalize_term(term, statistics);
  return term;
}

SignedTerm normal_order(const SignedTerm& term, Statistics statistics) {
  for (const auto& f : term.normal_factors) {
    if (!f.op.is_pure()) {
      throw NotPureClass("normal_order: field symbol has no definite +/- class");
    }
  }
  SignedTerm out = term;
  canonicalize_term(out, statistics);
  return out;
}

}  // namespace wick
