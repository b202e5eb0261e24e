#pragma once

#include <span>

#include "wick/terms.hpp"

namespace wick {

// Brings a product of pure-class symbols to normal order: every + class
// operator left of every - class one, coefficient (+-1)^P with P the
// permutation performed (always +1 for bosons). Idempotent.
// Throws NotPureClass if a field symbol appears (decompose it first).
SignedTerm normal_order(std::span<const OperatorSymbol> product, Statistics statistics);

// Same, applied to an existing term: the factor list is reordered and the
// parity multiplies the stored coefficient. Contractions are untouched.
SignedTerm normal_order(const SignedTerm& term, Statistics statistics);

}  // namespace wick
