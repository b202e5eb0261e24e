#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "wick/operators.hpp"
#include "wick/statistics.hpp"

namespace wick {

using Complex = std::complex<double>;

// Position pair (i, j), i < j, referring to slots of the original product.
using ContractionPair = std::pair<int, int>;

// A factor that survived contraction, remembering which slot of the original
// product it came from. Positions are the primary key: repeated identical
// symbols stay distinguishable.
struct PositionedOp {
  OperatorSymbol op;
  int position = 0;

  friend auto operator<=>(const PositionedOp&, const PositionedOp&) = default;
};

// One summand of a Wick expansion:
//   coefficient * <i1 j1><i2 j2>... * N[factors].
// In symbolic expansions the contraction scalars stay formal and the
// coefficient is the reordering sign; in evaluated expansions the model's
// contraction values are folded into the coefficient and the pairs remain as
// provenance. Factor lists of pure-class symbols are kept in normal order
// (all + class before all - class); lists containing field symbols keep
// ascending original position, standing for the symbolic N[...].
struct SignedTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<ContractionPair> contractions;
  std::vector<PositionedOp> normal_factors;

  bool fully_contracted() const { return normal_factors.empty(); }

  friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

// Key order: fewer contractions first, then contraction pairs
// lexicographically, then factors. This puts the uncontracted term first and
// lists single contractions <12>, <13>, ... before double ones.
bool term_key_less(const SignedTerm& a, const SignedTerm& b);
bool term_key_equal(const SignedTerm& a, const SignedTerm& b);

// Rewrites the factor list into canonical order, folding the fermionic
// reordering parity into the coefficient. Pure-class factors sort + before -,
// within a block by (mode, time, original position); any field factor forces
// plain ascending-position order. Contraction pairs are sorted by first slot.
void canonicalize_term(SignedTerm& term, Statistics statistics);

// A sum of normal-ordered terms produced by expanding one operator product.
struct Expansion {
  Statistics statistics = Statistics::Fermi;
  int original_length = 0;
  bool evaluated = false;  // true when model contraction values were folded in
  std::vector<SignedTerm> terms;

  // Sorts terms by key, merges equal keys by summing coefficients and, for
  // evaluated expansions, drops terms whose coefficient is exactly zero.
  void merge_canonicalize();

  // Sum of coefficients of fully contracted terms (the c-number part).
  Complex scalar_part() const;

  std::size_t count_with_contractions(int k) const;
};

}  // namespace wick
