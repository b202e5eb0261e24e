#pragma once

#include <functional>

#include "wick/model.hpp"
#include "wick/terms.hpp"

namespace wick::detail {

using PairCouldFn = std::function<bool(const OperatorSymbol&, const OperatorSymbol&)>;
using PairValueFn = std::function<Complex(const OperatorSymbol&, const OperatorSymbol&)>;
using ScalarFn = std::function<Complex(const OperatorSymbol&)>;

// Shared expansion driver behind wick_expand and wick_expand_t: left fold of
// the one-operator induction step with pluggable contraction predicates/values, plus the
// condensate subset pre-expansion for models with c-number pieces.
Expansion expand_impl(const Product& product, const Model& model, bool evaluate,
                      const PairCouldFn& could, const PairValueFn& pair_value,
                      const ScalarFn& scalar_value);

// Prepends one operator to every partial term (the induction step).
void prepend_symbol(const OperatorSymbol& head, int head_position,
                    const std::vector<SignedTerm>& tail, std::vector<SignedTerm>& out,
                    Statistics statistics, bool evaluate, const PairCouldFn& could,
                    const PairValueFn& pair_value);

// Condensate-aware pair-partition sum (shared by vev and vev_time_ordered).
Complex condensate_partition_sum(const Product& product, const Model& model,
                                 const ScalarFn& scalar_value, const PairValueFn& pair_value);

}  // namespace wick::detail
