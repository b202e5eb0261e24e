#pragma once

#include <functional>

#include "wick/model.hpp"
#include "wick/terms.hpp"

namespace wick {

struct ExpandOptions {
  // false: keep contraction scalars formal (<i j> brackets), coefficients are
  // reordering signs. true: fold the model's contraction values into the
  // coefficients and drop exactly-zero terms.
  bool evaluate = false;
};

// Static contraction <gs| a b |gs> of two symbols under the model.
Complex contract(const OperatorSymbol& a, const OperatorSymbol& b, const Model& model);

// Sign picked up pulling a contraction out across n_between operators.
int extended_contraction_sign(int n_between, Statistics statistics);

// One induction step of the theorem: head * (coefficient N[factors]) expands
// into N[head factors] plus one term per structurally possible contraction of
// head with an uncontracted factor, each carrying the extended-contraction
// sign. The head is placed at position min(tail positions) - 1; a tail
// already using position 0 is shifted up to make room.
Expansion induction_step(const OperatorSymbol& head, const SignedTerm& tail, const Model& model,
                      const ExpandOptions& options = {});

// Full Wick expansion of a product: the normal-ordered term, all single
// contractions, all double contractions, ... Canonicalized and merged.
// Throws EmptyProduct on empty input.
Expansion wick_expand(const Product& product, const Model& model,
                      const ExpandOptions& options = {});

// A partition of 0..2n-1 into pairs (i, j), i < j, with the fermionic parity
// of the permutation 0,1,...,2n-1 -> i1,j1,...,in,jn.
struct PairPartition {
  std::vector<ContractionPair> pairs;
  int sign = +1;
};

// Streams all (2n-1)!! pair partitions of 0..n_positions-1 in lexicographic
// order (smallest unpaired element first), constant memory per partition.
// Throws OddLength unless n_positions is even and >= 2.
class PairPartitionStream {
 public:
  explicit PairPartitionStream(int n_positions);
  // Fills `out` with the next partition; false when exhausted.
  bool next(PairPartition& out);

 private:
  int n_;
  bool done_ = false;
  bool fresh_ = true;
  std::vector<int> partner_;  // partner_[i] = paired index, -1 if unpaired
  std::vector<int> firsts_;   // stack of pair-opening positions, in order
  bool advance();
  bool extend();
  void emit(PairPartition& out) const;
};

// Convenience: calls fn for every partition, in stream order.
void enumerate_pair_partitions(int n_positions, const std::function<void(const PairPartition&)>& fn);

std::uint64_t double_factorial_pairings(int n_positions);  // (n-1)!! for even n

// Reference-state expectation value of a product: exactly 0 for odd length,
// otherwise the signed sum over all pair partitions of products of
// contraction values. Independent of the wick_expand code path.
Complex vev(const Product& product, const Model& model);

// Same pair-partition sum with a caller-supplied pair value (used for
// time-ordered expectation values).
Complex pair_partition_sum(
    int length, Statistics statistics,
    const std::function<Complex(int, int)>& pair_value);

}  // namespace wick
