#pragma once

#include <span>

namespace wick {

// Parity (-1)^inversions of a permutation of 0..n-1.
// Throws InvalidPermutation if the input is not a bijection on 0..n-1.
int parity(std::span<const int> permutation);

}  // namespace wick
