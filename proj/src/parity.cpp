#include "wick/parity.hpp"

#include <vector>

#include "wick/errors.hpp"

namespace wick {

int parity(std::span<const int> permutation) {
  const int n = static_cast<int>(permutation.size());
  std::vector<bool> seen(n, false);
  for (int v : permutation) {
    if (v < 0 || v >= n || seen[v]) {
      throw InvalidPermutation("parity: input is not a bijection on 0..n-1");
    }
    seen[v] = true;
  }
  int inversions = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (permutation[i] > permutation[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? +1 : -1;
}

}  // namespace wick
