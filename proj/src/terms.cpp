#include "wick/terms.hpp"

#include <algorithm>
#include <tuple>

namespace wick {

namespace {

// Intra-block sort key: (mode, time, original position). Missing times sort
// first so static symbols stay put.
auto block_key(const PositionedOp& f) {
  return std::make_tuple(f.op.mode, f.op.time.has_value(), f.op.time.value_or(0.0), f.position);
}

// Stable insertion sort counting swaps; factor lists are short.
template <typename Less>
int sort_counting_swaps(std::vector<PositionedOp>& v, Less less) {
  int swaps = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && less(v[j], v[j - 1]); --j) {
      std::swap(v[j], v[j - 1]);
      ++swaps;
    }
  }
  return swaps;
}

}  // namespace

void canonicalize_term(SignedTerm& term, Statistics statistics) {
  for (auto& pair : term.contractions) {
    if (pair.first > pair.second) std::swap(pair.first, pair.second);
  }
  std::sort(term.contractions.begin(), term.contractions.end());

  const bool all_pure =
      std::all_of(term.normal_factors.begin(), term.normal_factors.end(),
                  [](const PositionedOp& f) { return f.op.is_pure(); });

  int swaps = 0;
  if (all_pure) {
    // + class first, then - class, each block in canonical order.
    swaps = sort_counting_swaps(term.normal_factors, [](const PositionedOp& a,
                                                        const PositionedOp& b) {
      if (a.op.is_plus_class() != b.op.is_plus_class()) return a.op.is_plus_class();
      return block_key(a) < block_key(b);
    });
  } else {
    // Symbolic N[...] over fields: canonical form is ascending original position.
    swaps = sort_counting_swaps(term.normal_factors, [](const PositionedOp& a,
                                                        const PositionedOp& b) {
      return a.position < b.position;
    });
  }
  if (statistics == Statistics::Fermi && (swaps % 2) != 0) {
    term.coefficient = -term.coefficient;
  }
}

bool term_key_less(const SignedTerm& a, const SignedTerm& b) {
  if (a.contractions.size() != b.contractions.size()) {
    return a.contractions.size() < b.contractions.size();
  }
  if (a.contractions != b.contractions) return a.contractions < b.contractions;
  return a.normal_factors < b.normal_factors;
}

bool term_key_equal(const SignedTerm& a, const SignedTerm& b) {
  return a.contractions == b.contractions && a.normal_factors == b.normal_factors;
}

void Expansion::merge_canonicalize() {
  for (auto& term : terms) canonicalize_term(term, statistics);
  std::sort(terms.begin(), terms.end(), term_key_less);

  std::vector<SignedTerm> merged;
  merged.reserve(terms.size());
  for (auto& term : terms) {
    if (!merged.empty() && term_key_equal(merged.back(), term)) {
      merged.back().coefficient += term.coefficient;
    } else {
      merged.push_back(std::move(term));
    }
  }
  if (evaluated) {
    std::erase_if(merged, [](const SignedTerm& t) { return t.coefficient == Complex{0.0, 0.0}; });
  }
  terms = std::move(merged);
}

Complex Expansion::scalar_part() const {
  Complex sum{0.0, 0.0};
  for (const auto& term : terms) {
    if (term.fully_contracted()) sum += term.coefficient;
  }
  return sum;
}

std::size_t Expansion::count_with_contractions(int k) const {
  return static_cast<std::size_t>(
      std::count_if(terms.begin(), terms.end(), [k](const SignedTerm& t) {
        return static_cast<int>(t.contractions.size()) == k;
      }));
}

}  // namespace wick
