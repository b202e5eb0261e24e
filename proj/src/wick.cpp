#include "wick/wick.hpp"

#include <algorithm>
#include <limits>

#include "expand_detail.hpp"
#include "wick/errors.hpp"

namespace wick {

Complex contract(const OperatorSymbol& a, const OperatorSymbol& b, const Model& model) {
  return model.contraction(a, b);
}

int extended_contraction_sign(int n_between, Statistics statistics) {
  if (statistics == Statistics::Bose) return +1;
  return n_between % 2 == 0 ? +1 : -1;
}

namespace detail {

void prepend_symbol(const OperatorSymbol& head, int head_position,
                    const std::vector<SignedTerm>& tail, std::vector<SignedTerm>& out,
                    Statistics statistics, bool evaluate, const PairCouldFn& could,
                    const PairValueFn& pair_value) {
  for (const auto& term : tail) {
    {
      SignedTerm grown;
      grown.coefficient = term.coefficient;
      grown.contractions = term.contractions;
      grown.normal_factors.reserve(term.normal_factors.size() + 1);
      grown.normal_factors.push_back({head, head_position});
      grown.normal_factors.insert(grown.normal_factors.end(), term.normal_factors.begin(),
                                  term.normal_factors.end());
      out.push_back(std::move(grown));
    }
    for (std::size_t i = 0; i < term.normal_factors.size(); ++i) {
      const auto& factor = term.normal_factors[i];
      if (!could(head, factor.op)) continue;
      Complex coeff = term.coefficient;
      coeff *= extended_contraction_sign(static_cast<int>(i), statistics);
      if (evaluate) {
        coeff *= pair_value(head, factor.op);
        if (coeff == Complex{0.0, 0.0}) continue;
      }
      SignedTerm contracted;
      contracted.coefficient = coeff;
      contracted.contractions = term.contractions;
      contracted.contractions.emplace_back(head_position, factor.position);
      contracted.normal_factors.reserve(term.normal_factors.size() - 1);
      for (std::size_t j = 0; j < term.normal_factors.size(); ++j) {
        if (j != i) contracted.normal_factors.push_back(term.normal_factors[j]);
      }
      out.push_back(std::move(contracted));
    }
  }
}

namespace {

// Right-to-left fold of the product, tracking original positions.
std::vector<SignedTerm> fold_product(const Product& product, const std::vector<int>& positions,
                                     Statistics statistics, bool evaluate,
                                     const PairCouldFn& could, const PairValueFn& pair_value) {
  const int n = static_cast<int>(product.size());
  std::vector<SignedTerm> terms;
  {
    SignedTerm seed;
    seed.normal_factors.push_back({product[n - 1], positions[n - 1]});
    terms.push_back(std::move(seed));
  }
  std::vector<SignedTerm> next;
  for (int k = n - 2; k >= 0; --k) {
    next.clear();
    next.reserve(terms.size() * 2);
    prepend_symbol(product[k], positions[k], terms, next, statistics, evaluate, could,
                   pair_value);
    std::swap(terms, next);
  }
  return terms;
}

// Enumerates subsets of slots carrying a nonzero c-number piece; calls
// fn(prefactor, remaining ops, remaining positions). Condensate models are
// bosonic, so pulling scalars out involves no signs.
void for_each_condensate_split(
    const Product& product, const std::vector<Complex>& scalars,
    const std::function<void(Complex, const Product&, const std::vector<int>&)>& fn) {
  const int n = static_cast<int>(product.size());
  std::vector<int> scalar_slots;
  for (int i = 0; i < n; ++i) {
    if (scalars[i] != Complex{0.0, 0.0}) scalar_slots.push_back(i);
  }
  const std::size_t subsets = std::size_t{1} << scalar_slots.size();
  Product rest;
  std::vector<int> rest_positions;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    Complex prefactor{1.0, 0.0};
    std::vector<bool> replaced(n, false);
    for (std::size_t b = 0; b < scalar_slots.size(); ++b) {
      if (mask & (std::size_t{1} << b)) {
        replaced[scalar_slots[b]] = true;
        prefactor *= scalars[scalar_slots[b]];
      }
    }
    rest.clear();
    rest_positions.clear();
    for (int i = 0; i < n; ++i) {
      if (!replaced[i]) {
        rest.push_back(product[i]);
        rest_positions.push_back(i);
      }
    }
    fn(prefactor, rest, rest_positions);
  }
}

}  // namespace

Expansion expand_impl(const Product& product, const Model& model, bool evaluate,
                      const PairCouldFn& could, const PairValueFn& pair_value,
                      const ScalarFn& scalar_value) {
  if (product.empty()) throw EmptyProduct("wick_expand: empty product");
  const int n = static_cast<int>(product.size());

  Expansion expansion;
  expansion.statistics = model.statistics();
  expansion.original_length = n;
  expansion.evaluated = evaluate;

  std::vector<int> all_positions(n);
  for (int i = 0; i < n; ++i) all_positions[i] = i;

  bool any_scalar = false;
  std::vector<Complex> scalars(n, Complex{0.0, 0.0});
  if (evaluate && model.has_condensate()) {
    for (int i = 0; i < n; ++i) {
      scalars[i] = scalar_value(product[i]);
      any_scalar = any_scalar || scalars[i] != Complex{0.0, 0.0};
    }
  }

  if (!any_scalar) {
    expansion.terms =
        fold_product(product, all_positions, expansion.statistics, evaluate, could, pair_value);
    expansion.merge_canonicalize();
    return expansion;
  }

  for_each_condensate_split(
      product, scalars,
      [&](Complex prefactor, const Product& rest, const std::vector<int>& rest_positions) {
        if (rest.empty()) {
          SignedTerm scalar_term;
          scalar_term.coefficient = prefactor;
          expansion.terms.push_back(std::move(scalar_term));
          return;
        }
        auto terms =
            fold_product(rest, rest_positions, expansion.statistics, true, could, pair_value);
        for (auto& t : terms) {
          t.coefficient *= prefactor;
          expansion.terms.push_back(std::move(t));
        }
      });
  expansion.merge_canonicalize();
  return expansion;
}

Complex condensate_partition_sum(const Product& product, const Model& model,
                                 const ScalarFn& scalar_value, const PairValueFn& pair_value) {
  const int n = static_cast<int>(product.size());
  std::vector<Complex> scalars(n);
  for (int i = 0; i < n; ++i) scalars[i] = scalar_value(product[i]);

  Complex total{0.0, 0.0};
  for_each_condensate_split(product, scalars,
                            [&](Complex prefactor, const Product& rest, const std::vector<int>&) {
                              total += prefactor *
                                       pair_partition_sum(
                                           static_cast<int>(rest.size()), model.statistics(),
                                           [&](int i, int j) {
                                             return pair_value(rest[i], rest[j]);
                                           });
                            });
  return total;
}

}  // namespace detail

Expansion induction_step(const OperatorSymbol& head, const SignedTerm& tail, const Model& model,
                      const ExpandOptions& options) {
  SignedTerm base = tail;
  int min_position = std::numeric_limits<int>::max();
  for (const auto& f : base.normal_factors) min_position = std::min(min_position, f.position);
  for (const auto& p : base.contractions) min_position = std::min(min_position, p.first);

  int head_position = 0;
  if (min_position != std::numeric_limits<int>::max()) {
    head_position = min_position - 1;
    if (head_position < 0) {
      for (auto& f : base.normal_factors) f.position += 1;
      for (auto& p : base.contractions) {
        p.first += 1;
        p.second += 1;
      }
      head_position = 0;
    }
  }

  Expansion expansion;
  expansion.statistics = model.statistics();
  expansion.evaluated = options.evaluate;
  auto could = [&model](const OperatorSymbol& a, const OperatorSymbol& b) {
    return model.could_contract(a, b);
  };
  auto value = [&model](const OperatorSymbol& a, const OperatorSymbol& b) {
    return model.bracket_contraction(a, b);
  };
  detail::prepend_symbol(head, head_position, {base}, expansion.terms, expansion.statistics,
                         options.evaluate, could, value);
  int max_position = head_position;
  for (const auto& t : expansion.terms) {
    for (const auto& f : t.normal_factors) max_position = std::max(max_position, f.position);
    for (const auto& p : t.contractions) max_position = std::max(max_position, p.second);
  }
  expansion.original_length = max_position + 1;
  expansion.merge_canonicalize();
  return expansion;
}

Expansion wick_expand(const Product& product, const Model& model, const ExpandOptions& options) {
  auto could = [&model](const OperatorSymbol& a, const OperatorSymbol& b) {
    return model.could_contract(a, b);
  };
  auto value = [&model](const OperatorSymbol& a, const OperatorSymbol& b) {
    return model.bracket_contraction(a, b);
  };
  auto scalar = [&model](const OperatorSymbol& op) { return model.condensate_scalar(op); };
  return detail::expand_impl(product, model, options.evaluate, could, value, scalar);
}

// ---------------------------------------------------------------------------
// Pair partitions

PairPartitionStream::PairPartitionStream(int n_positions) : n_(n_positions) {
  if (n_ < 2 || n_ % 2 != 0) {
    throw OddLength("pair partitions need an even number of positions >= 2");
  }
  partner_.assign(n_, -1);
}

bool PairPartitionStream::extend() {
  for (int i = 0; i < n_; ++i) {
    if (partner_[i] != -1) continue;
    int j = i + 1;
    while (j < n_ && partner_[j] != -1) ++j;
    partner_[i] = j;
    partner_[j] = i;
    firsts_.push_back(i);
  }
  return true;
}

bool PairPartitionStream::advance() {
  while (!firsts_.empty()) {
    const int i = firsts_.back();
    int j = partner_[i];
    partner_[i] = partner_[j] = -1;
    firsts_.pop_back();
    for (++j; j < n_; ++j) {
      if (partner_[j] == -1) {
        partner_[i] = j;
        partner_[j] = i;
        firsts_.push_back(i);
        extend();
        return true;
      }
    }
  }
  return false;
}

void PairPartitionStream::emit(PairPartition& out) const {
  out.pairs.clear();
  out.pairs.reserve(firsts_.size());
  // Sign: each pair picks up one swap per still-open slot it straddles at the
  // moment it is pulled out, processing pairs left to right.
  std::vector<char> open(n_, 1);
  int sign = +1;
  for (int i : firsts_) {
    const int j = partner_[i];
    out.pairs.emplace_back(i, j);
    open[i] = open[j] = 0;
    int between = 0;
    for (int k = i + 1; k < j; ++k) between += open[k];
    if (between % 2 != 0) sign = -sign;
  }
  out.sign = sign;
}

bool PairPartitionStream::next(PairPartition& out) {
  if (done_) return false;
  if (fresh_) {
    fresh_ = false;
    extend();
  } else if (!advance()) {
    done_ = true;
    return false;
  }
  emit(out);
  return true;
}

void enumerate_pair_partitions(int n_positions,
                               const std::function<void(const PairPartition&)>& fn) {
  PairPartitionStream stream(n_positions);
  PairPartition p;
  while (stream.next(p)) fn(p);
}

std::uint64_t double_factorial_pairings(int n_positions) {
  std::uint64_t count = 1;
  for (int k = n_positions - 1; k > 1; k -= 2) count *= static_cast<std::uint64_t>(k);
  return count;
}

// ---------------------------------------------------------------------------
// Expectation values

Complex pair_partition_sum(int length, Statistics statistics,
                           const std::function<Complex(int, int)>& pair_value) {
  if (length == 0) return Complex{1.0, 0.0};
  if (length % 2 != 0) return Complex{0.0, 0.0};

  std::vector<char> open(length, 1);
  Complex total{0.0, 0.0};
  // Depth-first over partitions, pruning zero-valued branches.
  auto rec = [&](auto&& self, int from, Complex acc) -> void {
    int i = from;
    while (i < length && !open[i]) ++i;
    if (i == length) {
      total += acc;
      return;
    }
    for (int j = i + 1; j < length; ++j) {
      if (!open[j]) continue;
      const Complex value = pair_value(i, j);
      if (value == Complex{0.0, 0.0}) continue;
      int between = 0;
      for (int k = i + 1; k < j; ++k) between += open[k];
      const int sign = extended_contraction_sign(between, statistics);
      open[i] = open[j] = 0;
      self(self, i + 1, acc * value * static_cast<double>(sign));
      open[i] = open[j] = 1;
    }
  };
  rec(rec, 0, Complex{1.0, 0.0});
  return total;
}

Complex vev(const Product& product, const Model& model) {
  auto bracket = [&model](const OperatorSymbol& a, const OperatorSymbol& b) {
    return model.bracket_contraction(a, b);
  };
  if (model.has_condensate()) {
    auto scalar = [&model](const OperatorSymbol& op) { return model.condensate_scalar(op); };
    return detail::condensate_partition_sum(product, model, scalar, bracket);
  }
  return pair_partition_sum(static_cast<int>(product.size()), model.statistics(),
                            [&](int i, int j) { return bracket(product[i], product[j]); });
}

}  // namespace wick
