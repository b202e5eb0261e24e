#include "wick/time_ordered.hpp"

#include <algorithm>
#include <numeric>

#include "expand_detail.hpp"
#include "wick/errors.hpp"
#include "wick/matrix_functions.hpp"
#include "wick/parity.hpp"

namespace wick {

namespace {

void require_times(const Product& product) {
  for (const auto& op : product) {
    if (!op.time) throw MissingTime("time-ordered operation: every symbol needs a time label");
  }
}

// True when a stands left of b in the T-ordered product: later times first;
// at equal times creation-like operators go left (the t+ convention); full
// ties keep the written order.
bool t_before(const OperatorSymbol& a, const OperatorSymbol& b) {
  if (*a.time != *b.time) return *a.time > *b.time;
  return a.is_creation_like() && !b.is_creation_like();
}

}  // namespace

SignedTerm time_order(const Product& product, Statistics statistics) {
  require_times(product);
  const int n = static_cast<int>(product.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return t_before(product[i], product[j]); });

  SignedTerm term;
  term.coefficient = Complex{static_cast<double>(parity(order)), 0.0};
  if (statistics == Statistics::Bose) term.coefficient = Complex{1.0, 0.0};
  term.normal_factors.reserve(n);
  for (int i : order) term.normal_factors.push_back({product[i], i});
  return term;
}

Complex t_contract(const OperatorSymbol& a, const OperatorSymbol& b, const Model& model) {
  if (!a.time || !b.time) throw MissingTime("t_contract: both symbols need time labels");
  if (!t_before(b, a)) {
    // a first, or a full tie (written order kept).
    return model.evolved_contraction(a, b);
  }
  return static_cast<double>(swap_sign(model.statistics())) * model.evolved_contraction(b, a);
}

namespace {

// Bracket-only T-contraction, used inside expansions of condensate models
// where the scalar pieces are split off beforehand.
Complex t_bracket(const OperatorSymbol& a, const OperatorSymbol& b, const Model& model) {
  if (!t_before(b, a)) {
    return model.evolved_bracket(a, b);
  }
  return static_cast<double>(swap_sign(model.statistics())) * model.evolved_bracket(b, a);
}

}  // namespace

Expansion wick_expand_t(const Product& product, const Model& model, const ExpandOptions& options) {
  require_times(product);
  auto could = [&model](const OperatorSymbol& a, const OperatorSymbol& b) {
    return model.could_contract(a, b) || model.could_contract(b, a);
  };
  auto value = [&model](const OperatorSymbol& a, const OperatorSymbol& b) {
    return t_bracket(a, b, model);
  };
  auto scalar = [&model](const OperatorSymbol& op) {
    return model.evolved_condensate_scalar(op);
  };
  return detail::expand_impl(product, model, options.evaluate, could, value, scalar);
}

Complex vev_time_ordered(const Product& product, const Model& model) {
  require_times(product);
  auto value = [&model](const OperatorSymbol& a, const OperatorSymbol& b) {
    return t_bracket(a, b, model);
  };
  if (model.has_condensate()) {
    auto scalar = [&model](const OperatorSymbol& op) {
      return model.evolved_condensate_scalar(op);
    };
    return detail::condensate_partition_sum(product, model, scalar, value);
  }
  return pair_partition_sum(static_cast<int>(product.size()), model.statistics(),
                            [&](int i, int j) { return value(product[i], product[j]); });
}

PropagatorMatrix propagator_matrix(const std::vector<SpaceTimePoint>& xs,
                                   const std::vector<SpaceTimePoint>& ys, const Model& model) {
  const Complex minus_i{0.0, -1.0};
  PropagatorMatrix p;
  p.rows = xs;
  p.cols = ys;
  p.entries.resize(static_cast<long>(xs.size()), static_cast<long>(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const auto psi = field_annihilate(xs[i].mode, xs[i].time);
      const auto psi_dag = field_create(ys[j].mode, ys[j].time);
      p.entries(static_cast<long>(i), static_cast<long>(j)) =
          minus_i * t_contract(psi, psi_dag, model);
    }
  }
  return p;
}

Complex n_particle_green(const std::vector<SpaceTimePoint>& xs,
                         const std::vector<SpaceTimePoint>& ys, const Model& model) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw ShapeError("n_particle_green: need equally many x and y points, at least one each");
  }
  const int n = static_cast<int>(xs.size());

  if (model.has_anomalous() || model.has_condensate()) {
    // i^n G = <gs| T psi(x_1)..psi(x_n) psi+(y_n)..psi+(y_1) |gs>
    Product product;
    for (const auto& x : xs) product.push_back(field_annihilate(x.mode, x.time));
    for (int j = n - 1; j >= 0; --j) product.push_back(field_create(ys[j].mode, ys[j].time));
    Complex value = vev_time_ordered(product, model);
    const Complex minus_i{0.0, -1.0};
    for (int k = 0; k < n; ++k) value *= minus_i;
    return value;
  }

  const PropagatorMatrix p = propagator_matrix(xs, ys, model);
  return model.statistics() == Statistics::Fermi ? determinant(p.entries) : permanent(p.entries);
}

}  // namespace wick
