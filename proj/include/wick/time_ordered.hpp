#pragma once

#include <Eigen/Dense>

#include "wick/wick.hpp"

namespace wick {

// Time-orders a product of labeled symbols: stable sort by decreasing time
// with the fermionic parity of the permutation. Equal times put
// creation-like operators left (the t+ convention); remaining ties keep the
// written order. Throws MissingTime if a label is absent.
SignedTerm time_order(const Product& product, Statistics statistics);

// T-contraction <gs| T a(t_a) b(t_b) |gs>:
//   theta(t_a - t_b) <a b>(t) +- theta(t_b - t_a) <b a>(t)
// with each side evolved by the model's free phases. Equal times follow the
// time_order convention. Fermionic T-contractions are antisymmetric under
// argument exchange; bosonic ones symmetric.
Complex t_contract(const OperatorSymbol& a, const OperatorSymbol& b, const Model& model);

// Wick's theorem for time-ordered products: the same combinatorial structure
// as the static expansion with every contraction replaced by a
// T-contraction. Factors keep original order inside N[...].
Expansion wick_expand_t(const Product& product, const Model& model,
                        const ExpandOptions& options = {});

// T-ordered expectation value via the pair-partition corollary.
Complex vev_time_ordered(const Product& product, const Model& model);

// A point (mode, time) labelling one leg of a Green function.
struct SpaceTimePoint {
  int mode = 0;
  double time = 0.0;
};

// G0(x_i, y_j) = -i <gs| T psi(x_i) psi+(y_j) |gs>, one row per x, one column per y.
struct PropagatorMatrix {
  Eigen::MatrixXcd entries;
  std::vector<SpaceTimePoint> rows;
  std::vector<SpaceTimePoint> cols;
};

PropagatorMatrix propagator_matrix(const std::vector<SpaceTimePoint>& xs,
                                   const std::vector<SpaceTimePoint>& ys, const Model& model);

// n-particle free Green function G(x_1..x_n, y_1..y_n), defined through
//   i^n G = <gs| T psi(x_1)..psi(x_n) psi+(y_n)..psi+(y_1) |gs>.
// Pairing-pure models evaluate it as the determinant (fermions) or permanent
// (bosons) of the propagator matrix; anomalous or condensate models fall back
// to the full pair-partition sum. Throws ShapeError on size mismatch.
Complex n_particle_green(const std::vector<SpaceTimePoint>& xs,
                         const std::vector<SpaceTimePoint>& ys, const Model& model);

}  // namespace wick
