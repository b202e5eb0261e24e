#pragma once

#include <Eigen/Dense>

#include "wick/model.hpp"
#include "wick/terms.hpp"

namespace wick {

// Truncated many-body Hilbert space over M modes. Basis states are occupation
// tuples (n_0, ..., n_{M-1}), 0 <= n_m <= cutoff, ordered lexicographically
// with n_0 most significant: index = sum_m n_m * (cutoff+1)^(M-1-m).
// Fermionic spaces have cutoff 1 and use the occupied-modes-preceding string
// sign, so CAR holds exactly as matrices.
class FockSpace {
 public:
  // Throws SpaceTooLarge when the dimension exceeds 4096.
  FockSpace(Statistics statistics, int n_modes, int cutoff);

  Statistics statistics() const { return statistics_; }
  int n_modes() const { return n_modes_; }
  int cutoff() const { return cutoff_; }
  long dimension() const { return dimension_; }

  int occupation(long index, int mode) const;
  long total_occupation(long index) const;

 private:
  Statistics statistics_;
  int n_modes_;
  int cutoff_;
  long dimension_;
  std::vector<long> stride_;
};

struct ModeOperators {
  Eigen::MatrixXcd annihilate;
  Eigen::MatrixXcd create;
};

// Dense matrices of c_a and c_a+ for every mode.
std::vector<ModeOperators> build_mode_operators(const FockSpace& space);

struct StateSpec {
  enum class Kind { Vacuum, FermiSea, Bcs, Bec };
  Kind kind = Kind::Vacuum;
  int filled = 0;                                  // FermiSea
  std::vector<std::pair<Complex, Complex>> pairs;  // Bcs (u, v) per channel
  long particles = 0;                              // Bec

  static StateSpec vacuum() { return {}; }
  static StateSpec fermi_sea(int n) { return {Kind::FermiSea, n, {}, 0}; }
  static StateSpec bcs(std::vector<std::pair<Complex, Complex>> uv) {
    return {Kind::Bcs, 0, std::move(uv), 0};
  }
  static StateSpec bec(long n) { return {Kind::Bec, 0, {}, n}; }
};

// Normalized reference state vector. Throws BadStateSpec when the spec does
// not fit the space (wrong statistics, too many particles, ...).
Eigen::VectorXcd build_state(const FockSpace& space, const StateSpec& spec);

// Oracle-side state matching a model's reference state.
StateSpec state_spec_for(const Model& model);

// Exact matrix of one symbol via the model's mode-operator expansion.
Eigen::MatrixXcd symbol_matrix(const FockSpace& space, const std::vector<ModeOperators>& ops,
                               const Model& model, const OperatorSymbol& symbol);

// Matrix of N[factors]: each field factor is decomposed into quasiparticle
// pieces, every pure combination is sorted + before - with its parity, and
// the weighted matrix products are summed.
Eigen::MatrixXcd normal_ordered_matrix(const FockSpace& space,
                                       const std::vector<ModeOperators>& ops, const Model& model,
                                       const std::vector<PositionedOp>& factors);

// Materializes lhs (a plain operator product) and rhs (a symbolic expansion
// of it; contraction scalars become <state| a_i a_j |state> matrix elements)
// and returns the largest entrywise deviation. Fermions compare the whole
// space; bosons compare the block of total occupation <= cutoff - n, which a
// product of n operators provably cannot couple to the truncation boundary.
double check_operator_identity(const Product& product, const Expansion& expansion,
                               const FockSpace& space, const Model& model,
                               const StateSpec& state_spec);

// Convenience: symbolic expansion + identity check in one call.
double check_wick_identity(const Product& product, const FockSpace& space, const Model& model);

}  // namespace wick
