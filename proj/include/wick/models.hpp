#pragma once

#include <Eigen/Dense>
#include <map>
#include <utility>

#include "wick/model.hpp"

namespace wick {

// Formal reference state: every A_i splits into A_i^+ + A_i^- with unit
// weights, and the mixed brackets <A_i A_j> are declared values (default 0).
// Not representable on a Fock space.
class AbstractModel : public Model {
 public:
  AbstractModel(Statistics statistics, int n_modes);

  Statistics statistics() const override { return statistics_; }
  int field_mode_count() const override { return n_modes_; }
  int quasi_mode_count() const override { return n_modes_; }
  const char* name() const override { return "abstract"; }

  std::vector<Component> decompose(const OperatorSymbol& symbol) const override;
  Complex quasi_bracket(int a, int b) const override;

  // Declares <A_a A_b> = value (0-based modes, ordered pair).
  void set_contraction(int a, int b, Complex value);
  void set_frequency(int a, double w);
  double quasi_frequency(int a) const override;

 private:
  Statistics statistics_;
  int n_modes_;
  std::map<std::pair<int, int>, Complex> table_;
  std::vector<double> frequencies_;
};

// Filled Fermi sea |F> of independent fermions: modes 0..N-1 occupied.
// Quasiparticles are particle/hole operators (holes below the
// Fermi level, particles above); field operators relate to the diagonal basis
// through the overlap matrix U(i,a) = <i|a>.
class FermiSeaModel : public Model {
 public:
  // Identity overlaps; frequencies default to 1, 2, ..., M.
  FermiSeaModel(int n_modes, int n_filled);
  FermiSeaModel(int n_modes, int n_filled, Eigen::MatrixXcd overlaps,
                std::vector<double> frequencies);

  Statistics statistics() const override { return Statistics::Fermi; }
  int field_mode_count() const override { return n_modes_; }
  int quasi_mode_count() const override { return n_modes_; }
  const char* name() const override { return "fermisea"; }
  int n_filled() const { return n_filled_; }
  const Eigen::MatrixXcd& overlaps() const { return overlaps_; }

  std::vector<Component> decompose(const OperatorSymbol& symbol) const override;
  double quasi_frequency(int a) const override;
  std::vector<ModeOpTerm> quasi_mode_ops(const OperatorSymbol& quasi) const override;

  // Closed-form field contraction, independent of the decompose route:
  //   <psi_i psi_j+> = sum_{a>N} <i|a><j|a>*      <psi_i+ psi_j> = sum_{a<=N} <i|a>* <j|a>
  //   <psi psi> = <psi+ psi+> = 0.
  Complex field_pair_value(int i, bool dagger_i, int j, bool dagger_j) const;

 private:
  int n_modes_;
  int n_filled_;
  Eigen::MatrixXcd overlaps_;
  std::vector<double> frequencies_;
};

// BCS ground state, one Cooper-pair channel per momentum label k. Field modes
// flatten spin-momentum labels as (k,up) -> 2k and (-k,down) -> 2k+1; quasi
// modes 2k / 2k+1 are the Bogoliubov-Valatin operators alpha_k / beta_{-k}.
// Anomalous contractions <a a> and <a+ a+> are nonzero for u,v != 0.
class BcsModel : public Model {
 public:
  struct Pair {
    Complex u{1.0, 0.0};
    Complex v{0.0, 0.0};
    double energy = 0.0;  // quasiparticle energy of the k channel
  };

  // Throws BadStateSpec unless every pair satisfies |u|^2 + |v|^2 = 1.
  explicit BcsModel(std::vector<Pair> pairs);

  Statistics statistics() const override { return Statistics::Fermi; }
  int field_mode_count() const override { return 2 * static_cast<int>(pairs_.size()); }
  int quasi_mode_count() const override { return 2 * static_cast<int>(pairs_.size()); }
  const char* name() const override { return "bcs"; }
  const std::vector<Pair>& pairs() const { return pairs_; }

  std::vector<Component> decompose(const OperatorSymbol& symbol) const override;
  double quasi_frequency(int a) const override;
  std::vector<ModeOpTerm> quasi_mode_ops(const OperatorSymbol& quasi) const override;
  bool has_anomalous() const override { return true; }

 private:
  const Pair& pair_of(int mode, const char* what) const;
  std::vector<Pair> pairs_;
};

// Bose-Einstein condensate with N = density * volume particles in the
// condensate orbital. Field operators split into a c-number condensate piece
// <i|1> sqrt(N) and an excitation operator phi_i that annihilates |BEC>;
// excitations are in vacuum at T=0 so <phi phi+> is the projector onto the
// non-condensate subspace. density = 0 reduces to free bosons in vacuum.
class BecModel : public Model {
 public:
  // Condensate orbital = mode 0 of the diagonal basis.
  BecModel(int n_modes, double density, double volume);
  BecModel(int n_modes, double density, double volume, Eigen::VectorXcd condensate_overlap,
           std::vector<double> frequencies);

  Statistics statistics() const override { return Statistics::Bose; }
  int field_mode_count() const override { return n_modes_; }
  int quasi_mode_count() const override { return n_modes_; }
  const char* name() const override { return "bec"; }
  double density() const { return density_; }
  double volume() const { return volume_; }
  long particle_count() const;  // N = density * volume, rounded

  std::vector<Component> decompose(const OperatorSymbol& symbol) const override;
  double quasi_frequency(int a) const override;
  std::vector<ModeOpTerm> quasi_mode_ops(const OperatorSymbol& quasi) const override;
  std::vector<ModeOpTerm> mode_op_expansion(const OperatorSymbol& symbol) const override;
  bool has_condensate() const override { return density_ > 0.0; }

  // Condensate c-number of a field symbol and its excitation remainder.
  struct Split {
    Complex condensate;
    std::vector<Component> excitation;
  };
  Split split(const OperatorSymbol& symbol) const;

 private:
  int n_modes_;
  double density_;
  double volume_;
  // Unitary completion: column 0 = condensate orbital, columns 1.. span the
  // excitation subspace. basis_(i, a) = <i|a>.
  Eigen::MatrixXcd basis_;
  std::vector<double> frequencies_;
};

}  // namespace wick
