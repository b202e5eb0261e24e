#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "wick/operators.hpp"
#include "wick/statistics.hpp"
#include "wick/terms.hpp"

namespace wick {

// One piece of a decomposed symbol: either a c-number (condensate) piece or a
// weighted pure-class quasiparticle operator.
struct Component {
  Complex coeff{1.0, 0.0};
  bool is_scalar = false;
  OperatorSymbol op;  // valid when !is_scalar; base is Quasi*
  // Free-evolution bookkeeping for scalar pieces: value(t) = coeff * e^{i dir w t}.
  double scalar_frequency = 0.0;
  int scalar_direction = 0;  // -1 annihilation-like, +1 creation-like
};

// Ladder operator in the model's diagonal one-particle basis, used by the
// Fock oracle to materialize symbols exactly.
struct ModeOpTerm {
  Complex coeff{1.0, 0.0};
  int mode = 0;
  bool dagger = false;
};

// A reference state's dictionary: the +/- decomposition of every symbol, the
// mixed brackets [a-, b+] of the quasiparticle basis, and the free-evolution
// frequencies. All values are c-numbers; this is the premise that makes the
// theorem an operator identity.
class Model {
 public:
  virtual ~Model() = default;

  virtual Statistics statistics() const = 0;
  virtual int field_mode_count() const = 0;
  virtual int quasi_mode_count() const = 0;
  virtual const char* name() const = 0;

  // Splits a symbol into scalar and pure-class pieces. Pure symbols pass
  // through unchanged (after a mode range check).
  virtual std::vector<Component> decompose(const OperatorSymbol& symbol) const = 0;

  // Mixed bracket [alpha_a^-, alpha_b^+]_-+ . Canonical bases give delta_ab.
  virtual Complex quasi_bracket(int a, int b) const;

  // Phase frequency of quasiparticle a: alpha_a^-(t) = e^{-i w t} alpha_a^-,
  // alpha_a^+(t) = e^{+i w t} alpha_a^+.
  virtual double quasi_frequency(int a) const;

  // Exact expansion of a quasiparticle symbol over diagonal-basis ladder
  // operators, for oracle materialization. Not every model is representable.
  virtual std::vector<ModeOpTerm> quasi_mode_ops(const OperatorSymbol& quasi) const;

  // Exact expansion of any symbol over diagonal-basis ladder operators.
  // Unlike decompose(), condensate pieces are kept as true operators here.
  virtual std::vector<ModeOpTerm> mode_op_expansion(const OperatorSymbol& symbol) const;

  // Static contraction <gs| a b |gs>. Equals the mixed bracket of a's - part
  // with b's + part, plus the product of condensate scalars when present.
  Complex contraction(const OperatorSymbol& a, const OperatorSymbol& b) const;

  // Mixed bracket part alone, condensate scalars excluded. Coincides with
  // contraction() for every scalar-free model.
  Complex bracket_contraction(const OperatorSymbol& a, const OperatorSymbol& b) const;

  // <gs| a(t_a) b(t_b) |gs> under free evolution; requires time labels.
  Complex evolved_contraction(const OperatorSymbol& a, const OperatorSymbol& b) const;
  Complex evolved_bracket(const OperatorSymbol& a, const OperatorSymbol& b) const;

  // Sum of a symbol's c-number pieces, statically or phase-evolved at the
  // symbol's time label.
  Complex condensate_scalar(const OperatorSymbol& symbol) const;
  Complex evolved_condensate_scalar(const OperatorSymbol& symbol) const;

  // Whether <psi psi> / <psi+ psi+> contractions can be nonzero (BCS).
  virtual bool has_anomalous() const { return false; }
  // Whether symbols carry condensate c-number pieces (BEC with density > 0).
  virtual bool has_condensate() const { return false; }

  // Structural test for the expansion engine: does a have a - piece and b a
  // + piece? Condensate scalars are handled separately and do not count.
  bool could_contract(const OperatorSymbol& a, const OperatorSymbol& b) const;
};

using ModelPtr = std::shared_ptr<const Model>;

}  // namespace wick
