#include "wick/fock.hpp"

#include <cmath>
#include <map>

#include "wick/errors.hpp"
#include "wick/models.hpp"
#include "wick/wick.hpp"

namespace wick {

FockSpace::FockSpace(Statistics statistics, int n_modes, int cutoff)
    : statistics_(statistics), n_modes_(n_modes), cutoff_(cutoff) {
  if (n_modes <= 0) throw BadStateSpec("fock: mode count must be positive");
  if (statistics == Statistics::Fermi && cutoff != 1) {
    throw BadStateSpec("fock: fermionic spaces have cutoff 1");
  }
  if (cutoff < 1) throw BadStateSpec("fock: cutoff must be >= 1");
  const long base = cutoff + 1;
  long dim = 1;
  for (int m = 0; m < n_modes; ++m) {
    dim *= base;
    if (dim > 4096) throw SpaceTooLarge("fock: dimension exceeds 4096");
  }
  dimension_ = dim;
  stride_.assign(n_modes, 1);
  for (int m = n_modes - 2; m >= 0; --m) stride_[m] = stride_[m + 1] * base;
}

int FockSpace::occupation(long index, int mode) const {
  return static_cast<int>((index / stride_[mode]) % (cutoff_ + 1));
}

long FockSpace::total_occupation(long index) const {
  long total = 0;
  for (int m = 0; m < n_modes_; ++m) total += occupation(index, m);
  return total;
}

std::vector<ModeOperators> build_mode_operators(const FockSpace& space) {
  const long dim = space.dimension();
  std::vector<ModeOperators> ops(space.n_modes());
  for (int a = 0; a < space.n_modes(); ++a) {
    long stride = 1;
    for (int m = space.n_modes() - 1; m > a; --m) stride *= (space.cutoff() + 1);
    Eigen::MatrixXcd ann = Eigen::MatrixXcd::Zero(dim, dim);
    for (long idx = 0; idx < dim; ++idx) {
      const int occ = space.occupation(idx, a);
      if (occ == 0) continue;
      // removing one particle from mode a lowers the index by its stride
      const long target = idx - stride;
      double amp = 1.0;
      if (space.statistics() == Statistics::Fermi) {
        int preceding = 0;
        for (int b = 0; b < a; ++b) preceding += space.occupation(idx, b);
        amp = (preceding % 2 == 0) ? 1.0 : -1.0;
      } else {
        amp = std::sqrt(static_cast<double>(occ));
      }
      ann(target, idx) = amp;
    }
    ops[a].annihilate = ann;
    ops[a].create = ann.adjoint();
  }
  return ops;
}

Eigen::VectorXcd build_state(const FockSpace& space, const StateSpec& spec) {
  const long dim = space.dimension();
  Eigen::VectorXcd state = Eigen::VectorXcd::Zero(dim);
  state(0) = Complex{1.0, 0.0};  // index 0 is the zero-occupation tuple

  switch (spec.kind) {
    case StateSpec::Kind::Vacuum:
      return state;
    case StateSpec::Kind::FermiSea: {
      if (space.statistics() != Statistics::Fermi) {
        throw BadStateSpec("build_state: fermi_sea needs a fermionic space");
      }
      if (spec.filled < 0 || spec.filled > space.n_modes()) {
        throw BadStateSpec("build_state: filled count outside 0..M");
      }
      const auto ops = build_mode_operators(space);
      for (int a = spec.filled - 1; a >= 0; --a) state = ops[a].create * state;
      return state;
    }
    case StateSpec::Kind::Bcs: {
      if (space.statistics() != Statistics::Fermi) {
        throw BadStateSpec("build_state: bcs needs a fermionic space");
      }
      if (2 * static_cast<int>(spec.pairs.size()) != space.n_modes()) {
        throw BadStateSpec("build_state: bcs needs 2 modes per pair channel");
      }
      const auto ops = build_mode_operators(space);
      for (std::size_t p = 0; p < spec.pairs.size(); ++p) {
        const auto& [u, v] = spec.pairs[p];
        state = u * state + v * (ops[2 * p].create * (ops[2 * p + 1].create * state));
      }
      const double norm = state.norm();
      if (std::abs(norm - 1.0) > 1e-9) {
        throw BadStateSpec("build_state: bcs amplitudes are not normalized");
      }
      return state;
    }
    case StateSpec::Kind::Bec: {
      if (space.statistics() != Statistics::Bose) {
        throw BadStateSpec("build_state: bec needs a bosonic space");
      }
      if (spec.particles < 0 || spec.particles > space.cutoff()) {
        throw BadStateSpec("build_state: condensate occupation exceeds the cutoff");
      }
      const auto ops = build_mode_operators(space);
      for (long k = 0; k < spec.particles; ++k) state = ops[0].create * state;
      state.normalize();
      return state;
    }
  }
  throw BadStateSpec("build_state: unknown state kind");
}

StateSpec state_spec_for(const Model& model) {
  if (const auto* fs = dynamic_cast<const FermiSeaModel*>(&model)) {
    return StateSpec::fermi_sea(fs->n_filled());
  }
  if (const auto* bcs = dynamic_cast<const BcsModel*>(&model)) {
    std::vector<std::pair<Complex, Complex>> uv;
    for (const auto& p : bcs->pairs()) uv.emplace_back(p.u, p.v);
    return StateSpec::bcs(std::move(uv));
  }
  if (const auto* bec = dynamic_cast<const BecModel*>(&model)) {
    return StateSpec::bec(bec->particle_count());
  }
  throw BadStateSpec(std::string(model.name()) + ": model has no Fock-space reference state");
}

Eigen::MatrixXcd symbol_matrix(const FockSpace& space, const std::vector<ModeOperators>& ops,
                               const Model& model, const OperatorSymbol& symbol) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(space.dimension(), space.dimension());
  for (const auto& term : model.mode_op_expansion(symbol)) {
    if (term.mode < 0 || term.mode >= space.n_modes()) {
      throw UnknownSymbol("symbol_matrix: mode outside the space");
    }
    m += term.coeff * (term.dagger ? ops[term.mode].create : ops[term.mode].annihilate);
  }
  return m;
}

namespace {

class QuasiMatrixCache {
 public:
  QuasiMatrixCache(const FockSpace& space, const std::vector<ModeOperators>& ops,
                   const Model& model)
      : space_(space), ops_(ops), model_(model) {}

  const Eigen::MatrixXcd& get(const OperatorSymbol& quasi) {
    const auto key = std::make_pair(static_cast<int>(quasi.base), quasi.mode);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, symbol_matrix(space_, ops_, model_, quasi)).first;
    }
    return it->second;
  }

 private:
  const FockSpace& space_;
  const std::vector<ModeOperators>& ops_;
  const Model& model_;
  std::map<std::pair<int, int>, Eigen::MatrixXcd> cache_;
};

Eigen::MatrixXcd normal_ordered_matrix_cached(const FockSpace& space, const Model& model,
                                              const std::vector<PositionedOp>& factors,
                                              QuasiMatrixCache& cache) {
  const long dim = space.dimension();
  if (factors.empty()) return Eigen::MatrixXcd::Identity(dim, dim);

  std::vector<std::vector<Component>> choices;
  choices.reserve(factors.size());
  for (const auto& f : factors) {
    auto comps = model.decompose(f.op);
    for (const auto& c : comps) {
      if (c.is_scalar) {
        throw UnknownSymbol("normal_ordered_matrix: condensate pieces are not supported here");
      }
    }
    // A factor with no pieces is the zero operator under the dictionary.
    if (comps.empty()) return Eigen::MatrixXcd::Zero(dim, dim);
    choices.push_back(std::move(comps));
  }

  Eigen::MatrixXcd result = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<std::size_t> pick(factors.size(), 0);
  while (true) {
    SignedTerm combo;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const Component& c = choices[i][pick[i]];
      combo.coefficient *= c.coeff;
      combo.normal_factors.push_back({c.op, factors[i].position});
    }
    canonicalize_term(combo, space.statistics());
    Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& f : combo.normal_factors) prod = prod * cache.get(f.op);
    result += combo.coefficient * prod;

    std::size_t level = 0;
    while (level < pick.size() && ++pick[level] == choices[level].size()) {
      pick[level] = 0;
      ++level;
    }
    if (level == pick.size()) break;
  }
  return result;
}

}  // namespace

Eigen::MatrixXcd normal_ordered_matrix(const FockSpace& space,
                                       const std::vector<ModeOperators>& ops, const Model& model,
                                       const std::vector<PositionedOp>& factors) {
  QuasiMatrixCache cache(space, ops, model);
  return normal_ordered_matrix_cached(space, model, factors, cache);
}

double check_operator_identity(const Product& product, const Expansion& expansion,
                               const FockSpace& space, const Model& model,
                               const StateSpec& state_spec) {
  if (expansion.evaluated) {
    throw Error("check_operator_identity: expansion must keep contractions symbolic");
  }
  const long dim = space.dimension();
  const int n = static_cast<int>(product.size());
  const auto ops = build_mode_operators(space);
  const auto state = build_state(space, state_spec);

  std::vector<Eigen::MatrixXcd> factor_matrices;
  factor_matrices.reserve(product.size());
  for (const auto& op : product) factor_matrices.push_back(symbol_matrix(space, ops, model, op));

  Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& m : factor_matrices) lhs = lhs * m;

  // Contraction scalars straight from the state: <state| a_i a_j |state>.
  std::map<ContractionPair, Complex> pair_values;
  auto pair_value = [&](const ContractionPair& pair) {
    auto it = pair_values.find(pair);
    if (it == pair_values.end()) {
      const Complex v =
          state.dot(factor_matrices[pair.first] * (factor_matrices[pair.second] * state));
      it = pair_values.emplace(pair, v).first;
    }
    return it->second;
  };

  QuasiMatrixCache cache(space, ops, model);
  Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : expansion.terms) {
    Complex coeff = term.coefficient;
    for (const auto& pair : term.contractions) coeff *= pair_value(pair);
    if (coeff == Complex{0.0, 0.0}) continue;
    rhs += coeff * normal_ordered_matrix_cached(space, model, term.normal_factors, cache);
  }

  if (space.statistics() == Statistics::Fermi) {
    return (lhs - rhs).cwiseAbs().maxCoeff();
  }

  // Bosonic truncation-safe block: total occupation <= cutoff - n on both
  // sides, which a product of n operators cannot couple to the boundary.
  const long max_occ = space.cutoff() - n;
  std::vector<long> block;
  for (long idx = 0; idx < dim; ++idx) {
    if (space.total_occupation(idx) <= max_occ) block.push_back(idx);
  }
  if (block.empty()) {
    throw BadStateSpec("check_operator_identity: cutoff too small for this product length");
  }
  double deviation = 0.0;
  for (long r : block) {
    for (long c : block) {
      deviation = std::max(deviation, std::abs(lhs(r, c) - rhs(r, c)));
    }
  }
  return deviation;
}

double check_wick_identity(const Product& product, const FockSpace& space, const Model& model) {
  const Expansion expansion = wick_expand(product, model, {.evaluate = false});
  return check_operator_identity(product, expansion, space, model, state_spec_for(model));
}

}  // namespace wick
