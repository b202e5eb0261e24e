#include "wick/models.hpp"

#include <cmath>
#include <cstdio>

#include "wick/errors.hpp"

namespace wick {

namespace {

void check_field_mode(int mode, int count, const char* model) {
  if (mode < 0 || mode >= count) {
    throw UnknownMode(std::string(model) + ": field mode " + std::to_string(mode + 1) +
                      " outside the model's table");
  }
}

void check_quasi_mode(int mode, int count, const char* model) {
  if (mode < 0 || mode >= count) {
    throw UnknownMode(std::string(model) + ": quasiparticle mode " + std::to_string(mode + 1) +
                      " outside the model's table");
  }
}

std::vector<Component> passthrough(const OperatorSymbol& symbol) {
  Component c;
  c.coeff = Complex{1.0, 0.0};
  c.op = symbol;
  return {c};
}

}  // namespace

// ---------------------------------------------------------------------------
// AbstractModel

AbstractModel::AbstractModel(Statistics statistics, int n_modes)
    : statistics_(statistics), n_modes_(n_modes), frequencies_(n_modes, 0.0) {
  if (n_modes <= 0) throw BadStateSpec("abstract: mode count must be positive");
}

std::vector<Component> AbstractModel::decompose(const OperatorSymbol& symbol) const {
  if (symbol.is_pure()) {
    check_quasi_mode(symbol.mode, n_modes_, "abstract");
    return passthrough(symbol);
  }
  check_field_mode(symbol.mode, n_modes_, "abstract");
  Component plus, minus;
  plus.op = quasi_create(symbol.mode, symbol.time);
  minus.op = quasi_annihilate(symbol.mode, symbol.time);
  return {plus, minus};
}

Complex AbstractModel::quasi_bracket(int a, int b) const {
  auto it = table_.find({a, b});
  return it == table_.end() ? Complex{0.0, 0.0} : it->second;
}

void AbstractModel::set_contraction(int a, int b, Complex value) {
  check_field_mode(a, n_modes_, "abstract");
  check_field_mode(b, n_modes_, "abstract");
  table_[{a, b}] = value;
}

void AbstractModel::set_frequency(int a, double w) {
  check_field_mode(a, n_modes_, "abstract");
  frequencies_[a] = w;
}

double AbstractModel::quasi_frequency(int a) const {
  check_quasi_mode(a, n_modes_, "abstract");
  return frequencies_[a];
}

// ---------------------------------------------------------------------------
// FermiSeaModel

FermiSeaModel::FermiSeaModel(int n_modes, int n_filled)
    : FermiSeaModel(n_modes, n_filled, Eigen::MatrixXcd::Identity(n_modes, n_modes), {}) {}

FermiSeaModel::FermiSeaModel(int n_modes, int n_filled, Eigen::MatrixXcd overlaps,
                             std::vector<double> frequencies)
    : n_modes_(n_modes), n_filled_(n_filled), overlaps_(std::move(overlaps)),
      frequencies_(std::move(frequencies)) {
  if (n_modes <= 0) throw BadStateSpec("fermisea: mode count must be positive");
  if (n_filled < 0 || n_filled > n_modes) {
    throw BadStateSpec("fermisea: filled count outside 0..M");
  }
  if (overlaps_.rows() != n_modes || overlaps_.cols() != n_modes) {
    throw BadStateSpec("fermisea: overlap matrix must be M x M");
  }
  if (frequencies_.empty()) {
    for (int a = 0; a < n_modes; ++a) frequencies_.push_back(a + 1.0);
  }
  if (static_cast<int>(frequencies_.size()) != n_modes) {
    throw BadStateSpec("fermisea: frequency list must have M entries");
  }
  const double defect =
      (overlaps_.adjoint() * overlaps_ - Eigen::MatrixXcd::Identity(n_modes, n_modes))
          .cwiseAbs()
          .maxCoeff();
  if (defect > 1e-9) {
    std::fprintf(stderr, "warning: fermisea overlap matrix is not unitary (defect %.2e)\n",
                 defect);
  }
  for (int a = 1; a < n_modes; ++a) {
    if (frequencies_[a] < frequencies_[a - 1]) {
      std::fprintf(stderr, "warning: fermisea frequencies are not nondecreasing\n");
      break;
    }
  }
}

std::vector<Component> FermiSeaModel::decompose(const OperatorSymbol& symbol) const {
  if (symbol.is_pure()) {
    check_quasi_mode(symbol.mode, n_modes_, "fermisea");
    return passthrough(symbol);
  }
  check_field_mode(symbol.mode, n_modes_, "fermisea");
  const bool dagger = symbol.base == OpBase::FieldCreate;
  std::vector<Component> out;
  for (int a = 0; a < n_modes_; ++a) {
    const Complex w = dagger ? std::conj(overlaps_(symbol.mode, a)) : overlaps_(symbol.mode, a);
    if (w == Complex{0.0, 0.0}) continue;
    Component c;
    c.coeff = w;
    const bool filled = a < n_filled_;
    // psi picks up hole creators below the Fermi level and particle
    // annihilators above; psi-dagger the other way around.
    const bool plus = dagger ? !filled : filled;
    c.op = plus ? quasi_create(a, symbol.time) : quasi_annihilate(a, symbol.time);
    out.push_back(c);
  }
  return out;
}

double FermiSeaModel::quasi_frequency(int a) const {
  check_quasi_mode(a, n_modes_, "fermisea");
  return a < n_filled_ ? -frequencies_[a] : frequencies_[a];
}

std::vector<ModeOpTerm> FermiSeaModel::quasi_mode_ops(const OperatorSymbol& quasi) const {
  check_quasi_mode(quasi.mode, n_modes_, "fermisea");
  const bool filled = quasi.mode < n_filled_;
  const bool dagger = quasi.is_plus_class() ? !filled : filled;
  return {{Complex{1.0, 0.0}, quasi.mode, dagger}};
}

Complex FermiSeaModel::field_pair_value(int i, bool dagger_i, int j, bool dagger_j) const {
  check_field_mode(i, n_modes_, "fermisea");
  check_field_mode(j, n_modes_, "fermisea");
  Complex sum{0.0, 0.0};
  if (!dagger_i && dagger_j) {
    for (int a = n_filled_; a < n_modes_; ++a) sum += overlaps_(i, a) * std::conj(overlaps_(j, a));
  } else if (dagger_i && !dagger_j) {
    for (int a = 0; a < n_filled_; ++a) sum += std::conj(overlaps_(i, a)) * overlaps_(j, a);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// BcsModel

BcsModel::BcsModel(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw BadStateSpec("bcs: at least one pair channel required");
  for (const auto& p : pairs_) {
    const double norm = std::norm(p.u) + std::norm(p.v);
    if (std::abs(norm - 1.0) > 1e-9) {
      throw BadStateSpec("bcs: |u|^2 + |v|^2 must equal 1");
    }
  }
}

const BcsModel::Pair& BcsModel::pair_of(int mode, const char* what) const {
  const int p = mode / 2;
  if (mode < 0 || p >= static_cast<int>(pairs_.size())) {
    throw UnknownPair(std::string("bcs: ") + what + " label outside the pair list");
  }
  return pairs_[p];
}

// Bogoliubov-Valatin operators adapted to |BCS> = prod_k (u + v a+_{k up} a+_{-k down})|vac>:
//   alpha_k  = u a_{k up}   - v a+_{-k down}        alpha_k |BCS> = 0
//   beta_-k  = u a_{-k down} + v a+_{k up}          beta_-k |BCS> = 0
// Inversion:
//   a_{k up}    = u* alpha_k + v beta+_-k           a+_{k up}    = v* beta_-k + u alpha+_k
//   a_{-k down} = u* beta_-k - v alpha+_k           a+_{-k down} = -v* alpha_k + u beta+_-k
std::vector<Component> BcsModel::decompose(const OperatorSymbol& symbol) const {
  if (symbol.is_pure()) {
    pair_of(symbol.mode, "quasiparticle");
    return passthrough(symbol);
  }
  const Pair& p = pair_of(symbol.mode, "field");
  const int alpha = 2 * (symbol.mode / 2);     // quasi index of alpha_k
  const int beta = alpha + 1;                  // quasi index of beta_-k
  const bool down = symbol.mode % 2 != 0;
  const bool dagger = symbol.base == OpBase::FieldCreate;

  Component minus, plus;
  if (!dagger && !down) {  // a_{k up}
    minus = {std::conj(p.u), false, quasi_annihilate(alpha, symbol.time), 0.0, 0};
    plus = {p.v, false, quasi_create(beta, symbol.time), 0.0, 0};
  } else if (!dagger && down) {  // a_{-k down}
    minus = {std::conj(p.u), false, quasi_annihilate(beta, symbol.time), 0.0, 0};
    plus = {-p.v, false, quasi_create(alpha, symbol.time), 0.0, 0};
  } else if (dagger && !down) {  // a+_{k up}
    minus = {std::conj(p.v), false, quasi_annihilate(beta, symbol.time), 0.0, 0};
    plus = {p.u, false, quasi_create(alpha, symbol.time), 0.0, 0};
  } else {  // a+_{-k down}
    minus = {-std::conj(p.v), false, quasi_annihilate(alpha, symbol.time), 0.0, 0};
    plus = {p.u, false, quasi_create(beta, symbol.time), 0.0, 0};
  }
  std::vector<Component> out;
  if (minus.coeff != Complex{0.0, 0.0}) out.push_back(minus);
  if (plus.coeff != Complex{0.0, 0.0}) out.push_back(plus);
  return out;
}

double BcsModel::quasi_frequency(int a) const { return pair_of(a, "quasiparticle").energy; }

std::vector<ModeOpTerm> BcsModel::quasi_mode_ops(const OperatorSymbol& quasi) const {
  const Pair& p = pair_of(quasi.mode, "quasiparticle");
  const int up = 2 * (quasi.mode / 2);  // field mode of a_{k up}
  const int down = up + 1;              // field mode of a_{-k down}
  const bool is_beta = quasi.mode % 2 != 0;
  if (!is_beta) {
    if (quasi.is_minus_class()) return {{p.u, up, false}, {-p.v, down, true}};
    return {{std::conj(p.u), up, true}, {-std::conj(p.v), down, false}};
  }
  if (quasi.is_minus_class()) return {{p.u, down, false}, {p.v, up, true}};
  return {{std::conj(p.u), down, true}, {std::conj(p.v), up, false}};
}

// ---------------------------------------------------------------------------
// BecModel

BecModel::BecModel(int n_modes, double density, double volume)
    : BecModel(n_modes, density, volume, Eigen::VectorXcd::Unit(n_modes, 0), {}) {}

BecModel::BecModel(int n_modes, double density, double volume,
                   Eigen::VectorXcd condensate_overlap, std::vector<double> frequencies)
    : n_modes_(n_modes), density_(density), volume_(volume), frequencies_(std::move(frequencies)) {
  if (n_modes <= 0) throw BadStateSpec("bec: mode count must be positive");
  if (density < 0.0 || volume <= 0.0) {
    throw BadStateSpec("bec: density must be >= 0 and volume > 0");
  }
  if (condensate_overlap.size() != n_modes) {
    throw BadStateSpec("bec: condensate overlap column must have M entries");
  }
  const double norm = condensate_overlap.norm();
  if (norm < 1e-12) throw BadStateSpec("bec: condensate overlap column is zero");
  condensate_overlap /= norm;

  // Unitary completion of the condensate column via a Householder frame.
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(condensate_overlap);
  basis_ = qr.householderQ();
  const Complex phase = basis_.col(0).dot(condensate_overlap);  // modulus 1
  basis_.col(0) *= phase;

  if (frequencies_.empty()) {
    for (int a = 0; a < n_modes; ++a) frequencies_.push_back(static_cast<double>(a));
  }
  if (static_cast<int>(frequencies_.size()) != n_modes) {
    throw BadStateSpec("bec: frequency list must have M entries");
  }
}

long BecModel::particle_count() const { return std::lround(density_ * volume_); }

std::vector<Component> BecModel::decompose(const OperatorSymbol& symbol) const {
  if (symbol.is_pure()) {
    check_quasi_mode(symbol.mode, n_modes_, "bec");
    if (symbol.mode == 0 && has_condensate()) {
      throw UnknownMode("bec: the condensate orbital has no quasiparticle");
    }
    return passthrough(symbol);
  }
  check_field_mode(symbol.mode, n_modes_, "bec");
  const bool dagger = symbol.base == OpBase::FieldCreate;
  std::vector<Component> out;
  if (has_condensate()) {
    // Condensate piece <i|1> sqrt(N), a c-number in the large-volume idealization.
    const Complex overlap0 =
        dagger ? std::conj(basis_(symbol.mode, 0)) : basis_(symbol.mode, 0);
    const Complex scalar = overlap0 * std::sqrt(density_ * volume_);
    if (scalar != Complex{0.0, 0.0}) {
      Component c;
      c.coeff = scalar;
      c.is_scalar = true;
      c.scalar_frequency = frequencies_[0];
      c.scalar_direction = dagger ? +1 : -1;
      out.push_back(c);
    }
  }
  // With an empty condensate every orbital is a plain vacuum mode.
  const int first_excited = has_condensate() ? 1 : 0;
  for (int a = first_excited; a < n_modes_; ++a) {
    const Complex w = dagger ? std::conj(basis_(symbol.mode, a)) : basis_(symbol.mode, a);
    if (w == Complex{0.0, 0.0}) continue;
    Component c;
    c.coeff = w;
    c.op = dagger ? quasi_create(a, symbol.time) : quasi_annihilate(a, symbol.time);
    out.push_back(c);
  }
  return out;
}

double BecModel::quasi_frequency(int a) const {
  check_quasi_mode(a, n_modes_, "bec");
  return frequencies_[a];
}

std::vector<ModeOpTerm> BecModel::quasi_mode_ops(const OperatorSymbol& quasi) const {
  check_quasi_mode(quasi.mode, n_modes_, "bec");
  return {{Complex{1.0, 0.0}, quasi.mode, quasi.is_plus_class()}};
}

std::vector<ModeOpTerm> BecModel::mode_op_expansion(const OperatorSymbol& symbol) const {
  if (symbol.is_pure()) return quasi_mode_ops(symbol);
  check_field_mode(symbol.mode, n_modes_, "bec");
  const bool dagger = symbol.base == OpBase::FieldCreate;
  // Exact expansion: the condensate mode stays a true operator here.
  std::vector<ModeOpTerm> out;
  for (int a = 0; a < n_modes_; ++a) {
    const Complex w = dagger ? std::conj(basis_(symbol.mode, a)) : basis_(symbol.mode, a);
    if (w == Complex{0.0, 0.0}) continue;
    out.push_back({w, a, dagger});
  }
  return out;
}

BecModel::Split BecModel::split(const OperatorSymbol& symbol) const {
  Split s{Complex{0.0, 0.0}, {}};
  for (const auto& c : decompose(symbol)) {
    if (c.is_scalar) {
      s.condensate += c.coeff;
    } else {
      s.excitation.push_back(c);
    }
  }
  return s;
}

}  // namespace wick
