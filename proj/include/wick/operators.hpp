#pragma once

#include <compare>
#include <optional>
#include <vector>

namespace wick {

// The four operator flavours. Field operators (psi, psi-dagger) decompose into
// both quasiparticle classes; quasiparticle operators carry a definite class.
enum class OpBase { FieldAnnihilate, FieldCreate, QuasiAnnihilate, QuasiCreate };

// One creation/annihilation factor. `mode` is a 0-based index into the active
// model's mode table (field modes for Field*, quasiparticle modes for Quasi*).
// `time` is absent for static problems.
struct OperatorSymbol {
  OpBase base = OpBase::FieldAnnihilate;
  int mode = 0;
  std::optional<double> time;

  bool is_field() const {
    return base == OpBase::FieldAnnihilate || base == OpBase::FieldCreate;
  }
  bool is_pure() const { return !is_field(); }
  bool is_plus_class() const { return base == OpBase::QuasiCreate; }
  bool is_minus_class() const { return base == OpBase::QuasiAnnihilate; }
  // Creation-like operators go left at equal times under the T convention.
  bool is_creation_like() const {
    return base == OpBase::FieldCreate || base == OpBase::QuasiCreate;
  }

  friend auto operator<=>(const OperatorSymbol&, const OperatorSymbol&) = default;
};

inline OperatorSymbol field_annihilate(int mode, std::optional<double> time = {}) {
  return {OpBase::FieldAnnihilate, mode, time};
}
inline OperatorSymbol field_create(int mode, std::optional<double> time = {}) {
  return {OpBase::FieldCreate, mode, time};
}
inline OperatorSymbol quasi_annihilate(int mode, std::optional<double> time = {}) {
  return {OpBase::QuasiAnnihilate, mode, time};
}
inline OperatorSymbol quasi_create(int mode, std::optional<double> time = {}) {
  return {OpBase::QuasiCreate, mode, time};
}

using Product = std::vector<OperatorSymbol>;

}  // namespace wick
