#pragma once

namespace wick {

enum class Statistics { Bose, Fermi };

// Sign acquired when two operators are swapped: +1 for bosons, -1 for fermions.
constexpr int swap_sign(Statistics s) { return s == Statistics::Fermi ? -1 : +1; }

constexpr const char* to_string(Statistics s) {
  return s == Statistics::Fermi ? "fermi" : "bose";
}

}  // namespace wick
