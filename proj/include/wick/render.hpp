#pragma once

#include <string>

#include "wick/parse.hpp"
#include "wick/terms.hpp"

namespace wick {

// Fixed 17-significant-digit formatting, deterministic across runs.
std::string format_double(double x);
std::string format_complex(const Complex& z);

// Bracket-notation text rendering, one term per line:
//   + N[A(1) A(2) A(3)]
//   - <1 3> A(2)
// Contraction brackets print 1-based positions; T-contractions print as
// T<i j>. `source` supplies the original atoms so factors echo the input
// spelling; it may be empty.
std::string render_text(const Expansion& expansion, const std::vector<Atom>& source,
                        const Model& model, bool time_ordered);

// Structured rendering:
// {"schema":1, "statistics":.., "length":.., "terms":[{"coefficient":{"re","im"},
//  "contractions":[[i,j],..], "normal":[atom,..]}, ..]}
// Atom objects carry name/dagger/mode and optional spin/time. Deterministic:
// identical invocations produce byte-identical output.
std::string render_json(const Expansion& expansion, const std::vector<Atom>& source,
                        const Model& model, bool time_ordered);

std::string render_atom_text(const Atom& atom);

}  // namespace wick
