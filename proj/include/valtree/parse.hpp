#pragma once

#include "valtree/cuts.hpp"
#include "valtree/puiseux.hpp"
#include "valtree/qpoly.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace valtree {

/// Sum of `c*t^(p/q)` terms, optional `O(t^(p/q))`; coefficients may use zeta(n,k).
PuiseuxElt parse_puiseux(std::string_view text);
/// Polynomial in x whose coefficients are Puiseux expressions.
Poly parse_poly(std::string_view text);
/// Polynomial over ℚ in the given variable.
QPoly parse_qpoly(std::string_view text, char var = 'y');
/// `p/q`, `p/q-`, `p/q+`, `-inf`, `inf-`, `inf`, `real(<poly in y>, lo, hi)`.
QuasiCut parse_radius(std::string_view text);

/// Splits `name(a, b, ...)` into name and top-level arguments; offsets are kept
/// so errors can point into the original text.
struct CallSyntax {
  std::string name;
  std::vector<std::string> args;
  std::vector<std::size_t> offsets;
};
CallSyntax parse_call(std::string_view text);

}  // namespace valtree
