#pragma once

#include "valtree/puiseux.hpp"

#include <cstddef>
#include <vector>

namespace valtree {

/// Roots forming one orbit under Gal(K̄/K^h): coefficient automorphisms combined
/// with t^{1/e} ↦ ζ_e t^{1/e}. Stands in for a monic irreducible factor over K^h.
struct RootGroup {
  std::vector<PuiseuxElt> roots;
  int e = 1;  // ramification index of the expansions
  std::size_t size() const { return roots.size(); }
};

/// deg f truncated root expansions: exact where the expansion terminates,
/// otherwise s + O(t^order). f needs exact coefficients.
std::vector<PuiseuxElt> puiseux_root_list(const Poly& f, const Rational& order);

/// The same roots partitioned into conjugacy groups. Two roots whose truncations
/// coincide make the grouping ambiguous: IndeterminateValuation.
std::vector<RootGroup> puiseux_roots(const Poly& f, const Rational& order);

/// Nonzero roots with multiplicity of a polynomial with cyclotomic coefficients
/// (low degree first), for the cases the model supports:
/// rational roots and scaled roots of unity ρ·ζ. Throws UnsupportedCoefficientField otherwise.
std::vector<std::pair<Cyclo, int>> cyclo_poly_roots(const std::vector<Cyclo>& phi);

}  // namespace valtree
