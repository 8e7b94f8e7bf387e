#ifndef RIGIDCURVES_FACTOR_HPP
#define RIGIDCURVES_FACTOR_HPP

#include <utility>
#include <vector>

#include "rigidcurves/poly.hpp"

namespace rigidcurves {

// Irreducible factorization over Q (Zassenhaus: squarefree split, modular
// factorization, Hensel lifting, subset recombination). Factors are monic
// irreducible; multiplicities from the squarefree decomposition. The
// leading coefficient is dropped (factors multiply to the monic input).
std::vector<std::pair<UniPoly, int>> factor_rational(const UniPoly& p);

bool is_irreducible(const UniPoly& p);

} // namespace rigidcurves

#endif
