#ifndef RIGIDCURVES_EXACTALG_HPP
#define RIGIDCURVES_EXACTALG_HPP

// Exact scalar/polynomial algebra facade. The substrate lives in:
//   rat.hpp      arbitrary-precision rationals
//   poly.hpp     univariate polynomials, gcd, resultants, squarefree, integrals
//   factor.hpp   irreducible factorization over Q
//   extfield.hpp small algebraic extensions
//   trivar.hpp   ternary forms and variable elimination

#include <utility>
#include <vector>

#include "rigidcurves/extfield.hpp"
#include "rigidcurves/factor.hpp"
#include "rigidcurves/poly.hpp"
#include "rigidcurves/trivar.hpp"

namespace rigidcurves {

struct SquarefreeProfile {
    UniPoly squarefree;                         // p / gcd(p, p'), monic
    std::vector<std::pair<int, int>> profile;   // (factor degree, multiplicity), mult >= 2
};

SquarefreeProfile squarefree_profile(const UniPoly& p);

} // namespace rigidcurves

#endif
