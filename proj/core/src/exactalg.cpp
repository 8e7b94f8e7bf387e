#include "rigidcurves/exactalg.hpp"

#include "rigidcurves/budget.hpp"
#include "rigidcurves/errors.hpp"

namespace rigidcurves {

const Budget& budget() {
    static const Budget b = Budget::from_env();
    return b;
}

SquarefreeProfile squarefree_profile(const UniPoly& p) {
    if (p.zero()) throw ZeroInput("squarefree_profile: zero polynomial");
    SquarefreeProfile out;
    out.squarefree = squarefree_part(p);
    for (const auto& [f, mult] : squarefree_decomposition(p))
        if (mult >= 2) out.profile.emplace_back(f.degree(), mult);
    return out;
}

} // namespace rigidcurves
