#ifndef RIGIDCURVES_SRC_INTPOLY_HPP
#define RIGIDCURVES_SRC_INTPOLY_HPP

// Internal integer-polynomial kernels shared by poly.cpp and factor.cpp.
// Dense, lowest degree first, no trailing zeros.

#include <utility>
#include <vector>

#include "rigidcurves/poly.hpp"
#include "rigidcurves/rat.hpp"

namespace rigidcurves::detail {

using ZPoly = std::vector<Int>;

inline void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zadd(const ZPoly& a, const ZPoly& b);
ZPoly zsub(const ZPoly& a, const ZPoly& b);
ZPoly zscale(const Int& c, const ZPoly& a);
Int zcontent(const ZPoly& p);             // gcd of coefficients, >= 0
ZPoly zprimitive(const ZPoly& p);         // content and leading sign stripped
ZPoly zderivative(const ZPoly& p);
Int zeval(const ZPoly& p, const Int& x);

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
ZPoly zprem(const ZPoly& a, const ZPoly& b);

// gcd via primitive pseudo-remainder sequence; primitive, positive leading coeff
ZPoly zgcd(ZPoly a, ZPoly b);

// resultant via the subresultant sequence
Int zresultant(ZPoly a, ZPoly b);

// exact quotient (throws if division is not exact)
ZPoly zdivexact(const ZPoly& a, const ZPoly& b);

// conversions: clear denominators of p (returns integer poly and the common
// denominator d with d*p integral)
std::pair<ZPoly, Int> to_zpoly(const UniPoly& p);
UniPoly from_zpoly(const ZPoly& p);

Int max_abs_coeff(const ZPoly& p);

} // namespace rigidcurves::detail

#endif
