#ifndef RIGIDCURVES_POINTS_HPP
#define RIGIDCURVES_POINTS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "rigidcurves/extfield.hpp"
#include "rigidcurves/trivar.hpp"

namespace rigidcurves {

// A Galois orbit of projective points, represented over Q[y]/(minpoly) with
// coordinates normalized so the first nonzero coordinate is 1. Orbits are
// stored in a canonical form (separating functional + coordinate polynomials),
// so equality of orbits is equality of data.
struct AlgPoint {
    FieldPtr field;  // null for rational points
    std::array<ExtScalar, 3> coords;

    int orbit_size() const { return field ? field->degree() : 1; }
    bool rational() const { return !field || field->degree() == 1; }
    std::string key() const;  // canonical serialization, usable for dedup/sort
    std::string str() const;

    friend bool operator==(const AlgPoint& a, const AlgPoint& b) { return a.key() == b.key(); }
};

// Builds the canonical representation from coordinates over a common field.
AlgPoint make_point(const std::array<ExtScalar, 3>& coords);
AlgPoint make_rational_point(const Rat& x, const Rat& y, const Rat& z);

// Roots of g lying in its coefficient field, with multiplicities, plus the
// degree left unexplained (roots in proper extensions).
struct FieldRoots {
    std::vector<std::pair<ExtScalar, int>> roots;
    int leftover_degree = 0;
};
FieldRoots ext_roots_in_field(const ExtPoly& g);

// gcd over the coefficient field
ExtPoly ext_gcd(const ExtPoly& a, const ExtPoly& b);

// Resultant of two bivariate polynomials with respect to x, by evaluation
// and interpolation in y. Requires deg_x to be stable under evaluation
// (constant leading x-coefficients); callers arrange this by shearing.
UniPoly resultant_bivariate_x(const BivQ& a, const BivQ& b);

// All singular points of the (reduced) form F.
std::vector<AlgPoint> singular_points(const Trivar& F);

// All intersection points of two forms without common components; throws
// InfiniteIntersection otherwise.
std::vector<AlgPoint> intersection_points(const Trivar& F, const Trivar& G);

// Is the point on the curve?
bool lies_on(const AlgPoint& p, const Trivar& F);

} // namespace rigidcurves

#endif
