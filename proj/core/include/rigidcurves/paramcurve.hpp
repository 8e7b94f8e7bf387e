#ifndef RIGIDCURVES_PARAMCURVE_HPP
#define RIGIDCURVES_PARAMCURVE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rigidcurves/linalg.hpp"
#include "rigidcurves/points.hpp"
#include "rigidcurves/poly.hpp"
#include "rigidcurves/trivar.hpp"

namespace rigidcurves {

// Rational map P^1 -> P^2 by three coprime polynomials. The point at t =
// infinity is reached through coefficient reversal.
class ParamCurve {
  public:
    ParamCurve(UniPoly z1, UniPoly z2, UniPoly z3, std::string label = "");

    const UniPoly& coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
    int degree() const { return degree_; }
    const std::string& label() const { return label_; }
    bool is_line() const { return degree_ == 1; }

    ParamCurve reversed() const;          // parameter t -> 1/t
    ParamCurve transformed(const Mat3& h) const;

    friend bool operator==(const ParamCurve& a, const ParamCurve& b) {
        return a.coords_ == b.coords_;
    }

  private:
    std::array<UniPoly, 3> coords_;
    int degree_;
    std::string label_;
};

// t -> (a t + b) / (c t + d) with ad - bc != 0
struct Mobius {
    Rat a, b, c, d;
};
ParamCurve reparametrized(const ParamCurve& curve, const Mobius& m);

struct P1Point {
    bool infinite = false;
    ExtScalar t;  // meaningful when finite

    static P1Point at_infinity() { return {true, ExtScalar(0)}; }
    static P1Point finite(ExtScalar v) { return {false, std::move(v)}; }
    std::string str() const;
};

inline constexpr int kContactInfinite = -1;

struct Branch {
    int component = -1;  // filled by audits
    P1Point param;       // on the (possibly reversed) curve
    AlgPoint center;
    int e = 1;                      // branch multiplicity
    int c = 2;                      // contact with the tangent; kContactInfinite for lines
    std::array<ExtScalar, 3> tangent{};  // tangent line coefficients
    std::vector<int> multseq;       // infinitely-near multiplicities >= 2
    long long delta = 0;            // sum of m(m-1)/2 over multseq
    bool is_line = false;

    bool smooth() const { return e == 1; }
};

// Local branch data at a parameter value. Throws DegenerateInput if the
// parametrization degenerates there.
Branch branch_at(const ParamCurve& curve, const P1Point& t0);

// pullback of a form along the curve: G(z1(t), z2(t), z3(t))
UniPoly pullback(const Trivar& G, const ParamCurve& curve);

// vanishing order of the pullback at a parameter (reversal handles infinity);
// kContactInfinite when the pullback vanishes identically
int pullback_valuation(const Trivar& G, const ParamCurve& curve, const P1Point& t0);

// multiplicity of (t - t0) in p, over the field of t0
int valuation_at(const UniPoly& p, const ExtScalar& t0);

// parameters mapping to a given point, possibly over extensions of the
// point's field (extension towers are rejected)
std::vector<P1Point> preimage_params(const ParamCurve& curve, const AlgPoint& p);

// gcd of the 2x2 minors of [f; f']; roots are the parameters of singular branches
UniPoly singular_parameter_poly(const ParamCurve& curve);

UniPoly wronskian(const ParamCurve& curve);

struct FlexPoint {
    bool at_infinity = false;
    bool rational = true;
    Rat t;                // when rational and finite
    UniPoly minpoly;      // when irrational: the parameters' minimal polynomial
    int count = 1;        // conjugate flexes represented
    int contact = 3;      // tangent-line contact (simple Wronskian root = 3)
};

// Wronskian zeros outside singular branch parameters
std::vector<FlexPoint> flex_parameters(const ParamCurve& curve);

// image of the parametrization as a normalized form; throws DegenerateInput
// for non-birational parametrizations
Trivar image_form(const ParamCurve& curve);

// class (degree of the dual): 2 deg - 2 - sum (e_b - 1) over singular branches
int class_of_curve(const ParamCurve& curve);

// total intersection multiplicity of the curve with a form at a point
int intersection_multiplicity_at(const ParamCurve& curve, const Trivar& G, const AlgPoint& p);

} // namespace rigidcurves

#endif
