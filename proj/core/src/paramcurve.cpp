#include "rigidcurves/paramcurve.hpp"

#include <algorithm>
#include <sstream>

#include "rigidcurves/budget.hpp"
#include "rigidcurves/errors.hpp"
#include "rigidcurves/factor.hpp"

namespace rigidcurves {

namespace {

UniPoly gcd3(const UniPoly& a, const UniPoly& b, const UniPoly& c) {
    return poly_gcd(poly_gcd(a, b), c);
}

std::array<UniPoly, 3> pair_minors(const std::array<UniPoly, 3>& f) {
    std::array<UniPoly, 3> d{f[0].derivative(), f[1].derivative(), f[2].derivative()};
    return {f[1] * d[2] - f[2] * d[1], f[2] * d[0] - f[0] * d[2], f[0] * d[1] - f[1] * d[0]};
}

} // namespace

ParamCurve::ParamCurve(UniPoly z1, UniPoly z2, UniPoly z3, std::string label)
    : coords_{std::move(z1), std::move(z2), std::move(z3)}, degree_(0), label_(std::move(label)) {
    UniPoly g = gcd3(coords_[0], coords_[1], coords_[2]);
    if (g.zero()) throw DegenerateInput("ParamCurve: all coordinates zero");
    if (g.degree() > 0)
        for (auto& c : coords_) c = c.zero() ? c : exact_div(c, g);
    for (const auto& c : coords_) degree_ = std::max(degree_, c.degree());
    if (degree_ < 1) throw DegenerateInput("ParamCurve: image is a point");
    auto minors = pair_minors(coords_);
    if (minors[0].zero() && minors[1].zero() && minors[2].zero())
        throw DegenerateInput("ParamCurve: coordinates pairwise proportional");
}

ParamCurve ParamCurve::reversed() const {
    return ParamCurve(coords_[0].reversed(degree_), coords_[1].reversed(degree_),
                      coords_[2].reversed(degree_), label_);
}

ParamCurve ParamCurve::transformed(const Mat3& h) const {
    std::array<UniPoly, 3> nc;
    for (int i = 0; i < 3; ++i) {
        UniPoly acc;
        for (int j = 0; j < 3; ++j)
            acc = acc + h.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                            coords_[static_cast<std::size_t>(j)];
        nc[static_cast<std::size_t>(i)] = acc;
    }
    return ParamCurve(nc[0], nc[1], nc[2], label_);
}

ParamCurve reparametrized(const ParamCurve& curve, const Mobius& m) {
    if (is_zero(m.a * m.d - m.b * m.c)) throw SingularMatrix("reparametrized: degenerate Mobius map");
    int D = curve.degree();
    UniPoly num(std::vector<Rat>{m.b, m.a});   // a t + b
    UniPoly den(std::vector<Rat>{m.d, m.c});   // c t + d
    std::array<UniPoly, 3> nc;
    for (int i = 0; i < 3; ++i) {
        UniPoly acc;
        const UniPoly& p = curve.coord(i);
        for (int j = 0; j <= D; ++j) {
            const Rat& cj = p[static_cast<std::size_t>(j)];
            if (is_zero(cj)) continue;
            UniPoly term(cj);
            for (int k = 0; k < j; ++k) term = term * num;
            for (int k = 0; k < D - j; ++k) term = term * den;
            acc = acc + term;
        }
        nc[static_cast<std::size_t>(i)] = acc;
    }
    return ParamCurve(nc[0], nc[1], nc[2], curve.label());
}

std::string P1Point::str() const {
    if (infinite) return "t=inf";
    return "t=" + t.str();
}

int valuation_at(const UniPoly& p, const ExtScalar& t0) {
    if (p.zero()) return kContactInfinite;
    ExtPoly q = lift_to_ext(p, t0.ctx());
    ExtPoly lin(std::vector<ExtScalar>{-t0, ExtScalar(1)});
    int v = 0;
    while (true) {
        auto [quo, rem] = divrem(q, lin);
        if (!rem.zero()) return v;
        q = std::move(quo);
        ++v;
        if (q.zero()) return v;
    }
}

namespace {

int ext_valuation(const ExtPoly& p, const ExtScalar& t0) {
    if (p.zero()) return kContactInfinite;
    ExtPoly q = p;
    ExtPoly lin(std::vector<ExtScalar>{-t0, ExtScalar(1)});
    int v = 0;
    while (true) {
        auto [quo, rem] = divrem(q, lin);
        if (!rem.zero()) return v;
        q = std::move(quo);
        ++v;
        if (q.zero()) return v;
    }
}

ExtPoly strip_root(ExtPoly p, const ExtScalar& t0, int k) {
    ExtPoly lin(std::vector<ExtScalar>{-t0, ExtScalar(1)});
    for (int i = 0; i < k; ++i) p = exact_div(p, lin);
    return p;
}

// local rational function at t0: num/den with den(t0) != 0
struct LocalFn {
    ExtPoly num, den;
    bool zero() const { return num.zero(); }
};

int val(const LocalFn& f, const ExtScalar& t0) { return ext_valuation(f.num, t0); }

LocalFn divide(const LocalFn& a, const LocalFn& b, const ExtScalar& t0) {
    // (a/b); strips the common root so the denominator stays a unit
    ExtPoly num = a.num * b.den;
    ExtPoly den = a.den * b.num;
    int v = ext_valuation(den, t0);
    num = strip_root(std::move(num), t0, v);
    den = strip_root(std::move(den), t0, v);
    return {std::move(num), std::move(den)};
}

ExtScalar value_at(const LocalFn& f, const ExtScalar& t0) {
    return f.num.eval(t0) * inv(f.den.eval(t0));
}

} // namespace

Branch branch_at(const ParamCurve& curve, const P1Point& t0) {
    if (t0.infinite) {
        Branch b = branch_at(curve.reversed(), P1Point::finite(ExtScalar(0)));
        b.param = P1Point::at_infinity();
        return b;
    }
    const ExtScalar& t = t0.t;
    FieldPtr K = t.ctx();
    std::array<ExtScalar, 3> center_raw;
    std::array<ExtPoly, 3> f;
    for (int i = 0; i < 3; ++i) {
        f[static_cast<std::size_t>(i)] = lift_to_ext(curve.coord(i), K);
        center_raw[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)].eval(t);
    }
    if (is_zero(center_raw[0]) && is_zero(center_raw[1]) && is_zero(center_raw[2]))
        throw DegenerateInput("branch_at: parametrization degenerates (common root survives?)");

    Branch br;
    br.param = t0;
    br.center = make_point(center_raw);
    br.is_line = curve.is_line();

    int k = 0;
    while (is_zero(center_raw[static_cast<std::size_t>(k)])) ++k;

    // pullbacks of the two basis lines through the center
    std::array<int, 2> idx{};
    int w = 0;
    for (int i = 0; i < 3; ++i)
        if (i != k) idx[static_cast<std::size_t>(w++)] = i;
    std::array<ExtPoly, 2> N;
    for (int j = 0; j < 2; ++j) {
        int i = idx[static_cast<std::size_t>(j)];
        N[static_cast<std::size_t>(j)] = f[static_cast<std::size_t>(i)] * center_raw[static_cast<std::size_t>(k)] -
                                         f[static_cast<std::size_t>(k)] * center_raw[static_cast<std::size_t>(i)];
    }
    std::array<int, 2> v{ext_valuation(N[0], t), ext_valuation(N[1], t)};
    if (v[0] == kContactInfinite && v[1] == kContactInfinite)
        throw DegenerateInput("branch_at: image is a point");

    int e;
    if (v[0] == kContactInfinite) e = v[1];
    else if (v[1] == kContactInfinite) e = v[0];
    else e = std::min(v[0], v[1]);
    br.e = e;

    // leading coefficients of the basis pullbacks at order e
    std::array<ExtScalar, 2> lead{ExtScalar(0), ExtScalar(0)};
    for (int j = 0; j < 2; ++j) {
        if (v[static_cast<std::size_t>(j)] != e) continue;
        lead[static_cast<std::size_t>(j)] = strip_root(N[static_cast<std::size_t>(j)], t, e).eval(t);
    }
    // tangent = lead2 * L1 - lead1 * L2, with L_i = c_k z_i - c_i z_k
    std::array<ExtScalar, 3> L1{}, L2{};
    L1[static_cast<std::size_t>(idx[0])] = center_raw[static_cast<std::size_t>(k)];
    L1[static_cast<std::size_t>(k)] = -center_raw[static_cast<std::size_t>(idx[0])];
    L2[static_cast<std::size_t>(idx[1])] = center_raw[static_cast<std::size_t>(k)];
    L2[static_cast<std::size_t>(k)] = -center_raw[static_cast<std::size_t>(idx[1])];
    for (int i = 0; i < 3; ++i)
        br.tangent[static_cast<std::size_t>(i)] =
            lead[1] * L1[static_cast<std::size_t>(i)] - lead[0] * L2[static_cast<std::size_t>(i)];

    ExtPoly tangent_pullback = lead[1] * N[0] - lead[0] * N[1];
    br.c = tangent_pullback.zero() ? kContactInfinite : ext_valuation(tangent_pullback, t);

    // multiplicity sequence by repeated local blowups
    if (e >= 2) {
        ExtPoly den = f[static_cast<std::size_t>(k)] * center_raw[static_cast<std::size_t>(k)];
        LocalFn X{N[0], den}, Y{N[1], den};
        int guard = 8 * (curve.degree() + 2) * (curve.degree() + 2);
        while (guard-- > 0) {
            int a = val(X, t), b = val(Y, t);
            if (a == kContactInfinite && b == kContactInfinite)
                throw UnsupportedGerm("branch_at: degenerate local data");
            if (a == kContactInfinite || (b != kContactInfinite && a > b)) std::swap(X, Y), std::swap(a, b);
            // now a <= b (a finite)
            if (a <= 1) break;
            br.multseq.push_back(a);
            Y = divide(Y, X, t);
            if (val(Y, t) == 0) {
                ExtScalar c0 = value_at(Y, t);
                Y.num = Y.num - c0 * Y.den;
            }
        }
        if (guard <= 0) throw UnsupportedGerm("branch_at: multiplicity sequence did not terminate");
    }
    for (int m : br.multseq) br.delta += static_cast<long long>(m) * (m - 1) / 2;
    return br;
}

UniPoly pullback(const Trivar& G, const ParamCurve& curve) {
    UniPoly acc;
    for (const auto& [e, c] : G.terms()) {
        UniPoly term(c);
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k) term = term * curve.coord(v);
        acc = acc + term;
    }
    return acc;
}

int pullback_valuation(const Trivar& G, const ParamCurve& curve, const P1Point& t0) {
    if (t0.infinite) return pullback_valuation(G, curve.reversed(), P1Point::finite(ExtScalar(0)));
    UniPoly p = pullback(G, curve);
    if (p.zero()) return kContactInfinite;
    return valuation_at(p, t0.t);
}

std::vector<P1Point> preimage_params(const ParamCurve& curve, const AlgPoint& p) {
    std::vector<P1Point> out;
    FieldPtr K = p.field;
    int k = 0;
    while (is_zero(p.coords[static_cast<std::size_t>(k)])) ++k;
    ExtPoly g;
    bool first = true;
    for (int i = 0; i < 3; ++i) {
        if (i == k) continue;
        ExtPoly cross = lift_to_ext(curve.coord(i), K) * p.coords[static_cast<std::size_t>(k)] -
                        lift_to_ext(curve.coord(k), K) * p.coords[static_cast<std::size_t>(i)];
        if (cross.zero()) continue;
        g = first ? cross : ext_gcd(g, cross);
        first = false;
    }
    if (first) throw DegenerateInput("preimage_params: curve is constant?");
    if (g.degree() >= 1) {
        if (!K || K->degree() <= 1) {
            // rational point: factor over Q, extensions allowed
            std::vector<Rat> cs(g.coeffs().size());
            for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = g.coeffs()[i].as_rational();
            UniPoly gq(std::move(cs));
            for (const auto& [m, mult] : factor_rational(gq)) {
                (void)mult;
                if (m.degree() == 1) {
                    out.push_back(P1Point::finite(ExtScalar(-m[0])));
                } else {
                    if (m.degree() > budget().max_field_degree)
                        throw ResourceBudget("preimage_params: parameter field exceeds budget");
                    FieldPtr L = ExtField::make(m);
                    out.push_back(P1Point::finite(ExtScalar::generator(L)));
                }
            }
        } else {
            FieldRoots roots = ext_roots_in_field(g);
            if (roots.leftover_degree > 0)
                throw UnsupportedGerm("preimage_params: parameters in an extension tower");
            for (const auto& [r, mult] : roots.roots) {
                (void)mult;
                out.push_back(P1Point::finite(r));
            }
        }
    }
    // infinity: leading coefficient vector parallel to p?
    {
        ParamCurve rev = curve.reversed();
        std::array<ExtScalar, 3> lead;
        for (int i = 0; i < 3; ++i) lead[static_cast<std::size_t>(i)] = ExtScalar(rev.coord(i)[0]);
        bool parallel = true;
        for (int i = 0; i < 3 && parallel; ++i)
            for (int j = i + 1; j < 3 && parallel; ++j) {
                ExtScalar cr = lead[static_cast<std::size_t>(i)] * p.coords[static_cast<std::size_t>(j)] -
                               lead[static_cast<std::size_t>(j)] * p.coords[static_cast<std::size_t>(i)];
                if (!is_zero(cr)) parallel = false;
            }
        if (parallel) out.push_back(P1Point::at_infinity());
    }
    return out;
}

UniPoly singular_parameter_poly(const ParamCurve& curve) {
    std::array<UniPoly, 3> f{curve.coord(0), curve.coord(1), curve.coord(2)};
    auto minors = pair_minors(f);
    return gcd3(minors[0], minors[1], minors[2]);
}

UniPoly wronskian(const ParamCurve& curve) {
    std::array<UniPoly, 3> f{curve.coord(0), curve.coord(1), curve.coord(2)};
    std::array<UniPoly, 3> d{f[0].derivative(), f[1].derivative(), f[2].derivative()};
    std::array<UniPoly, 3> dd{d[0].derivative(), d[1].derivative(), d[2].derivative()};
    return f[0] * (d[1] * dd[2] - d[2] * dd[1]) - f[1] * (d[0] * dd[2] - d[2] * dd[0]) +
           f[2] * (d[0] * dd[1] - d[1] * dd[0]);
}

std::vector<FlexPoint> flex_parameters(const ParamCurve& curve) {
    if (curve.is_line()) throw DegenerateInput("flex_parameters: curve is a line");
    std::vector<FlexPoint> out;
    UniPoly W = wronskian(curve);
    if (W.zero()) throw DegenerateInput("flex_parameters: degenerate (contained in a line)");
    UniPoly S = singular_parameter_poly(curve);
    // strip every factor shared with the singular-parameter locus
    while (true) {
        UniPoly g = poly_gcd(W, S);
        if (g.degree() == 0) break;
        W = exact_div(W, g);
    }
    for (const auto& [m, mult] : factor_rational(W)) {
        FlexPoint fp;
        fp.at_infinity = false;
        fp.contact = mult + 2;
        if (m.degree() == 1) {
            fp.rational = true;
            fp.t = -m[0];
            fp.count = 1;
        } else {
            fp.rational = false;
            fp.minpoly = m;
            fp.count = m.degree();
        }
        out.push_back(fp);
    }
    // the point at infinity, via the reversed curve
    ParamCurve rev = curve.reversed();
    UniPoly Wr = wronskian(rev);
    UniPoly Sr = singular_parameter_poly(rev);
    if (!is_zero(Sr.eval(Rat(0)))) {
        int v = Wr.valuation();
        if (v > 0) {
            FlexPoint fp;
            fp.at_infinity = true;
            fp.rational = true;
            fp.count = 1;
            fp.contact = v + 2;
            out.push_back(fp);
        }
    }
    return out;
}

Trivar image_form(const ParamCurve& curve) {
    int d = curve.degree();
    // homogeneous coordinates as binary forms of degree d: pad with the s-part
    // implicitly by bounding pullback degrees
    for (int D = 1; D <= d; ++D) {
        // monomials of degree D in glex order
        std::vector<Expo> monos;
        for (int i = D; i >= 0; --i)
            for (int j = D - i; j >= 0; --j) monos.push_back({i, j, D - i - j});
        std::vector<UniPoly> pulls;
        pulls.reserve(monos.size());
        int rows = 0;
        for (const auto& e : monos) {
            UniPoly t(Rat(1));
            for (int v = 0; v < 3; ++v)
                for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k) t = t * curve.coord(v);
            rows = std::max(rows, t.degree() + 1);
            pulls.push_back(std::move(t));
        }
        // also constrain the top coefficients up to D*d (infinity constraints
        // come through the homogeneous pullback degree bound)
        rows = D * d + 1;
        QMatrix mat(static_cast<std::size_t>(rows), QVec(monos.size(), Rat(0)));
        for (std::size_t cidx = 0; cidx < monos.size(); ++cidx) {
            // homogeneous pullback of the monomial has degree exactly D*d in
            // (t, s); the affine pullback must be padded accordingly: the
            // missing factor is s^(D*d - deg), which shifts nothing at s = 1.
            for (int r = 0; r <= pulls[cidx].degree(); ++r)
                mat[static_cast<std::size_t>(r)][cidx] = pulls[cidx][static_cast<std::size_t>(r)];
        }
        auto basis = nullspace(std::move(mat));
        if (basis.empty()) continue;
        if (basis.size() != 1)
            throw DegenerateInput("image_form: unexpected kernel dimension (reducible image?)");
        if (d % D != 0 || d / D != 1)
            throw DegenerateInput("image_form: parametrization is not birational onto its image");
        Trivar F;
        for (std::size_t cidx = 0; cidx < monos.size(); ++cidx)
            F = F + Trivar::monomial(basis[0][cidx], monos[cidx]);
        return F.normalized();
    }
    throw DegenerateInput("image_form: no vanishing form found");
}

int class_of_curve(const ParamCurve& curve) {
    if (curve.is_line()) throw DegenerateInput("class_of_curve: line has no dual curve");
    int cls = 2 * curve.degree() - 2;
    UniPoly S = singular_parameter_poly(curve);
    for (const auto& [m, mult] : factor_rational(S)) {
        (void)mult;
        P1Point t0 = m.degree() == 1
                         ? P1Point::finite(ExtScalar(-m[0]))
                         : P1Point::finite(ExtScalar::generator(ExtField::make(m)));
        Branch b = branch_at(curve, t0);
        cls -= (b.e - 1) * m.degree();
    }
    // infinity
    ParamCurve rev = curve.reversed();
    UniPoly Sr = singular_parameter_poly(rev);
    if (is_zero(Sr.eval(Rat(0)))) {
        Branch b = branch_at(curve, P1Point::at_infinity());
        cls -= b.e - 1;
    }
    return cls;
}

int intersection_multiplicity_at(const ParamCurve& curve, const Trivar& G, const AlgPoint& p) {
    int total = 0;
    for (const auto& t0 : preimage_params(curve, p)) {
        int v = pullback_valuation(G, curve, t0);
        if (v == kContactInfinite) throw InfiniteIntersection("intersection_multiplicity_at: common component");
        total += v;
    }
    return total;
}

} // namespace rigidcurves
