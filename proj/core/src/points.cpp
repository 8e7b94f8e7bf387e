#include "rigidcurves/points.hpp"

#include <algorithm>
#include <sstream>

#include "rigidcurves/budget.hpp"
#include "rigidcurves/errors.hpp"
#include "rigidcurves/factor.hpp"
#include "rigidcurves/linalg.hpp"

namespace rigidcurves {

namespace {

std::string poly_key(const UniPoly& p) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) os << ",";
        os << to_string(p[static_cast<std::size_t>(i)]);
    }
    os << "]";
    return os.str();
}

} // namespace

std::string AlgPoint::key() const {
    std::ostringstream os;
    if (rational()) {
        os << "Q(";
        for (int i = 0; i < 3; ++i) {
            if (i) os << ":";
            os << to_string(coords[static_cast<std::size_t>(i)].rational()
                                ? coords[static_cast<std::size_t>(i)].as_rational()
                                : Rat(0));
        }
        os << ")";
        return os.str();
    }
    os << "K" << poly_key(field->modulus()) << "(";
    for (int i = 0; i < 3; ++i) {
        if (i) os << ":";
        os << poly_key(coords[static_cast<std::size_t>(i)].rep());
    }
    os << ")";
    return os.str();
}

std::string AlgPoint::str() const {
    std::ostringstream os;
    os << "(" << coords[0].str() << " : " << coords[1].str() << " : " << coords[2].str() << ")";
    if (!rational()) os << " over Q[y]/(" << to_string(field->modulus(), "y") << ")";
    return os.str();
}

AlgPoint make_rational_point(const Rat& x, const Rat& y, const Rat& z) {
    return make_point({ExtScalar(x), ExtScalar(y), ExtScalar(z)});
}

AlgPoint make_point(const std::array<ExtScalar, 3>& raw) {
    // normalize: first nonzero coordinate = 1
    std::array<ExtScalar, 3> c = raw;
    int first = -1;
    for (int i = 0; i < 3; ++i)
        if (!is_zero(c[static_cast<std::size_t>(i)])) { first = i; break; }
    if (first < 0) throw DegenerateInput("make_point: zero coordinate vector");
    ExtScalar s = inv(c[static_cast<std::size_t>(first)]);
    for (auto& x : c) x = s * x;

    bool all_rational = c[0].rational() && c[1].rational() && c[2].rational();
    if (all_rational) {
        AlgPoint p;
        p.field = nullptr;
        p.coords = c;
        return p;
    }
    // find a separating functional u = x + a*y + a^2*z
    FieldPtr K;
    for (const auto& x : c)
        if (x.ctx()) { K = x.ctx(); break; }
    int d = K->degree();
    for (long a = 0; a <= 40; ++a) {
        ExtScalar u = c[0] + ExtScalar(Rat(a)) * c[1] + ExtScalar(Rat(a * a)) * c[2];
        UniPoly q = minimal_polynomial(u);
        if (q.degree() != d) continue;
        // express coordinates as polynomials in u
        QMatrix vander(static_cast<std::size_t>(d), QVec(static_cast<std::size_t>(d), Rat(0)));
        ExtScalar up(1);
        for (int j = 0; j < d; ++j) {
            for (int row = 0; row < d; ++row)
                vander[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] =
                    up.rep()[static_cast<std::size_t>(row)];
            up = up * u;
        }
        AlgPoint p;
        p.field = ExtField::make(q);
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            QVec rhs(static_cast<std::size_t>(d), Rat(0));
            for (int row = 0; row < d; ++row)
                rhs[static_cast<std::size_t>(row)] = c[static_cast<std::size_t>(i)].rep()[static_cast<std::size_t>(row)];
            try {
                QVec sol = solve_linear(vander, rhs);
                p.coords[static_cast<std::size_t>(i)] = ExtScalar(UniPoly(std::vector<Rat>(sol)), p.field);
            } catch (const SingularMatrix&) {
                ok = false;
            }
        }
        if (ok) return p;
    }
    throw UnsupportedGerm("make_point: no separating functional found");
}

ExtPoly ext_gcd(const ExtPoly& a, const ExtPoly& b) { return gcd_monic_euclid(a, b); }

FieldRoots ext_roots_in_field(const ExtPoly& g) {
    if (g.zero()) throw ZeroInput("ext_roots_in_field: zero polynomial");
    FieldRoots out;
    FieldPtr K;
    for (const auto& c : g.coeffs())
        if (c.ctx()) { K = c.ctx(); break; }
    if (!K) {
        // rational coefficients
        UniPoly gq(std::vector<Rat>{});
        std::vector<Rat> cs(g.coeffs().size());
        for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = g.coeffs()[i].as_rational();
        gq = UniPoly(std::move(cs));
        int found = 0;
        for (const auto& [r, m] : rational_roots(gq)) {
            out.roots.emplace_back(ExtScalar(r), m);
            found += m;
        }
        out.leftover_degree = gq.degree() - found;
        return out;
    }
    // N(T) = Res_y(modulus(y), G(T, y)); K-roots of g have minimal polynomials
    // dividing N
    Trivar G;  // var0 = T, var1 = y
    for (int i = 0; i <= g.degree(); ++i) {
        const UniPoly& rep = g[static_cast<std::size_t>(i)].rep();
        for (int j = 0; j <= rep.degree(); ++j)
            G = G + Trivar::monomial(rep[static_cast<std::size_t>(j)], {i, j, 0});
    }
    Trivar M;
    {
        const UniPoly& m = K->modulus();
        for (int j = 0; j <= m.degree(); ++j)
            M = M + Trivar::monomial(m[static_cast<std::size_t>(j)], {0, j, 0});
    }
    Trivar N3 = resultant_eliminate(G, M, 1);
    UniPoly N;
    for (const auto& [e, c] : N3.terms()) N.set_coeff(static_cast<std::size_t>(e[0]), c);
    if (N.zero()) throw UnsupportedGerm("ext_roots_in_field: degenerate norm");

    ExtPoly rem = g;
    int found = 0;
    for (const auto& [q, mult] : factor_rational(N)) {
        (void)mult;
        if (q.degree() > K->degree()) continue;
        ExtPoly h = ext_gcd(rem, lift_to_ext(q, K));
        if (h.degree() < 1) continue;
        ExtPoly hs = exact_div(h, ext_gcd(h, h.derivative())).monic();
        if (hs.degree() == 1) {
            ExtScalar root = -(hs[0]);
            // multiplicity by exact division
            int m = 0;
            ExtPoly lin(std::vector<ExtScalar>{-root, ExtScalar(1)});
            while (true) {
                auto [quo, r] = divrem(rem, lin);
                if (!r.zero()) break;
                rem = quo;
                ++m;
            }
            if (m > 0) {
                out.roots.emplace_back(root, m);
                found += m;
            }
        }
        // hs of degree >= 2: several conjugate roots inside K; callers treat
        // the leftover degree as unresolved
    }
    out.leftover_degree = g.degree() - found;
    return out;
}

UniPoly resultant_bivariate_x(const BivQ& a, const BivQ& b) {
    // degrees in x of the y-coefficient rows
    auto as_x_poly = [](const BivQ& f) {
        // f: sum_j c_j(x) y^j  ->  rows by x power: sum_i d_i(y) x^i
        return biv_swap_xy(f);
    };
    BivQ ax = as_x_poly(a), bx = as_x_poly(b);
    int da = ax.degree(), db = bx.degree();
    if (da < 0 || db < 0) throw ZeroInput("resultant_bivariate_x: zero input");
    if (da == 0 && db == 0) return UniPoly::one();
    if (db == 0) {
        // Res_x(a, b) = b(y)^{deg_x a}
        UniPoly by = bx[0];
        UniPoly r = UniPoly::one();
        for (int i = 0; i < da; ++i) r = r * by;
        return r;
    }
    if (da == 0) {
        UniPoly ay = ax[0];
        UniPoly r = UniPoly::one();
        for (int i = 0; i < db; ++i) r = r * ay;
        return r;
    }
    int ydeg_a = 0, ydeg_b = 0;
    for (int i = 0; i <= da; ++i) ydeg_a = std::max(ydeg_a, ax[static_cast<std::size_t>(i)].degree());
    for (int i = 0; i <= db; ++i) ydeg_b = std::max(ydeg_b, bx[static_cast<std::size_t>(i)].degree());
    int bound = db * ydeg_a + da * ydeg_b;
    if (bound > budget().max_elim_degree)
        throw ResourceBudget("resultant_bivariate_x: degree bound " + std::to_string(bound) +
                             " exceeds budget");
    if (!(ax[static_cast<std::size_t>(da)].degree() == 0 && bx[static_cast<std::size_t>(db)].degree() == 0))
        throw DegenerateInput("resultant_bivariate_x: leading x-coefficients must be constants");

    QVec xs, ys;
    long yv = 0;
    while (static_cast<int>(xs.size()) < bound + 1) {
        Rat y0(yv);
        // alternate sign to keep values small
        yv = yv <= 0 ? -yv + 1 : -yv;
        UniPoly av = biv_eval_y(a, y0);  // poly in x
        UniPoly bv = biv_eval_y(b, y0);
        if (av.degree() != da || bv.degree() != db)
            throw DegenerateInput("resultant_bivariate_x: unexpected degree drop");
        xs.push_back(y0);
        ys.push_back(resultant(av, bv));
    }
    QVec coeffs = interpolate(xs, ys);
    return UniPoly(std::move(coeffs));
}

namespace {

// shear z2 <- z2 + s*z1 as a matrix
Mat3 shear_matrix(long s) {
    Mat3 m = Mat3::identity();
    m.a[1][0] = Rat(s);
    return m;
}

struct ChartSystem {
    std::vector<BivQ> polys;  // dehomogenized in chart z3 = 1, sheared
    long shear;
};

// Solve a 0-dimensional system of dehomogenized polynomials in the z3 = 1
// chart. Points are returned in the ORIGINAL coordinates. The `require_all`
// list gives forms that candidates must satisfy (used to filter spurious
// resultant roots); the system itself is polys[0..].
std::vector<AlgPoint> solve_affine_system(const std::vector<Trivar>& forms, bool gcd_filter) {
    for (long shear : {0L, 1L, -1L, 2L, -2L, 3L, 5L, 7L, -3L, 11L}) {
        Mat3 M = shear_matrix(shear);
        std::vector<Trivar> sheared;
        for (const auto& f : forms) sheared.push_back(f.substitute(M));
        // leading x-coefficient must be constant for at least the pair used
        std::vector<BivQ> ps;
        for (const auto& f : sheared) ps.push_back(dehomogenize(f, 2));
        auto lc_const = [](const BivQ& f) {
            BivQ fx = biv_swap_xy(f);
            if (fx.degree() <= 0) return true;  // constant in x: handled by the power rule
            return fx[static_cast<std::size_t>(fx.degree())].degree() == 0;
        };
        // pairwise resultants of the system, gcd'ed together
        UniPoly R;
        bool resultant_ok = true;
        for (std::size_t i = 0; i < ps.size() && resultant_ok; ++i) {
            for (std::size_t j = i + 1; j < ps.size(); ++j) {
                if (ps[i].zero() || ps[j].zero()) continue;
                if (!lc_const(ps[i]) || !lc_const(ps[j])) { resultant_ok = false; break; }
                UniPoly rij = resultant_bivariate_x(ps[i], ps[j]);
                if (rij.zero()) continue;  // shared component in this pair
                R = R.zero() ? rij : poly_gcd(R, rij);
                if (R.degree() == 0) break;
            }
            if (!R.zero() && R.degree() == 0) break;
        }
        if (!resultant_ok) continue;
        if (R.zero()) continue;  // all pairs degenerate under this shear: try next
        if (R.degree() == 0) return {};
        R = squarefree_part(R);

        std::vector<AlgPoint> found;
        bool shear_ok = true;
        for (const auto& [m, mult] : factor_rational(R)) {
            (void)mult;
            if (m.degree() > budget().max_field_degree)
                throw ResourceBudget("solve_affine_system: field degree " +
                                     std::to_string(m.degree()) + " exceeds budget");
            FieldPtr K = m.degree() == 1 ? nullptr : ExtField::make(m);
            ExtScalar ybar = m.degree() == 1 ? ExtScalar(-m[0]) : ExtScalar::generator(K);
            // specialize each poly at y = ybar and gcd in x
            ExtPoly g;
            bool first_poly = true;
            for (const auto& p : ps) {
                if (p.zero()) continue;
                // evaluate y -> ybar: rows are UniPoly in x
                ExtPoly spec;
                ExtScalar ypow(1);
                for (int jj = 0; jj <= p.degree(); ++jj) {
                    ExtPoly row = lift_to_ext(p[static_cast<std::size_t>(jj)], K);
                    spec = spec + row * ypow;
                    ypow = ypow * ybar;
                }
                if (spec.zero()) continue;
                g = first_poly ? spec : ext_gcd(g, spec);
                first_poly = false;
                if (g.degree() == 0) break;
            }
            if (first_poly || g.degree() == 0) continue;  // spurious factor
            ExtPoly gs = exact_div(g, ext_gcd(g, g.derivative())).monic();
            if (gs.degree() != 1) { shear_ok = false; break; }  // y does not separate: re-shear
            ExtScalar xbar = -(gs[0]);
            // filter: all forms must vanish (only needed when gcd_filter)
            std::array<ExtScalar, 3> pt{xbar, ybar, ExtScalar(1)};
            if (gcd_filter) {
                bool all_zero = true;
                for (const auto& f : sheared)
                    if (!is_zero(f.eval(pt))) { all_zero = false; break; }
                if (!all_zero) continue;
            }
            // un-shear: original = M * (xbar, ybar, 1)
            std::array<ExtScalar, 3> orig;
            for (int r = 0; r < 3; ++r) {
                ExtScalar acc(0);
                for (int cc = 0; cc < 3; ++cc)
                    acc = acc + ExtScalar(M.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)]) *
                                    pt[static_cast<std::size_t>(cc)];
                orig[static_cast<std::size_t>(r)] = acc;
            }
            found.push_back(make_point(orig));
        }
        if (shear_ok) return found;
    }
    throw UnsupportedGerm("solve_affine_system: no usable shear found");
}

// points on the line z3 = 0 where all given forms vanish
std::vector<AlgPoint> solve_on_infinity(const std::vector<Trivar>& forms) {
    // restrict to z3 = 0: binary forms in (z1, z2); w = z2/z1
    std::vector<AlgPoint> out;
    UniPoly g;
    bool first = true;
    bool all_zero_at_010 = true;
    for (const auto& f : forms) {
        UniPoly r;  // f(1, w, 0)
        for (const auto& [e, c] : f.terms()) {
            if (e[2] != 0) continue;
            r.set_coeff(static_cast<std::size_t>(e[1]), r[static_cast<std::size_t>(e[1])] + c);
        }
        // f(0, 1, 0) = coefficient of z2^deg
        Rat at010 = f.coeff({0, f.total_degree(), 0});
        if (!is_zero(at010)) all_zero_at_010 = false;
        if (r.zero()) continue;  // this form vanishes identically on the line? handled by caller
        g = first ? r : poly_gcd(g, r);
        first = false;
        if (g.degree() == 0) break;
    }
    if (first) throw InfiniteIntersection("all forms contain the line z3 = 0");
    if (g.degree() >= 1) {
        for (const auto& [m, mult] : factor_rational(g)) {
            (void)mult;
            if (m.degree() > budget().max_field_degree)
                throw ResourceBudget("solve_on_infinity: field degree exceeds budget");
            if (m.degree() == 1) {
                out.push_back(make_rational_point(Rat(1), -m[0], Rat(0)));
            } else {
                FieldPtr K = ExtField::make(m);
                out.push_back(make_point({ExtScalar(1), ExtScalar::generator(K), ExtScalar(0)}));
            }
        }
    }
    if (all_zero_at_010) out.push_back(make_rational_point(Rat(0), Rat(1), Rat(0)));
    return out;
}

void dedupe(std::vector<AlgPoint>& pts) {
    std::sort(pts.begin(), pts.end(), [](const AlgPoint& a, const AlgPoint& b) { return a.key() < b.key(); });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const AlgPoint& a, const AlgPoint& b) { return a.key() == b.key(); }),
              pts.end());
}

} // namespace

std::vector<AlgPoint> singular_points(const Trivar& F) {
    if (F.zero() || F.total_degree() < 1) throw ZeroInput("singular_points: not a curve");
    std::vector<Trivar> partials{F.partial(0), F.partial(1), F.partial(2)};
    std::vector<Trivar> nonzero;
    for (auto& p : partials)
        if (!p.zero()) nonzero.push_back(p);
    if (nonzero.size() < 2) {
        // degree-1 (lines) and degenerate cases have no singular points
        return {};
    }
    std::vector<AlgPoint> pts = solve_affine_system(nonzero, true);
    for (auto& p : solve_on_infinity(nonzero)) pts.push_back(p);
    dedupe(pts);
    return pts;
}

std::vector<AlgPoint> intersection_points(const Trivar& F, const Trivar& G) {
    if (F.zero() || G.zero()) throw ZeroInput("intersection_points: zero form");
    // common component?
    Trivar nf = F.normalized(), ng = G.normalized();
    if (nf == ng) throw InfiniteIntersection("intersection_points: equal curves");
    if (nf.total_degree() >= 1 && ng.divisible_by(nf))
        throw InfiniteIntersection("intersection_points: shared component");
    if (ng.total_degree() >= 1 && nf.divisible_by(ng))
        throw InfiniteIntersection("intersection_points: shared component");
    std::vector<Trivar> sys{F, G};
    std::vector<AlgPoint> pts;
    try {
        pts = solve_affine_system(sys, false);
    } catch (const UnsupportedGerm&) {
        throw;  // no shear separated: genuinely unsupported
    }
    for (auto& p : solve_on_infinity(sys)) pts.push_back(p);
    dedupe(pts);
    return pts;
}

bool lies_on(const AlgPoint& p, const Trivar& F) { return is_zero(F.eval(p.coords)); }

} // namespace rigidcurves
