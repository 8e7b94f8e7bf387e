#include "rigidcurves/poly.hpp"

#include <sstream>

#include "intpoly.hpp"
#include "rigidcurves/errors.hpp"

namespace rigidcurves {

namespace detail {

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    ztrim(r);
    return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    ztrim(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    ztrim(r);
    return r;
}

ZPoly zscale(const Int& c, const ZPoly& a) {
    if (c == 0) return {};
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Int zcontent(const ZPoly& p) {
    Int g(0);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly zprimitive(const ZPoly& p) {
    if (p.empty()) return {};
    Int g = zcontent(p);
    if (sgn(p.back()) < 0) g = -g;
    ZPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(r[i].get_mpz_t(), p[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

ZPoly zderivative(const ZPoly& p) {
    if (p.size() <= 1) return {};
    ZPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = Int(static_cast<long>(i)) * p[i];
    ztrim(r);
    return r;
}

Int zeval(const ZPoly& p, const Int& x) {
    Int acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

ZPoly zprem(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw ZeroInput("zprem: division by zero polynomial");
    int da = zdeg(a), db = zdeg(b);
    if (da < db) return a;
    ZPoly r = a;
    const Int& lb = b.back();
    int e = da - db + 1;
    while (!r.empty() && zdeg(r) >= db) {
        int d = zdeg(r) - db;
        // r <- lc(b)*r - lc(r)*x^d*b
        ZPoly shifted(b.size() + static_cast<std::size_t>(d), Int(0));
        for (std::size_t j = 0; j < b.size(); ++j) shifted[j + d] = r.back() * b[j];
        r = zsub(zscale(lb, r), shifted);
        --e;
    }
    if (e > 0 && !r.empty()) r = zscale(int_pow(lb, static_cast<unsigned long>(e)), r);
    return r;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
    a = zprimitive(a);
    b = zprimitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        if (zdeg(b) == 0) return {Int(1)};
        ZPoly r = zprem(a, b);
        a = std::move(b);
        b = zprimitive(r);
    }
    return a;
}

Int zresultant(ZPoly a, ZPoly b) {
    if (a.empty() || b.empty()) return Int(0);
    if (zdeg(a) == 0) return int_pow(a[0], static_cast<unsigned long>(zdeg(b)));
    if (zdeg(b) == 0) return int_pow(b[0], static_cast<unsigned long>(zdeg(a)));

    Int ca = zcontent(a), cb = zcontent(b);
    ZPoly A(a.size()), B(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(A[i].get_mpz_t(), a[i].get_mpz_t(), ca.get_mpz_t());
    for (std::size_t i = 0; i < b.size(); ++i) mpz_divexact(B[i].get_mpz_t(), b[i].get_mpz_t(), cb.get_mpz_t());

    int s = 1;
    Int t = int_pow(ca, static_cast<unsigned long>(zdeg(B))) * int_pow(cb, static_cast<unsigned long>(zdeg(A)));
    if (zdeg(A) < zdeg(B)) {
        std::swap(A, B);
        if ((zdeg(A) & 1) && (zdeg(B) & 1)) s = -s;
    }
    Int g(1), h(1);
    while (true) {
        int dA = zdeg(A), dB = zdeg(B);
        int delta = dA - dB;
        if ((dA & 1) && (dB & 1)) s = -s;
        ZPoly R = zprem(A, B);
        A = std::move(B);
        Int divisor = g * int_pow(h, static_cast<unsigned long>(delta));
        if (R.empty()) {
            B.clear();
        } else {
            B.resize(R.size());
            for (std::size_t i = 0; i < R.size(); ++i)
                mpz_divexact(B[i].get_mpz_t(), R[i].get_mpz_t(), divisor.get_mpz_t());
        }
        g = A.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            Int gd = int_pow(g, static_cast<unsigned long>(delta));
            Int hd = int_pow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
        }
        if (B.empty()) return Int(0);
        if (zdeg(B) == 0) {
            int n = zdeg(A);
            Int num = int_pow(B[0], static_cast<unsigned long>(n));
            Int den = int_pow(h, static_cast<unsigned long>(n - 1 >= 0 ? n - 1 : 0));
            Int res;
            mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return s < 0 ? Int(-t * res) : Int(t * res);
        }
    }
}

ZPoly zdivexact(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw ZeroInput("zdivexact: division by zero");
    if (a.empty()) return {};
    int da = zdeg(a), db = zdeg(b);
    if (da < db) throw DegenerateInput("zdivexact: degree mismatch");
    ZPoly r = a, q(da - db + 1, Int(0));
    for (int k = da - db; k >= 0; --k) {
        Int top = r[k + db];
        if (top == 0) continue;
        Int qk;
        if (mpz_divisible_p(top.get_mpz_t(), b[db].get_mpz_t()) == 0)
            throw DegenerateInput("zdivexact: not divisible");
        mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), b[db].get_mpz_t());
        q[k] = qk;
        for (int j = 0; j <= db; ++j) r[k + j] -= qk * b[j];
    }
    ztrim(r);
    if (!r.empty()) throw DegenerateInput("zdivexact: nonzero remainder");
    return q;
}

std::pair<ZPoly, Int> to_zpoly(const UniPoly& p) {
    Int den(1);
    for (const auto& c : p.coeffs()) {
        Int d = c.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    ZPoly r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Rat scaled = p.coeffs()[i] * Rat(den);
        r[i] = scaled.get_num();
    }
    ztrim(r);
    return {r, den};
}

UniPoly from_zpoly(const ZPoly& p) {
    std::vector<Rat> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = Rat(p[i]);
    return UniPoly(std::move(c));
}

Int max_abs_coeff(const ZPoly& p) {
    Int m(0);
    for (const auto& c : p) {
        Int a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

} // namespace detail

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
    if (p.zero() && q.zero()) return {};
    if (p.zero()) return q.monic();
    if (q.zero()) return p.monic();
    auto [zp, dp] = detail::to_zpoly(p);
    auto [zq, dq] = detail::to_zpoly(q);
    (void)dp;
    (void)dq;
    return detail::from_zpoly(detail::zgcd(zp, zq)).monic();
}

Rat resultant(const UniPoly& p, const UniPoly& q) {
    if (p.zero() || q.zero()) return Rat(0);
    auto [zp, dp] = detail::to_zpoly(p);
    auto [zq, dq] = detail::to_zpoly(q);
    Rat r(detail::zresultant(zp, zq));
    // Res(p, q) = Res(dp*p, dq*q) / (dp^deg q * dq^deg p)
    Rat scale = rat_pow(Rat(dp), q.degree()) * rat_pow(Rat(dq), p.degree());
    return r / scale;
}

UniPoly primitive_part(const UniPoly& p) {
    if (p.zero()) return {};
    auto [zp, d] = detail::to_zpoly(p);
    (void)d;
    return detail::from_zpoly(detail::zprimitive(zp));
}

int root_multiplicity(const UniPoly& p, const Rat& r) {
    if (p.zero()) throw ZeroInput("root_multiplicity: zero polynomial");
    UniPoly factor(std::vector<Rat>{-r, Rat(1)});
    int k = 0;
    UniPoly cur = p;
    while (true) {
        auto [q, rem] = divrem(cur, factor);
        if (!rem.zero()) return k;
        cur = std::move(q);
        ++k;
        if (cur.zero()) return k;
    }
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    if (p.zero()) throw ZeroInput("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly f = p.monic();
    if (f.degree() == 0) return out;
    UniPoly fp = f.derivative();
    UniPoly a = poly_gcd(f, fp);
    UniPoly b = exact_div(f, a);
    UniPoly c = exact_div(fp, a);
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly ai = poly_gcd(b, d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = exact_div(b, ai);
        c = exact_div(d, ai);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.zero()) throw ZeroInput("squarefree_part: zero polynomial");
    if (p.degree() == 0) return UniPoly::one();
    UniPoly g = poly_gcd(p, p.derivative());
    return exact_div(p.monic(), g).monic();
}

Rat integrate_unit_interval(const UniPoly& p) {
    Rat acc(0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        acc += p.coeffs()[i] / Rat(static_cast<long>(i + 1));
    return acc;
}

std::string to_string(const UniPoly& p, const std::string& var) {
    if (p.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& c = p[static_cast<std::size_t>(i)];
        if (is_zero(c)) continue;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        Rat a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace rigidcurves
