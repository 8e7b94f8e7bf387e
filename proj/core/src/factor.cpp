#include "rigidcurves/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

#include "intpoly.hpp"
#include "rigidcurves/errors.hpp"

namespace rigidcurves {

namespace {

using detail::ZPoly;
using detail::zdeg;

// ---------- arithmetic mod a word-size prime ----------

using FpPoly = std::vector<std::uint64_t>;

std::uint64_t subp(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b % p) % p; }
std::uint64_t mulp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t powp(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulp(r, a, p);
        a = mulp(a, a, p);
        e >>= 1;
    }
    return r;
}
std::uint64_t invp(std::uint64_t a, std::uint64_t p) { return powp(a % p, p - 2, p); }

void fptrim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
int fpdeg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fpmul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    }
    fptrim(r);
    return r;
}

FpPoly fpsub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = subp(x, y, p);
    }
    fptrim(r);
    return r;
}

FpPoly fpscale(std::uint64_t c, const FpPoly& a, std::uint64_t p) {
    FpPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulp(c, a[i], p);
    fptrim(r);
    return r;
}

// remainder of a by monic-normalizable b
FpPoly fprem(FpPoly a, const FpPoly& b, std::uint64_t p) {
    std::uint64_t li = invp(b.back(), p);
    while (fpdeg(a) >= fpdeg(b)) {
        std::uint64_t q = mulp(a.back(), li, p);
        int shift = fpdeg(a) - fpdeg(b);
        for (std::size_t j = 0; j < b.size(); ++j)
            a[j + shift] = subp(a[j + shift], mulp(q, b[j], p), p);
        fptrim(a);
        if (a.empty()) break;
    }
    return a;
}

std::pair<FpPoly, FpPoly> fpdivrem(FpPoly a, const FpPoly& b, std::uint64_t p) {
    FpPoly q(fpdeg(a) >= fpdeg(b) ? fpdeg(a) - fpdeg(b) + 1 : 0, 0);
    std::uint64_t li = invp(b.back(), p);
    while (fpdeg(a) >= fpdeg(b) && !a.empty()) {
        std::uint64_t c = mulp(a.back(), li, p);
        int shift = fpdeg(a) - fpdeg(b);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[j + shift] = subp(a[j + shift], mulp(c, b[j], p), p);
        fptrim(a);
    }
    fptrim(q);
    return {q, a};
}

FpPoly fpgcd(FpPoly a, FpPoly b, std::uint64_t p) {
    while (!b.empty()) {
        FpPoly r = fprem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = fpscale(invp(a.back(), p), a, p);
    return a;
}

FpPoly fpmonic(const FpPoly& a, std::uint64_t p) {
    if (a.empty()) return a;
    return fpscale(invp(a.back(), p), a, p);
}

FpPoly fppowmod(const FpPoly& base, const Int& e, const FpPoly& mod, std::uint64_t p) {
    FpPoly r{1}, b = fprem(base, mod, p);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = fprem(fpmul(r, b, p), mod, p);
        b = fprem(fpmul(b, b, p), mod, p);
        k >>= 1;
    }
    return r;
}

FpPoly fpderiv(const FpPoly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulp(a[i], i % p, p);
    fptrim(r);
    return r;
}

FpPoly to_fp(const ZPoly& f, std::uint64_t p) {
    FpPoly r(f.size());
    Int pp(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < f.size(); ++i) {
        Int m = f[i] % pp;
        if (m < 0) m += pp;
        r[i] = m.get_ui();
    }
    fptrim(r);
    return r;
}

// distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial mod p
void edf(const FpPoly& f, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (fpdeg(f) == d) {
        out.push_back(f);
        return;
    }
    Int pd = int_pow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
    Int e = (pd - 1) / 2;
    while (true) {
        FpPoly r(static_cast<std::size_t>(fpdeg(f)), 0);
        for (auto& c : r) c = rng() % p;
        fptrim(r);
        if (fpdeg(r) < 1) continue;
        FpPoly g = fpgcd(f, r, p);
        if (fpdeg(g) > 0 && fpdeg(g) < fpdeg(f)) {
            edf(g, d, p, rng, out);
            edf(fpdivrem(f, g, p).first, d, p, rng, out);
            return;
        }
        FpPoly h = fppowmod(r, e, f, p);
        if (h.empty()) continue;
        h[0] = subp(h[0], 1, p);
        fptrim(h);
        g = fpgcd(f, h, p);
        if (fpdeg(g) > 0 && fpdeg(g) < fpdeg(f)) {
            edf(g, d, p, rng, out);
            edf(fpdivrem(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

std::vector<FpPoly> factor_modp(FpPoly f, std::uint64_t p) {
    std::vector<FpPoly> out;
    f = fpmonic(f, p);
    std::mt19937_64 rng(0x5eedu ^ p);
    FpPoly x{0, 1};
    FpPoly h = x;
    int i = 1;
    while (2 * i <= fpdeg(f)) {
        h = fppowmod(h, Int(static_cast<unsigned long>(p)), f, p);
        FpPoly hx = fpsub(h, x, p);
        FpPoly g = fpgcd(f, hx, p);
        if (fpdeg(g) > 0) {
            edf(g, i, p, rng, out);
            f = fpdivrem(f, g, p).first;
            h = fprem(h, f, p);
        }
        ++i;
    }
    if (fpdeg(f) > 0) out.push_back(f);
    return out;
}

// ---------- arithmetic mod p^k (coefficients as Int) ----------

struct ModCtx {
    Int m;  // p^k
    Int reduce(const Int& a) const {
        Int r = a % m;
        if (r < 0) r += m;
        return r;
    }
    Int symmetric(const Int& a) const {
        Int r = reduce(a);
        if (2 * r > m) r -= m;
        return r;
    }
};

ZPoly mreduce(const ZPoly& f, const ModCtx& c) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = c.reduce(f[i]);
    detail::ztrim(r);
    return r;
}
ZPoly mmul(const ZPoly& a, const ZPoly& b, const ModCtx& c) { return mreduce(detail::zmul(a, b), c); }
ZPoly msub(const ZPoly& a, const ZPoly& b, const ModCtx& c) { return mreduce(detail::zsub(a, b), c); }
ZPoly madd(const ZPoly& a, const ZPoly& b, const ModCtx& c) { return mreduce(detail::zadd(a, b), c); }

// division by a monic polynomial mod m
std::pair<ZPoly, ZPoly> mdivrem_monic(const ZPoly& a, const ZPoly& b, const ModCtx& c) {
    ZPoly r = a;
    int db = zdeg(b);
    if (zdeg(r) < db) return {{}, r};
    ZPoly q(zdeg(r) - db + 1, Int(0));
    for (int k = zdeg(r) - db; k >= 0; --k) {
        detail::ztrim(r);
        if (zdeg(r) < k + db) continue;
        Int ck = c.reduce(r[k + db]);
        if (ck == 0) continue;
        q[k] = ck;
        for (int j = 0; j <= db; ++j) r[k + j] = c.reduce(r[k + j] - ck * b[j]);
    }
    detail::ztrim(r);
    detail::ztrim(q);
    return {q, mreduce(r, c)};
}

Int minv_int(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DegenerateInput("non-invertible element in Hensel lifting");
    return r;
}

// one quadratic Hensel step: lifts f = g*h (mod m) to mod m^2, h monic
struct HenselPair {
    ZPoly g, h, s, t;
};

HenselPair hensel_step(const ZPoly& f, HenselPair in, const Int& m) {
    ModCtx c2{m * m};
    ZPoly e = msub(f, mmul(in.g, in.h, c2), c2);
    auto [q, r] = mdivrem_monic(mmul(in.s, e, c2), in.h, c2);
    ZPoly gstar = madd(madd(in.g, mmul(in.t, e, c2), c2), mmul(q, in.g, c2), c2);
    ZPoly hstar = madd(in.h, r, c2);
    ZPoly b = msub(madd(mmul(in.s, gstar, c2), mmul(in.t, hstar, c2), c2), ZPoly{Int(1)}, c2);
    auto [cq, d] = mdivrem_monic(mmul(in.s, b, c2), hstar, c2);
    ZPoly sstar = msub(in.s, d, c2);
    ZPoly tstar = msub(msub(in.t, mmul(in.t, b, c2), c2), mmul(cq, gstar, c2), c2);
    return {gstar, hstar, sstar, tstar};
}

// extended euclid mod p for initializing Bezout data
void fp_ext_euclid(const FpPoly& a, const FpPoly& b, std::uint64_t p, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = fpdivrem(r0, r1, p);
        FpPoly s2 = fpsub(s0, fpmul(q, s1, p), p);
        FpPoly t2 = fpsub(t0, fpmul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    std::uint64_t li = invp(r0.back(), p);
    s = fpscale(li, s0, p);
    t = fpscale(li, t0, p);
}

ZPoly from_fp(const FpPoly& f) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = Int(static_cast<unsigned long>(f[i]));
    return r;
}

// lifts the factorization f = lc(f) * prod(factors) (mod p) to mod p^2^j >= target.
// factors monic mod p; returns monic factors mod the final modulus, and the modulus.
void multilift(const ZPoly& f, const std::vector<FpPoly>& factors, std::uint64_t p, const Int& target,
               std::vector<ZPoly>& out, Int& final_mod) {
    if (factors.size() == 1) {
        // monic image of f mod final_mod
        Int m(static_cast<unsigned long>(p));
        while (m < target) m = m * m;
        ModCtx c{m};
        ZPoly r = mreduce(f, c);
        Int li = minv_int(c.reduce(r.back()), m);
        for (auto& x : r) x = c.reduce(x * li);
        out.push_back(r);
        final_mod = m;
        return;
    }
    std::size_t half = factors.size() / 2;
    FpPoly gp{1}, hp{1};
    for (std::size_t i = 0; i < half; ++i) gp = fpmul(gp, factors[i], p);
    for (std::size_t i = half; i < factors.size(); ++i) hp = fpmul(hp, factors[i], p);
    // g carries the leading coefficient
    Int lc = f.back();
    ModCtx cp{Int(static_cast<unsigned long>(p))};
    ZPoly g = mreduce(detail::zscale(cp.reduce(lc), from_fp(gp)), cp);
    ZPoly h = from_fp(hp);
    FpPoly sp, tp;
    fp_ext_euclid(to_fp(g, p), hp, p, sp, tp);
    HenselPair pair{g, h, from_fp(sp), from_fp(tp)};
    Int m(static_cast<unsigned long>(p));
    while (m < target) {
        pair = hensel_step(f, pair, m);
        m = m * m;
    }
    std::vector<FpPoly> left(factors.begin(), factors.begin() + half);
    std::vector<FpPoly> right(factors.begin() + half, factors.end());
    Int m1, m2;
    multilift(pair.g, left, p, target, out, m1);
    multilift(pair.h, right, p, target, out, m2);
    final_mod = m;
}

bool ztry_div(const ZPoly& a, const ZPoly& b, ZPoly& quo) {
    try {
        quo = detail::zdivexact(a, b);
        return true;
    } catch (const DegenerateInput&) {
        return false;
    }
}

// factorization of a primitive squarefree integer polynomial, degree >= 1
std::vector<ZPoly> factor_squarefree_z(ZPoly f) {
    std::vector<ZPoly> out;
    if (zdeg(f) == 1) {
        out.push_back(f);
        return out;
    }
    static const std::uint64_t primes[] = {
        10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079, 10091, 10093,
        10099, 10103, 10111, 10133, 10139, 10141, 10151, 10159, 10163, 10169,
        12007, 13001, 14009, 15013, 16033, 17011, 18013, 19001, 20011, 23003};
    std::uint64_t p = 0;
    FpPoly fp_best;
    for (std::uint64_t cand : primes) {
        Int pp(static_cast<unsigned long>(cand));
        if (f.back() % pp == 0) continue;
        FpPoly fbar = to_fp(f, cand);
        if (fpdeg(fbar) != zdeg(f)) continue;
        FpPoly g = fpgcd(fbar, fpderiv(fbar, cand), cand);
        if (fpdeg(g) == 0) {
            p = cand;
            fp_best = fbar;
            break;
        }
    }
    if (p == 0) throw EliminationOverflow("factor: no usable prime found");

    std::vector<FpPoly> modular = factor_modp(fp_best, p);
    if (modular.size() == 1) {
        out.push_back(f);
        return out;
    }
    std::sort(modular.begin(), modular.end(),
              [](const FpPoly& a, const FpPoly& b) { return a.size() < b.size(); });

    // Mignotte-style bound on factor coefficients (times the leading coefficient)
    int n = zdeg(f);
    Int bound = detail::max_abs_coeff(f) * abs(f.back());
    bound *= int_pow(Int(2), static_cast<unsigned long>(n + 2));
    mpz_sqrt(bound.get_mpz_t(), Int(bound * bound * (n + 1)).get_mpz_t());
    Int target = 2 * bound + 1;

    std::vector<ZPoly> lifted;
    Int mod;
    multilift(f, modular, p, target, lifted, mod);
    ModCtx ctx{mod};

    std::vector<int> alive(lifted.size());
    std::iota(alive.begin(), alive.end(), 0);
    ZPoly rem = f;

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        ZPoly cand{ctx.reduce(rem.back())};
        for (int idx : subset) cand = mmul(cand, lifted[static_cast<std::size_t>(idx)], ctx);
        for (auto& c : cand) c = ctx.symmetric(c);
        detail::ztrim(cand);
        if (cand.empty()) return false;
        cand = detail::zprimitive(cand);
        ZPoly quo;
        if (!ztry_div(rem, cand, quo)) return false;
        out.push_back(cand);
        rem = detail::zprimitive(quo);
        return true;
    };

    auto next_combination = [](std::vector<std::size_t>& c, std::size_t n) -> bool {
        std::size_t k = c.size();
        for (std::size_t i = k; i-- > 0;) {
            if (c[i] != i + n - k) {
                ++c[i];
                for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    std::size_t subset_size = 1;
    while (2 * subset_size <= alive.size()) {
        std::vector<std::size_t> comb(subset_size);
        std::iota(comb.begin(), comb.end(), 0);
        bool found = false;
        do {
            std::vector<int> pick(subset_size);
            for (std::size_t i = 0; i < subset_size; ++i) pick[i] = alive[comb[i]];
            if (try_subset(pick)) {
                std::vector<int> next;
                for (std::size_t i = 0, j = 0; i < alive.size(); ++i) {
                    if (j < subset_size && comb[j] == i) { ++j; continue; }
                    next.push_back(alive[i]);
                }
                alive = std::move(next);
                found = true;
                break;
            }
        } while (next_combination(comb, alive.size()));
        if (!found) ++subset_size;
    }
    if (zdeg(rem) > 0) out.push_back(detail::zprimitive(rem));
    return out;
}

} // namespace

std::vector<std::pair<UniPoly, int>> factor_rational(const UniPoly& p) {
    if (p.zero()) throw ZeroInput("factor_rational: zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() == 0) return out;
    for (const auto& [sf, mult] : squarefree_decomposition(p)) {
        auto [zf, den] = detail::to_zpoly(sf);
        (void)den;
        zf = detail::zprimitive(zf);
        // pull out a power of x first so constant terms are nonzero
        std::size_t v = 0;
        while (v < zf.size() && zf[v] == 0) ++v;
        if (v > 0) {
            out.emplace_back(UniPoly::monomial(Rat(1), 1), mult);
            zf.erase(zf.begin(), zf.begin() + static_cast<long>(v));
        }
        if (detail::zdeg(zf) >= 1)
            for (const auto& irr : factor_squarefree_z(zf))
                out.emplace_back(detail::from_zpoly(irr).monic(), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        if (a.second != b.second) return a.second < b.second;
        for (int i = 0; i <= a.first.degree(); ++i) {
            const Rat &x = a.first[static_cast<std::size_t>(i)], &y = b.first[static_cast<std::size_t>(i)];
            if (x != y) return x < y;
        }
        return false;
    });
    return out;
}

bool is_irreducible(const UniPoly& p) {
    if (p.degree() <= 0) return false;
    if (p.degree() == 1) return true;
    auto f = factor_rational(p);
    return f.size() == 1 && f[0].second == 1 && f[0].first.degree() == p.degree();
}

std::vector<std::pair<Rat, int>> rational_roots(const UniPoly& p) {
    if (p.zero()) throw ZeroInput("rational_roots: zero polynomial");
    std::vector<std::pair<Rat, int>> out;
    for (const auto& [f, mult] : factor_rational(p))
        if (f.degree() == 1) out.emplace_back(-f[0], mult);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace rigidcurves
