#include "rigidcurves/trivar.hpp"

#include <sstream>

#include "rigidcurves/errors.hpp"

namespace rigidcurves {

namespace {

// graded lex with z1 > z2 > z3; returns true if a comes before b
bool glex_before(const Expo& a, const Expo& b) {
    int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    if (a[0] != b[0]) return a[0] > b[0];
    if (a[1] != b[1]) return a[1] > b[1];
    return a[2] > b[2];
}

} // namespace

Trivar::Trivar(const Rat& c) {
    if (!is_zero(c)) terms_[{0, 0, 0}] = c;
}

Trivar Trivar::monomial(const Rat& c, const Expo& e) {
    Trivar t;
    if (!is_zero(c)) t.terms_[e] = c;
    return t;
}

Trivar Trivar::variable(int i) {
    Expo e{0, 0, 0};
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(Rat(1), e);
}

int Trivar::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

int Trivar::degree_in(int var) const {
    int d = 0;
    bool any = false;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e[static_cast<std::size_t>(var)]);
        any = true;
    }
    return any ? d : -1;
}

bool Trivar::is_homogeneous() const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
        int t = e[0] + e[1] + e[2];
        if (d == -2) d = t;
        else if (t != d) return false;
    }
    return true;
}

Rat Trivar::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Trivar::insert(const Expo& e, const Rat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!is_zero(c)) terms_[e] = c;
    } else {
        it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

Trivar operator+(const Trivar& a, const Trivar& b) {
    Trivar r = a;
    for (const auto& [e, c] : b.terms_) r.insert(e, c);
    return r;
}

Trivar operator-(const Trivar& a, const Trivar& b) {
    Trivar r = a;
    for (const auto& [e, c] : b.terms_) r.insert(e, -c);
    return r;
}

Trivar Trivar::operator-() const {
    Trivar r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Trivar operator*(const Trivar& a, const Trivar& b) {
    Trivar r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.insert({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

Trivar operator*(const Rat& c, const Trivar& a) {
    Trivar r;
    if (is_zero(c)) return r;
    for (const auto& [e, x] : a.terms_) r.terms_[e] = c * x;
    return r;
}

Trivar Trivar::partial(int var) const {
    Trivar r;
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        Expo ne = e;
        ne[static_cast<std::size_t>(var)] = k - 1;
        r.insert(ne, Rat(k) * c);
    }
    return r;
}

Trivar Trivar::pow(int e) const {
    Trivar r(Rat(1));
    Trivar b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Trivar Trivar::substitute(const Mat3& m) const {
    // precompute powers of the images of the variables
    std::array<Trivar, 3> img;
    for (int i = 0; i < 3; ++i) {
        Trivar li;
        for (int j = 0; j < 3; ++j)
            li = li + m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * Trivar::variable(j);
        img[static_cast<std::size_t>(i)] = li;
    }
    std::array<std::vector<Trivar>, 3> pows;
    for (int v = 0; v < 3; ++v) {
        pows[static_cast<std::size_t>(v)].push_back(Trivar(Rat(1)));
        int dmax = degree_in(v);
        for (int k = 1; k <= dmax; ++k)
            pows[static_cast<std::size_t>(v)].push_back(pows[static_cast<std::size_t>(v)].back() *
                                                        img[static_cast<std::size_t>(v)]);
    }
    Trivar r;
    for (const auto& [e, c] : terms_) {
        Trivar t = c * pows[0][static_cast<std::size_t>(e[0])];
        t = t * pows[1][static_cast<std::size_t>(e[1])];
        t = t * pows[2][static_cast<std::size_t>(e[2])];
        r = r + t;
    }
    return r;
}

Trivar Trivar::substitute_var(int var, const Trivar& value) const {
    std::vector<Trivar> pows{Trivar(Rat(1))};
    int dmax = degree_in(var);
    for (int k = 1; k <= dmax; ++k) pows.push_back(pows.back() * value);
    Trivar r;
    for (const auto& [e, c] : terms_) {
        Expo rest = e;
        int k = e[static_cast<std::size_t>(var)];
        rest[static_cast<std::size_t>(var)] = 0;
        r = r + Trivar::monomial(c, rest) * pows[static_cast<std::size_t>(k)];
    }
    return r;
}

std::vector<Trivar> Trivar::coeffs_in(int var) const {
    int d = degree_in(var);
    std::vector<Trivar> out(static_cast<std::size_t>(std::max(d + 1, 0)));
    for (const auto& [e, c] : terms_) {
        Expo rest = e;
        int k = e[static_cast<std::size_t>(var)];
        rest[static_cast<std::size_t>(var)] = 0;
        out[static_cast<std::size_t>(k)].insert(rest, c);
    }
    return out;
}

bool Trivar::divisible_by(const Trivar& b) const {
    try {
        exact_div(*this, b);
        return true;
    } catch (const DegenerateInput&) {
        return false;
    }
}

Trivar exact_div(const Trivar& a, const Trivar& b) {
    if (b.zero()) throw ZeroInput("Trivar exact_div: division by zero");
    Trivar rem = a, quo;
    // glex-leading term of b
    auto lead = [](const Trivar& p) {
        const Expo* best = nullptr;
        for (const auto& [e, c] : p.terms())
            if (!best || glex_before(e, *best)) best = &e;
        return *best;
    };
    Expo lb = lead(b);
    Rat cb = b.coeff(lb);
    while (!rem.zero()) {
        Expo la = lead(rem);
        Expo q{la[0] - lb[0], la[1] - lb[1], la[2] - lb[2]};
        if (q[0] < 0 || q[1] < 0 || q[2] < 0)
            throw DegenerateInput("Trivar exact_div: not divisible");
        Trivar qt = Trivar::monomial(rem.coeff(la) / cb, q);
        quo = quo + qt;
        rem = rem - qt * b;
    }
    return quo;
}

Trivar Trivar::normalized() const {
    if (zero()) return {};
    // clear denominators, strip integer content, make glex-leading coeff positive
    Int den(1);
    for (const auto& [e, c] : terms_) {
        Int d = c.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    Int content(0);
    for (const auto& [e, c] : terms_) {
        Int n = Rat(c * Rat(den)).get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
    const Expo* best = nullptr;
    for (const auto& [e, c] : terms_)
        if (!best || glex_before(e, *best)) best = &e;
    if (sgn(coeff(*best)) < 0) content = -content;
    Trivar r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * Rat(den) / Rat(content);
    return r;
}

std::string Trivar::str(const std::array<std::string, 3>& vars) const {
    if (zero()) return "0";
    // print in glex order
    std::vector<std::pair<Expo, Rat>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return glex_before(a.first, b.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : items) {
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        Rat a = abs(c);
        bool unit = (a == 1) && (e[0] + e[1] + e[2] > 0);
        if (!unit) os << a.get_str();
        bool needstar = !unit;
        for (int v = 0; v < 3; ++v) {
            int k = e[static_cast<std::size_t>(v)];
            if (k == 0) continue;
            if (needstar) os << "*";
            os << vars[static_cast<std::size_t>(v)];
            if (k > 1) os << "^" << k;
            needstar = true;
        }
        first = false;
    }
    return os.str();
}

namespace {

// fraction-free determinant of a matrix of polynomials (Bareiss)
Trivar bareiss_det(std::vector<std::vector<Trivar>> m) {
    std::size_t n = m.size();
    if (n == 0) return Trivar(Rat(1));
    Trivar prev(Rat(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].zero()) {
            std::size_t sel = k + 1;
            while (sel < n && m[sel][k].zero()) ++sel;
            if (sel == n) return Trivar();  // singular
            std::swap(m[sel], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Trivar num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(num, prev);
            }
        prev = m[k][k];
    }
    Trivar d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

} // namespace

Trivar resultant_eliminate(const Trivar& a, const Trivar& b, int var) {
    if (a.zero() || b.zero()) throw ZeroInput("resultant_eliminate: zero input");
    auto ca = a.coeffs_in(var);
    auto cb = b.coeffs_in(var);
    int da = static_cast<int>(ca.size()) - 1;
    int db = static_cast<int>(cb.size()) - 1;
    if (da <= 0 && db <= 0) throw DegenerateInput("resultant_eliminate: neither input involves the variable");
    if (da <= 0) return ca.empty() ? Trivar() : ca[0].pow(db);
    if (db <= 0) return cb.empty() ? Trivar() : cb[0].pow(da);
    std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<Trivar>> syl(n, std::vector<Trivar>(n));
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k)
            syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
                ca[static_cast<std::size_t>(da - k)];
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k)
            syl[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + k)] =
                cb[static_cast<std::size_t>(db - k)];
    return bareiss_det(std::move(syl));
}

Trivar homogenize(const Trivar& affine, int var, int degree) {
    Trivar r;
    for (const auto& [e, c] : affine.terms()) {
        int t = e[0] + e[1] + e[2];
        if (t > degree) throw DegenerateInput("homogenize: degree too small");
        Expo ne = e;
        ne[static_cast<std::size_t>(var)] += degree - t;
        r = r + Trivar::monomial(c, ne);
    }
    return r;
}

BivQ dehomogenize(const Trivar& f, int chart) {
    int xi = chart == 0 ? 1 : 0;
    int yi = chart == 2 ? 1 : 2;
    BivQ r;
    for (const auto& [e, c] : f.terms()) {
        std::size_t i = static_cast<std::size_t>(e[static_cast<std::size_t>(xi)]);
        std::size_t j = static_cast<std::size_t>(e[static_cast<std::size_t>(yi)]);
        UniPoly inner = r[j];
        inner.set_coeff(i, inner[i] + c);
        r.set_coeff(j, inner);
    }
    return r;
}

Trivar rehomogenize(const BivQ& f, int chart, int degree) {
    int xi = chart == 0 ? 1 : 0;
    int yi = chart == 2 ? 1 : 2;
    Trivar r;
    for (int j = 0; j <= f.degree(); ++j) {
        const UniPoly& row = f[static_cast<std::size_t>(j)];
        for (int i = 0; i <= row.degree(); ++i) {
            const Rat& c = row[static_cast<std::size_t>(i)];
            if (is_zero(c)) continue;
            if (i + j > degree) throw DegenerateInput("rehomogenize: degree too small");
            Expo e{0, 0, 0};
            e[static_cast<std::size_t>(xi)] = i;
            e[static_cast<std::size_t>(yi)] = j;
            e[static_cast<std::size_t>(chart)] = degree - i - j;
            r = r + Trivar::monomial(c, e);
        }
    }
    return r;
}

UniPoly biv_eval_y(const BivQ& f, const Rat& y) {
    UniPoly acc;
    for (int j = f.degree(); j >= 0; --j) acc = y * acc + f[static_cast<std::size_t>(j)];
    return acc;
}

UniPoly biv_eval_x(const BivQ& f, const Rat& x) {
    std::vector<Rat> out;
    for (int j = 0; j <= f.degree(); ++j) out.push_back(f[static_cast<std::size_t>(j)].eval(x));
    return UniPoly(std::move(out));
}

BivE lift_biv(const BivQ& f) {
    BivE r;
    for (int j = 0; j <= f.degree(); ++j) {
        const UniPoly& row = f[static_cast<std::size_t>(j)];
        std::vector<ExtScalar> c(row.coeffs().size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = ExtScalar(row.coeffs()[i]);
        r.set_coeff(static_cast<std::size_t>(j), ExtPoly(std::move(c)));
    }
    return r;
}

BivE biv_shift(const BivE& f, const ExtScalar& x0, const ExtScalar& y0) {
    // shift inner variable first, then outer via Horner in (y + y0)
    BivE shifted_x;
    for (int j = 0; j <= f.degree(); ++j)
        shifted_x.set_coeff(static_cast<std::size_t>(j), f[static_cast<std::size_t>(j)].shift(x0));
    BivE acc;
    BivE ylin;  // y + y0
    ylin.set_coeff(0, ExtPoly(y0));
    ylin.set_coeff(1, ExtPoly(ExtScalar(1)));
    for (int j = shifted_x.degree(); j >= 0; --j) {
        BivE c;
        c.set_coeff(0, shifted_x[static_cast<std::size_t>(j)]);
        acc = acc * ylin + c;
    }
    return acc;
}

} // namespace rigidcurves
