#include "rigidcurves/extfield.hpp"

#include <sstream>

#include "rigidcurves/errors.hpp"
#include "rigidcurves/factor.hpp"
#include "rigidcurves/linalg.hpp"

namespace rigidcurves {

std::shared_ptr<const ExtField> ExtField::make(const UniPoly& modulus) {
    if (modulus.degree() < 1) throw DegenerateInput("ExtField: modulus must have degree >= 1");
    UniPoly m = modulus.monic();
    bool trusted = false;
    if (m.degree() <= 8) {
        if (!is_irreducible(m)) throw DegenerateInput("ExtField: reducible modulus");
    } else {
        trusted = true;  // accepted without a certificate at this degree
    }
    return std::shared_ptr<const ExtField>(new ExtField(std::move(m), trusted));
}

const FieldPtr& ExtField::rationals() {
    static const FieldPtr q = std::shared_ptr<const ExtField>(
        new ExtField(UniPoly::monomial(Rat(1), 1), false));  // Q[y]/(y)
    return q;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return (!a && !b);
    return a->modulus() == b->modulus();
}

ExtScalar::ExtScalar(UniPoly rep, FieldPtr ctx) : rep_(std::move(rep)), ctx_(std::move(ctx)) {
    if (!ctx_) {
        if (rep_.degree() > 0) throw DegenerateInput("ExtScalar: nonconstant rep without field");
        return;
    }
    if (rep_.degree() >= ctx_->degree()) {
        auto [q, r] = divrem(rep_, ctx_->modulus());
        (void)q;
        rep_ = std::move(r);
    }
    if (ctx_->is_rational()) {
        // collapse the trivial extension
        ctx_ = nullptr;
    }
}

ExtScalar ExtScalar::generator(const FieldPtr& ctx) {
    return ExtScalar(UniPoly::monomial(Rat(1), 1), ctx);
}

Rat ExtScalar::as_rational() const {
    if (!rational()) throw DegenerateInput("ExtScalar: not rational");
    return rep_.zero() ? Rat(0) : rep_[0];
}

namespace {

// establishes a common context for mixed arithmetic
const FieldPtr& join(const ExtScalar& a, const ExtScalar& b) {
    static const FieldPtr none = nullptr;
    if (a.ctx() && b.ctx()) {
        if (!same_field(a.ctx(), b.ctx()))
            throw DegenerateInput("ExtScalar: elements of different fields");
        return a.ctx();
    }
    if (a.ctx()) return a.ctx();
    if (b.ctx()) return b.ctx();
    return none;
}

} // namespace

ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
    return ExtScalar(a.rep() + b.rep(), join(a, b));
}
ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) {
    return ExtScalar(a.rep() - b.rep(), join(a, b));
}
ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
    return ExtScalar(a.rep() * b.rep(), join(a, b));
}
ExtScalar ExtScalar::operator-() const { return ExtScalar(-rep_, ctx_); }

bool operator==(const ExtScalar& a, const ExtScalar& b) {
    if (a.ctx() && b.ctx() && !same_field(a.ctx(), b.ctx())) return false;
    return a.rep() == b.rep();
}

bool is_zero(const ExtScalar& a) { return a.rep().zero(); }

ExtScalar inv(const ExtScalar& a) {
    if (is_zero(a)) throw ZeroInput("ExtScalar: inverse of zero");
    if (a.rational()) return ExtScalar(inv(a.as_rational()));
    // extended euclid: s*rep + t*modulus = 1
    UniPoly r0 = a.ctx()->modulus(), r1 = a.rep();
    UniPoly t0, t1 = UniPoly::one();
    while (!r1.zero()) {
        auto [q, r] = divrem(r0, r1);
        UniPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0)
        throw DegenerateInput("ExtScalar: non-invertible element (reducible modulus?)");
    return ExtScalar(inv(r0[0]) * t0, a.ctx());
}

ExtScalar ext_pow(const ExtScalar& a, long e) {
    if (e < 0) return inv(ext_pow(a, -e));
    ExtScalar r(1);
    ExtScalar b = a;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

std::string ExtScalar::str() const {
    if (rational()) return to_string(as_rational());
    std::ostringstream os;
    os << to_string(rep_, "y");
    return os.str();
}

UniPoly minimal_polynomial(const ExtScalar& a) {
    if (a.rational()) return UniPoly(std::vector<Rat>{-a.as_rational(), Rat(1)});
    int d = a.ctx()->degree();
    // powers of a in the y-basis, as columns; find the first linear relation
    std::vector<UniPoly> pows;
    ExtScalar cur(1);
    for (int k = 0; k <= d; ++k) {
        pows.push_back(cur.rep());
        cur = cur * a;
    }
    for (int deg = 1; deg <= d; ++deg) {
        // seek monic relation a^deg = sum_{k<deg} c_k a^k
        QMatrix m(static_cast<std::size_t>(d), QVec(static_cast<std::size_t>(deg), Rat(0)));
        QVec rhs(static_cast<std::size_t>(d), Rat(0));
        for (int row = 0; row < d; ++row) {
            for (int k = 0; k < deg; ++k)
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] =
                    pows[static_cast<std::size_t>(k)][static_cast<std::size_t>(row)];
            rhs[static_cast<std::size_t>(row)] = pows[static_cast<std::size_t>(deg)][static_cast<std::size_t>(row)];
        }
        try {
            QVec c = solve_linear(m, rhs);
            std::vector<Rat> coeffs(static_cast<std::size_t>(deg) + 1);
            for (int k = 0; k < deg; ++k) coeffs[static_cast<std::size_t>(k)] = -c[static_cast<std::size_t>(k)];
            coeffs[static_cast<std::size_t>(deg)] = Rat(1);
            return UniPoly(std::move(coeffs));
        } catch (const SingularMatrix&) {
            continue;
        }
    }
    throw DegenerateInput("minimal_polynomial: no relation found");
}

ExtPoly lift_to_ext(const UniPoly& p, const FieldPtr& ctx) {
    std::vector<ExtScalar> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ExtScalar(p.coeffs()[i]);
    (void)ctx;
    return ExtPoly(std::move(c));
}

ExtScalar eval_at(const UniPoly& p, const ExtScalar& x) {
    ExtScalar acc(0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + ExtScalar(p.coeffs()[i]);
    return acc;
}

} // namespace rigidcurves
