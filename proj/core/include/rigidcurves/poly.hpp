#ifndef RIGIDCURVES_POLY_HPP
#define RIGIDCURVES_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rigidcurves/errors.hpp"
#include "rigidcurves/rat.hpp"

namespace rigidcurves {

inline Rat inv(const Rat& a) {
    if (is_zero(a)) throw ZeroInput("inverse of zero");
    return Rat(1) / a;
}

// Dense univariate polynomial over a field K, coefficients lowest degree
// first. The zero polynomial is the empty coefficient list.
template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(K c) { coef_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<K> coeffs) : coef_(std::move(coeffs)) { trim(); }

    static Poly monomial(const K& c, std::size_t k) {
        std::vector<K> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }
    static Poly one() { return Poly(K(1)); }

    // degree; -1 for the zero polynomial
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    bool zero() const { return coef_.empty(); }
    const std::vector<K>& coeffs() const { return coef_; }

    const K& operator[](std::size_t i) const {
        static const K kzero{};
        return i < coef_.size() ? coef_[i] : kzero;
    }
    void set_coeff(std::size_t i, K v) {
        if (i >= coef_.size()) coef_.resize(i + 1);
        coef_[i] = std::move(v);
        trim();
    }
    const K& lc() const {
        if (coef_.empty()) throw ZeroInput("leading coefficient of zero polynomial");
        return coef_.back();
    }
    // order of vanishing at 0; degree+1 style sentinel for the zero polynomial
    int valuation() const {
        if (coef_.empty()) return -1;
        for (std::size_t i = 0; i < coef_.size(); ++i)
            if (!is_zero(coef_[i])) return static_cast<int>(i);
        return -1;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.coef_.size(), b.coef_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.coef_.size(), b.coef_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<K> r(coef_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = -coef_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return {};
        std::vector<K> r(a.coef_.size() + b.coef_.size() - 1);
        for (std::size_t i = 0; i < a.coef_.size(); ++i) {
            if (is_zero(a.coef_[i])) continue;
            for (std::size_t j = 0; j < b.coef_.size(); ++j)
                r[i + j] = r[i + j] + a.coef_[i] * b.coef_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const K& c, const Poly& p) {
        std::vector<K> r(p.coef_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * p.coef_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& p, const K& c) { return c * p; }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.coef_.size() != b.coef_.size()) return false;
        for (std::size_t i = 0; i < a.coef_.size(); ++i)
            if (!(a.coef_[i] == b.coef_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // quotient/remainder; divisor must be nonzero
    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.zero()) throw ZeroInput("polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly{}, a};
        std::vector<K> rem = a.coef_;
        std::vector<K> quo(a.coef_.size() - b.coef_.size() + 1);
        K blc_inv = inv(b.lc());
        for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
            K q = rem[k + b.degree()] * blc_inv;
            if (is_zero(q)) continue;
            quo[k] = q;
            for (std::size_t j = 0; j < b.coef_.size(); ++j)
                rem[k + j] = rem[k + j] - q * b.coef_[j];
        }
        Poly r(std::move(rem));
        return {Poly(std::move(quo)), std::move(r)};
    }

    Poly derivative() const {
        if (coef_.size() <= 1) return {};
        std::vector<K> r(coef_.size() - 1);
        for (std::size_t i = 1; i < coef_.size(); ++i) r[i - 1] = K(static_cast<long>(i)) * coef_[i];
        return Poly(std::move(r));
    }

    K eval(const K& x) const {
        K acc{};
        for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * x + coef_[i];
        return acc;
    }

    Poly compose(const Poly& inner) const {
        Poly acc;
        for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * inner + Poly(coef_[i]);
        return acc;
    }

    // p(x + c)
    Poly shift(const K& c) const {
        Poly acc;
        Poly x_plus_c(std::vector<K>{c, K(1)});
        return compose(x_plus_c);
    }

    // coefficients reversed relative to the given degree bound (default: own degree)
    Poly reversed(int deg_bound = -1) const {
        if (zero()) return {};
        int n = deg_bound < 0 ? degree() : deg_bound;
        if (n < degree()) throw DegenerateInput("reversed: bound below degree");
        std::vector<K> r(static_cast<std::size_t>(n) + 1);
        for (std::size_t i = 0; i < coef_.size(); ++i) r[n - i] = coef_[i];
        return Poly(std::move(r));
    }

    Poly truncated(std::size_t n) const {  // mod x^n
        std::vector<K> r(coef_.begin(), coef_.begin() + std::min(coef_.size(), n));
        return Poly(std::move(r));
    }
    Poly shifted_down(std::size_t n) const {  // exact division by x^n
        if (zero()) return {};
        for (std::size_t i = 0; i < n && i < coef_.size(); ++i)
            if (!is_zero(coef_[i])) throw DegenerateInput("shifted_down: not divisible by x^n");
        if (coef_.size() <= n) return {};
        std::vector<K> r(coef_.begin() + n, coef_.end());
        return Poly(std::move(r));
    }
    Poly shifted_up(std::size_t n) const {  // multiply by x^n
        if (zero()) return {};
        std::vector<K> r(coef_.size() + n);
        std::copy(coef_.begin(), coef_.end(), r.begin() + n);
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (zero()) return {};
        return inv(lc()) * *this;
    }

  private:
    void trim() {
        while (!coef_.empty() && is_zero(coef_.back())) coef_.pop_back();
    }
    std::vector<K> coef_;
};

// lets nested Poly<Poly<K>> reuse the generic ring operations
template <class K>
bool is_zero(const Poly<K>& p) { return p.zero(); }

template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.zero()) throw DegenerateInput("exact_div: nonzero remainder");
    return q;
}

// Monic gcd by the Euclidean algorithm over a field. Poly<Rat> has a
// growth-controlled overload in poly.cpp.
template <class K>
Poly<K> gcd_monic_euclid(Poly<K> a, Poly<K> b) {
    while (!b.zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.zero()) return {};
    return a.monic();
}

using UniPoly = Poly<Rat>;

// --- Rat-specialized routines (integer kernels; definitions in poly.cpp) ---

// gcd via primitive subresultant sequences over Z; result monic.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);

// resultant of two rational polynomials
Rat resultant(const UniPoly& p, const UniPoly& q);

// clears denominators and integer content; sign of leading coefficient > 0
UniPoly primitive_part(const UniPoly& p);

// largest k with (t - r)^k | p; p must be nonzero
int root_multiplicity(const UniPoly& p, const Rat& r);

// square-free decomposition (Yun): returns list of (factor, multiplicity)
// with factors monic, pairwise coprime, multiplicities increasing.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// p / gcd(p, p'), monic
UniPoly squarefree_part(const UniPoly& p);

// all rational roots with multiplicities
std::vector<std::pair<Rat, int>> rational_roots(const UniPoly& p);

// exact integral over [0, 1]
Rat integrate_unit_interval(const UniPoly& p);

std::string to_string(const UniPoly& p, const std::string& var = "t");

} // namespace rigidcurves

#endif
