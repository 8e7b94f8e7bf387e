#ifndef RIGIDCURVES_TRIVAR_HPP
#define RIGIDCURVES_TRIVAR_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rigidcurves/extfield.hpp"
#include "rigidcurves/linalg.hpp"
#include "rigidcurves/poly.hpp"

namespace rigidcurves {

using Expo = std::array<int, 3>;

// Sparse polynomial in three variables over Q. Homogeneous instances double
// as ternary forms; is_homogeneous() checks the invariant.
class Trivar {
  public:
    Trivar() = default;
    explicit Trivar(const Rat& c);
    static Trivar monomial(const Rat& c, const Expo& e);
    static Trivar variable(int i);  // z1, z2, z3 for i = 0, 1, 2

    bool zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for zero
    int degree_in(int var) const;
    bool is_homogeneous() const;
    const std::map<Expo, Rat>& terms() const { return terms_; }
    Rat coeff(const Expo& e) const;

    friend Trivar operator+(const Trivar& a, const Trivar& b);
    friend Trivar operator-(const Trivar& a, const Trivar& b);
    friend Trivar operator*(const Trivar& a, const Trivar& b);
    friend Trivar operator*(const Rat& c, const Trivar& a);
    Trivar operator-() const;
    friend bool operator==(const Trivar& a, const Trivar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Trivar& a, const Trivar& b) { return !(a == b); }

    Trivar partial(int var) const;
    Trivar pow(int e) const;

    template <class K>
    K eval(const std::array<K, 3>& p) const {
        K acc{};
        for (const auto& [e, c] : terms_) {
            K t(1);
            for (int v = 0; v < 3; ++v)
                for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k) t = t * p[static_cast<std::size_t>(v)];
            acc = acc + K(c) * t;
        }
        return acc;
    }

    // substitute z_i <- sum_j m[i][j] z_j
    Trivar substitute(const Mat3& m) const;
    // substitute a single variable by a trivariate polynomial
    Trivar substitute_var(int var, const Trivar& value) const;

    // collect as a univariate polynomial in `var` with Trivar coefficients
    std::vector<Trivar> coeffs_in(int var) const;

    // exact division; throws DegenerateInput if not divisible
    friend Trivar exact_div(const Trivar& a, const Trivar& b);
    bool divisible_by(const Trivar& b) const;

    // integer-primitive with glex-leading coefficient positive
    Trivar normalized() const;

    std::string str(const std::array<std::string, 3>& vars = {"z1", "z2", "z3"}) const;

    // deterministic ordering for canonical forms
    friend bool operator<(const Trivar& a, const Trivar& b) { return a.terms_ < b.terms_; }

  private:
    void insert(const Expo& e, const Rat& c);
    std::map<Expo, Rat> terms_;
};

// resultant of a and b with respect to one variable (Sylvester matrix with
// polynomial entries, fraction-free elimination). Throws ZeroInput when either
// input is identically zero.
Trivar resultant_eliminate(const Trivar& a, const Trivar& b, int var);

// homogenize a bivariate polynomial in z_i, z_j (others absent) to a form of
// the given degree using variable z_k
Trivar homogenize(const Trivar& affine, int var, int degree);

// --- bivariate views ---------------------------------------------------

// f(x, y) = sum_j c_j(x) y^j with c_j univariate in x
template <class K>
using Biv = Poly<Poly<K>>;

using BivQ = Biv<Rat>;
using BivE = Biv<ExtScalar>;

// chart k: z_k = 1; x, y are the remaining coordinates in increasing index order
BivQ dehomogenize(const Trivar& f, int chart);
Trivar rehomogenize(const BivQ& f, int chart, int degree);

UniPoly biv_eval_y(const BivQ& f, const Rat& y);
UniPoly biv_eval_x(const BivQ& f, const Rat& x);

BivE lift_biv(const BivQ& f);
BivE biv_shift(const BivE& f, const ExtScalar& x0, const ExtScalar& y0);  // f(x+x0, y+y0)

template <class K>
Biv<K> biv_swap_xy(const Biv<K>& f) {
    Biv<K> r;
    for (int j = 0; j <= f.degree(); ++j) {
        const Poly<K>& row = f[static_cast<std::size_t>(j)];
        for (int i = 0; i <= row.degree(); ++i) {
            if (is_zero(row[static_cast<std::size_t>(i)])) continue;
            Poly<K> inner = r[static_cast<std::size_t>(i)];
            inner.set_coeff(static_cast<std::size_t>(j), row[static_cast<std::size_t>(i)]);
            r.set_coeff(static_cast<std::size_t>(i), inner);
        }
    }
    return r;
}

} // namespace rigidcurves

#endif
