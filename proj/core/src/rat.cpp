#include "rigidcurves/rat.hpp"

#include "rigidcurves/errors.hpp"

namespace rigidcurves {

bool is_zero(const Rat& a) { return sgn(a) == 0; }

bool is_integer(const Rat& a) { return a.get_den() == 1; }

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) throw ParseError("malformed rational: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& a) { return a.get_str(); }

Rat rat_pow(const Rat& a, long e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && sgn(a) == 0) throw ZeroInput("rat_pow: negative power of zero");
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), k);
    r.canonicalize();
    if (inv) return Rat(1) / r;
    return r;
}

Int int_pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

Rat binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Rat(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(r);
}

long long to_ll(const Int& a) {
    if (!a.fits_slong_p()) throw std::overflow_error("integer too large for long");
    return a.get_si();
}

} // namespace rigidcurves
