#ifndef RIGIDCURVES_EXTFIELD_HPP
#define RIGIDCURVES_EXTFIELD_HPP

#include <memory>
#include <string>

#include "rigidcurves/poly.hpp"

namespace rigidcurves {

// Number field Q[y]/(modulus). The modulus is monic; irreducibility is
// verified up to degree 8 and trusted (flagged) above that.
class ExtField {
  public:
    static std::shared_ptr<const ExtField> make(const UniPoly& modulus);
    // the rationals, treated uniformly as the trivial extension
    static const std::shared_ptr<const ExtField>& rationals();

    const UniPoly& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }
    bool trusted_irreducible() const { return trusted_; }
    bool is_rational() const { return modulus_.degree() == 1; }

  private:
    ExtField(UniPoly m, bool trusted) : modulus_(std::move(m)), trusted_(trusted) {}
    UniPoly modulus_;
    bool trusted_;
};

using FieldPtr = std::shared_ptr<const ExtField>;

bool same_field(const FieldPtr& a, const FieldPtr& b);

// Element of a number field; rationals embed with a null-degree rep.
class ExtScalar {
  public:
    ExtScalar() : rep_() {}
    ExtScalar(long v) : rep_(Rat(v)) {}
    ExtScalar(int v) : rep_(Rat(v)) {}
    explicit ExtScalar(const Rat& v) : rep_(v) {}
    ExtScalar(UniPoly rep, FieldPtr ctx);

    // the generator ybar of the field
    static ExtScalar generator(const FieldPtr& ctx);

    const UniPoly& rep() const { return rep_; }
    const FieldPtr& ctx() const { return ctx_; }

    bool rational() const { return rep_.degree() <= 0; }
    Rat as_rational() const;  // throws if not rational

    friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b);
    friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b);
    friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b);
    ExtScalar operator-() const;
    friend bool operator==(const ExtScalar& a, const ExtScalar& b);
    friend bool operator!=(const ExtScalar& a, const ExtScalar& b) { return !(a == b); }

    std::string str() const;

  private:
    UniPoly rep_;   // reduced mod the field modulus; degree < deg(modulus)
    FieldPtr ctx_;  // null for plain rationals
};

bool is_zero(const ExtScalar& a);
ExtScalar inv(const ExtScalar& a);
ExtScalar ext_pow(const ExtScalar& a, long e);

inline ExtScalar operator/(const ExtScalar& a, const ExtScalar& b) { return a * inv(b); }

// minimal polynomial of a over Q (monic, irreducible)
UniPoly minimal_polynomial(const ExtScalar& a);

using ExtPoly = Poly<ExtScalar>;

ExtPoly lift_to_ext(const UniPoly& p, const FieldPtr& ctx);
// evaluate a rational-coefficient polynomial at a field element
ExtScalar eval_at(const UniPoly& p, const ExtScalar& x);

} // namespace rigidcurves

#endif
