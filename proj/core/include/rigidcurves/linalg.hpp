#ifndef RIGIDCURVES_LINALG_HPP
#define RIGIDCURVES_LINALG_HPP

#include <array>
#include <vector>

#include "rigidcurves/rat.hpp"

namespace rigidcurves {

using QVec = std::vector<Rat>;
using QMatrix = std::vector<QVec>;  // row major

// basis of the right nullspace of a (possibly non-square) matrix
std::vector<QVec> nullspace(QMatrix m);

// solves m x = rhs; throws SingularMatrix when no unique solution exists
QVec solve_linear(QMatrix m, QVec rhs);

// Newton interpolation through (xs[i], ys[i]) with distinct xs
QVec interpolate(const QVec& xs, const QVec& ys);

struct Mat3 {
    std::array<std::array<Rat, 3>, 3> a{};

    static Mat3 identity();
    static Mat3 diag(const Rat& x, const Rat& y, const Rat& z);
    static Mat3 from_rows(const std::array<Rat, 3>& r0, const std::array<Rat, 3>& r1,
                          const std::array<Rat, 3>& r2);

    Rat det() const;
    Mat3 adjugate() const;  // det * inverse
    Mat3 inverse() const;   // throws SingularMatrix
    friend Mat3 operator*(const Mat3& m, const Mat3& n);
    std::array<Rat, 3> apply(const std::array<Rat, 3>& v) const;
    friend bool operator==(const Mat3& m, const Mat3& n);
};

} // namespace rigidcurves

#endif
