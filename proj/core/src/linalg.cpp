#include "rigidcurves/linalg.hpp"

#include "rigidcurves/errors.hpp"

namespace rigidcurves {

namespace {

// reduced row echelon form; returns pivot column per row. Pivots are only
// taken among the first `pivot_limit` columns (the rest ride along).
std::vector<int> rref(QMatrix& m, std::size_t pivot_limit) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && is_zero(m[sel][c])) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rat piv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

} // namespace

std::vector<QVec> nullspace(QMatrix m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<QVec> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        QVec v(cols, Rat(0));
        v[free_c] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m[r][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

QVec solve_linear(QMatrix m, QVec rhs) {
    std::size_t rows = m.size();
    if (rows == 0 || rhs.size() != rows) throw SingularMatrix("solve_linear: shape mismatch");
    std::size_t cols = m[0].size();
    for (std::size_t i = 0; i < rows; ++i) m[i].push_back(rhs[i]);
    auto pivots = rref(m, cols);
    // consistency
    for (std::size_t r = pivots.size(); r < rows; ++r)
        if (!is_zero(m[r][cols])) throw SingularMatrix("solve_linear: inconsistent system");
    if (pivots.size() < cols) throw SingularMatrix("solve_linear: underdetermined system");
    QVec x(cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[static_cast<std::size_t>(pivots[r])] = m[r][cols];
    return x;
}

QVec interpolate(const QVec& xs, const QVec& ys) {
    std::size_t n = xs.size();
    if (ys.size() != n || n == 0) throw DegenerateInput("interpolate: shape mismatch");
    // Newton divided differences
    QVec dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n; i-- > level;)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    // expand to monomial coefficients
    QVec coeff(n, Rat(0));
    QVec basis(n, Rat(0));  // current Newton basis polynomial
    basis[0] = Rat(1);
    std::size_t basis_deg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i <= basis_deg; ++i) coeff[i] += dd[k] * basis[i];
        if (k + 1 < n) {
            // basis *= (x - xs[k])
            for (std::size_t i = basis_deg + 1; i-- > 0;) {
                Rat t = basis[i];
                basis[i] = -xs[k] * t;
                if (i + 1 <= n - 1) basis[i + 1] += t;
            }
            ++basis_deg;
        }
    }
    return coeff;
}

Mat3 Mat3::identity() { return diag(Rat(1), Rat(1), Rat(1)); }

Mat3 Mat3::diag(const Rat& x, const Rat& y, const Rat& z) {
    Mat3 m;
    m.a[0][0] = x;
    m.a[1][1] = y;
    m.a[2][2] = z;
    return m;
}

Mat3 Mat3::from_rows(const std::array<Rat, 3>& r0, const std::array<Rat, 3>& r1,
                     const std::array<Rat, 3>& r2) {
    Mat3 m;
    m.a[0] = r0;
    m.a[1] = r1;
    m.a[2] = r2;
    return m;
}

Rat Mat3::det() const {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 Mat3::adjugate() const {
    Mat3 m;
    m.a[0][0] = a[1][1] * a[2][2] - a[1][2] * a[2][1];
    m.a[0][1] = a[0][2] * a[2][1] - a[0][1] * a[2][2];
    m.a[0][2] = a[0][1] * a[1][2] - a[0][2] * a[1][1];
    m.a[1][0] = a[1][2] * a[2][0] - a[1][0] * a[2][2];
    m.a[1][1] = a[0][0] * a[2][2] - a[0][2] * a[2][0];
    m.a[1][2] = a[0][2] * a[1][0] - a[0][0] * a[1][2];
    m.a[2][0] = a[1][0] * a[2][1] - a[1][1] * a[2][0];
    m.a[2][1] = a[0][1] * a[2][0] - a[0][0] * a[2][1];
    m.a[2][2] = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    return m;
}

Mat3 Mat3::inverse() const {
    Rat d = det();
    if (is_zero(d)) throw SingularMatrix("Mat3::inverse: singular matrix");
    Mat3 adj = adjugate();
    Rat id = Rat(1) / d;
    for (auto& row : adj.a)
        for (auto& x : row) x *= id;
    return adj;
}

Mat3 operator*(const Mat3& m, const Mat3& n) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat s(0);
            for (int k = 0; k < 3; ++k) s += m.a[i][k] * n.a[k][j];
            r.a[i][j] = s;
        }
    return r;
}

std::array<Rat, 3> Mat3::apply(const std::array<Rat, 3>& v) const {
    std::array<Rat, 3> r;
    for (int i = 0; i < 3; ++i) r[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
    return r;
}

bool operator==(const Mat3& m, const Mat3& n) { return m.a == n.a; }

} // namespace rigidcurves
