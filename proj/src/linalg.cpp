#include "tautring/linalg.hpp"

#include <stdexcept>

namespace tautring {

RrefResult rref(QMatrix m) {
    RrefResult res;
    int nrows = static_cast<int>(m.size());
    int ncols = nrows ? static_cast<int>(m[0].size()) : 0;
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != ncols)
            throw std::invalid_argument("rref: ragged matrix");

    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int piv = -1;
        for (int i = r; i < nrows; ++i)
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rational inv = Rational(1) / m[r][c];
        for (int j = c; j < ncols; ++j) m[r][j] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (int j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    res.mat = std::move(m);
    return res;
}

int rank(const QMatrix& m) { return rref(m).rank; }

std::vector<Integer> primitive_normalize(const QVector& v) {
    Integer den(1);
    for (const auto& x : v) den = lcm(den, x.denominator());
    std::vector<Integer> ints;
    ints.reserve(v.size());
    Integer g(0);
    for (const auto& x : v) {
        Rational scaled = x * Rational(den);
        ints.push_back(scaled.numerator());
        g = gcd(g, ints.back());
    }
    if (g != 0) {
        int lead_sign = 0;
        for (const auto& x : ints)
            if (x != 0) {
                lead_sign = sgn(x);
                break;
            }
        if (lead_sign < 0) g = -g;
        for (auto& x : ints) x /= g;
    }
    return ints;
}

std::vector<std::vector<Integer>> kernel_basis(const QMatrix& m) {
    int nrows = static_cast<int>(m.size());
    int ncols = nrows ? static_cast<int>(m[0].size()) : 0;
    if (ncols == 0) return {};
    RrefResult r = rref(m);

    std::vector<bool> is_pivot(ncols, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;

    // One generator per free column: entry 1 there, minus the reduced column
    // at the pivot positions.
    QMatrix gen;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        QVector v(ncols, Rational(0));
        v[c] = Rational(1);
        for (int i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.mat[i][c];
        gen.push_back(std::move(v));
    }
    if (gen.empty()) return {};

    // Canonical form: reduced echelon basis of the kernel itself.
    RrefResult k = rref(std::move(gen));
    std::vector<std::vector<Integer>> out;
    for (int i = 0; i < k.rank; ++i) out.push_back(primitive_normalize(k.mat[i]));
    return out;
}

QVector solve_unique(const QMatrix& a, const QVector& b) {
    int nrows = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != nrows)
        throw std::invalid_argument("solve_unique: size mismatch");
    int ncols = nrows ? static_cast<int>(a[0].size()) : 0;
    QMatrix aug = a;
    for (int i = 0; i < nrows; ++i) aug[i].push_back(b[i]);
    RrefResult r = rref(std::move(aug));
    for (int c : r.pivot_cols)
        if (c == ncols) throw std::invalid_argument("solve_unique: inconsistent system");
    if (r.rank != ncols) throw std::invalid_argument("solve_unique: solution not unique");
    QVector x(ncols, Rational(0));
    for (int i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.mat[i][ncols];
    return x;
}

}  // namespace tautring
