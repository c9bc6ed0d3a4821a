#include "waring/linalg.hpp"

#include <utility>

#include "waring/errors.hpp"

namespace waring {

namespace {

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(QMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (std::size_t j = col; j < m[row].size(); ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

void scale_primitive(std::vector<Rational>& v) {
    Integer den(1);
    for (const Rational& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    Integer gcd(0);
    std::vector<Integer> ints;
    ints.reserve(v.size());
    for (const Rational& x : v) {
        Integer n = x.get_num() * (den / x.get_den());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
        ints.push_back(std::move(n));
    }
    if (gcd == 0) return;
    int lead_sign = 0;
    for (const Integer& n : ints)
        if (n != 0) {
            lead_sign = sgn(n);
            break;
        }
    if (lead_sign < 0) gcd = -gcd;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = Rational(ints[j] / gcd);
}

}  // namespace

int matrix_rank(QMatrix m) {
    if (m.empty()) return 0;
    return static_cast<int>(rref(m, m[0].size()).size());
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m, std::size_t cols) {
    QMatrix r = m;
    std::vector<std::size_t> pivots = rref(r, cols);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
        scale_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> solve_exact(QMatrix a, std::vector<Rational> b) {
    std::size_t rows = a.size();
    if (rows == 0 || rows != b.size()) throw InvariantError("solve_exact: shape mismatch");
    std::size_t cols = a[0].size();
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<std::size_t> pivots = rref(a, cols);
    if (pivots.size() != cols) throw InvariantError("solve_exact: rank-deficient system");
    for (std::size_t i = pivots.size(); i < rows; ++i)
        if (a[i][cols] != 0) throw InvariantError("solve_exact: inconsistent system");
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < cols; ++i) x[pivots[i]] = a[i][cols];
    return x;
}

std::vector<Complex> solve_numeric(CMatrix a, std::vector<Complex> b) {
    std::size_t rows = a.size();
    if (rows == 0 || rows != b.size()) throw InvariantError("solve_numeric: shape mismatch");
    std::size_t cols = a[0].size();
    if (rows < cols) throw InvariantError("solve_numeric: underdetermined system");
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t best = col;
        BigFloat best_abs = a[col][col].abs();
        for (std::size_t i = col + 1; i < rows; ++i) {
            BigFloat cur = a[i][col].abs();
            if (best_abs < cur) {
                best = i;
                best_abs = std::move(cur);
            }
        }
        if (best_abs.is_zero()) throw InvariantError("solve_numeric: singular system");
        std::swap(a[best], a[col]);
        std::swap(b[best], b[col]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Complex f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    std::vector<Complex> x;
    x.reserve(cols);
    for (std::size_t i = 0; i < cols; ++i) x.push_back(b[i] / a[i][i]);
    return x;
}

}  // namespace waring
