#include "crn/exact.hpp"

#include <utility>

#include "crn/error.hpp"

namespace crn {

EliminationResult fraction_free_eliminate(BigMatrix& m) {
    EliminationResult res;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    BigInt prev(1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                m[r][c] = (m[r][c] * m[rank][col] - m[r][col] * m[rank][c]).div_exact(prev);
            m[r][col] = BigInt(0);
        }
        prev = m[rank][col];
        res.pivot_cols.push_back(col);
        ++rank;
    }
    res.rank = rank;
    return res;
}

int exact_rank(BigMatrix m) { return fraction_free_eliminate(m).rank; }

std::vector<std::vector<BigInt>> integer_nullspace(const BigMatrix& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;

    // Gauss-Jordan to RREF over the rationals.
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) a[r][c] = Rational(m[r][c], BigInt(1));

    std::vector<std::pair<int, int>> pivots;  // (row, col)
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        Rational inv = Rational(1) / a[rank][col];
        for (int c = col; c < cols; ++c) a[rank][c] = a[rank][c] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (int c = col; c < cols; ++c) a[r][c] = a[r][c] - f * a[rank][c];
        }
        pivots.emplace_back(rank, col);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto& [r, c] : pivots) is_pivot[c] = true;

    std::vector<std::vector<BigInt>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = Rational(1);
        for (auto& [pr, pc] : pivots) v[pc] = -a[pr][f];

        BigInt scale(1);
        for (const Rational& q : v) scale = BigInt::lcm(scale, q.den());
        std::vector<BigInt> w(cols);
        BigInt content(0);
        for (int c = 0; c < cols; ++c) {
            w[c] = v[c].num() * scale.div_exact(v[c].den());
            content = BigInt::gcd(content, w[c]);
        }
        if (!content.is_zero())
            for (BigInt& x : w) x = x.div_exact(content);
        for (const BigInt& x : w) {
            if (x.is_zero()) continue;
            if (x.sign() < 0)
                for (BigInt& y : w) y = -y;
            break;
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

}  // namespace crn
