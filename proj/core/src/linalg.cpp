#include "dfc/linalg.hpp"

#include "dfc/errors.hpp"

#include <string>

namespace dfc {

namespace {

size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

// Gauss-Jordan elimination on [A | b]; returns the pivot columns.
std::vector<size_t> eliminate(RationalMatrix& A, std::vector<Rational>* b) {
    const size_t m = A.size();
    const size_t n = m == 0 ? 0 : A[0].size();
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        // smallest nonzero pivot in bit size keeps intermediate growth down
        size_t best = m;
        for (size_t i = row; i < m; ++i)
            if (A[i][col] != 0 && (best == m || bit_size(A[i][col]) < bit_size(A[best][col]))) best = i;
        if (best == m) continue;
        std::swap(A[row], A[best]);
        if (b) std::swap((*b)[row], (*b)[best]);
        Rational inv = 1 / A[row][col];
        for (size_t j = col; j < n; ++j) A[row][j] *= inv;
        if (b) (*b)[row] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || A[i][col] == 0) continue;
            Rational f = A[i][col];
            for (size_t j = col; j < n; ++j)
                if (A[row][j] != 0) A[i][j] -= f * A[row][j];
            if (b) (*b)[i] -= f * (*b)[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::vector<Rational> solve_exact(RationalMatrix A, std::vector<Rational> b) {
    const size_t m = A.size();
    if (m != b.size()) throw InternalError("solve_exact: dimension mismatch");
    const size_t n = m == 0 ? 0 : A[0].size();
    auto pivots = eliminate(A, &b);
    if (pivots.size() < n)
        throw SingularSystemError("selection system has rank " + std::to_string(pivots.size()) + " < " +
                                  std::to_string(n));
    for (size_t i = n; i < m; ++i)
        if (b[i] != 0) throw SingularSystemError("selection system is inconsistent");
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[pivots[i]] = b[i];
    return x;
}

int rank_exact(RationalMatrix A) {
    return static_cast<int>(eliminate(A, nullptr).size());
}

} // namespace dfc
