#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wlax/rational.hpp"

namespace wlax {

using QVec = std::vector<Rational>;

// Dense matrix over Q, row-major.
struct QMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static QMatrix identity(int n);
    static QMatrix unit(int r, int c, int i, int j);  // E_ij

    Rational& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const;
    bool is_diagonal() const;
    Rational trace() const;
    QMatrix transpose() const;
    std::string str() const;
};

bool operator==(const QMatrix& x, const QMatrix& y);
inline bool operator!=(const QMatrix& x, const QMatrix& y) { return !(x == y); }
QMatrix operator+(const QMatrix& x, const QMatrix& y);
QMatrix operator-(const QMatrix& x, const QMatrix& y);
QMatrix operator*(const QMatrix& x, const QMatrix& y);
QMatrix operator*(const Rational& s, const QMatrix& x);
QMatrix commutator(const QMatrix& x, const QMatrix& y);

// Kronecker product with row-major pairing: (A⊗B)[(i,j),(k,l)] = A[i,k]·B[j,l],
// where the pair (i,j) sits at index i·B.rows + j and (k,l) at k·B.cols + l.
QMatrix kron(const QMatrix& x, const QMatrix& y);

std::optional<QMatrix> inverse(const QMatrix& m);
int rank(QMatrix m);
// Basis of {v : m v = 0}, as columns of the returned matrix.
QMatrix nullspace(const QMatrix& m);
// Solve m x = b for square invertible m.
std::optional<QVec> solve(const QMatrix& m, const QVec& b);

}  // namespace wlax
