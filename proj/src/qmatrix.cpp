#include "wlax/qmatrix.hpp"

#include <sstream>

#include "wlax/errors.hpp"

namespace wlax {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InvalidFamily: return "InvalidFamily";
        case Errc::InvalidPartition: return "InvalidPartition";
        case Errc::ConstructionFailed: return "ConstructionFailed";
        case Errc::DegenerateForm: return "DegenerateForm";
        case Errc::PositiveWeight: return "PositiveWeight";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::NonScalarLeading: return "NonScalarLeading";
        case Errc::SingularLeading: return "SingularLeading";
        case Errc::CompressionNotInvertible: return "CompressionNotInvertible";
        case Errc::PivotNotInvertible: return "PivotNotInvertible";
        case Errc::FormMissing: return "FormMissing";
        case Errc::OrthogonalityViolation: return "OrthogonalityViolation";
        case Errc::UnsupportedFamily: return "UnsupportedFamily";
        case Errc::InvalidRectangle: return "InvalidRectangle";
        case Errc::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

bool is_config_error(Errc c) {
    switch (c) {
        case Errc::InvalidFamily:
        case Errc::InvalidPartition:
        case Errc::InvalidRectangle:
        case Errc::UnsupportedFamily:
        case Errc::FormMissing:
        case Errc::InvalidInput:
            return true;
        default:
            return false;
    }
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::unit(int r, int c, int i, int j) {
    QMatrix m(r, c);
    m(i, j) = 1;
    return m;
}

bool QMatrix::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

bool QMatrix::is_diagonal() const {
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

Rational QMatrix::trace() const {
    Rational t;
    for (int i = 0; i < rows && i < cols; ++i) t += (*this)(i, i);
    return t;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows; ++i) {
        if (i) os << ", ";
        os << "[";
        for (int j = 0; j < cols; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

bool operator==(const QMatrix& x, const QMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

QMatrix operator+(const QMatrix& x, const QMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw Error(Errc::ShapeMismatch, "matrix sum");
    QMatrix r = x;
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] += y.a[k];
    return r;
}

QMatrix operator-(const QMatrix& x, const QMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw Error(Errc::ShapeMismatch, "matrix difference");
    QMatrix r = x;
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] -= y.a[k];
    return r;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
    if (x.cols != y.rows) throw Error(Errc::ShapeMismatch, "matrix product");
    QMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rational& xik = x(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Rational& ykj = y(k, j);
                if (!ykj.is_zero()) r(i, j) += xik * ykj;
            }
        }
    return r;
}

QMatrix operator*(const Rational& s, const QMatrix& x) {
    QMatrix r = x;
    for (auto& v : r.a) v *= s;
    return r;
}

QMatrix commutator(const QMatrix& x, const QMatrix& y) { return x * y - y * x; }

QMatrix kron(const QMatrix& x, const QMatrix& y) {
    QMatrix r(x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x(i, k).is_zero()) continue;
            for (int j = 0; j < y.rows; ++j)
                for (int l = 0; l < y.cols; ++l)
                    if (!y(j, l).is_zero()) r(i * y.rows + j, k * y.cols + l) = x(i, k) * y(j, l);
        }
    return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& m) {
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (!m(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
        Rational inv = Rational(1) / m(row, col);
        for (int j = 0; j < m.cols; ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Rational fct = m(i, col);
            for (int j = 0; j < m.cols; ++j)
                if (!m(row, j).is_zero()) m(i, j) -= fct * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

}  // namespace

std::optional<QMatrix> inverse(const QMatrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    int n = m.rows;
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

QMatrix nullspace(const QMatrix& m) {
    QMatrix r = m;
    auto piv = rref(r);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free;
    for (int c = 0; c < m.cols; ++c)
        if (!is_piv[c]) free.push_back(c);
    QMatrix ns(m.cols, static_cast<int>(free.size()));
    for (size_t k = 0; k < free.size(); ++k) {
        ns(free[k], static_cast<int>(k)) = 1;
        for (size_t i = 0; i < piv.size(); ++i) ns(piv[i], static_cast<int>(k)) = -r(static_cast<int>(i), free[k]);
    }
    return ns;
}

std::optional<QVec> solve(const QMatrix& m, const QVec& b) {
    auto inv = inverse(m);
    if (!inv) return std::nullopt;
    QVec x(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) x[i] += (*inv)(i, j) * b[j];
    return x;
}

}  // namespace wlax
