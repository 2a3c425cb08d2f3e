#pragma once

#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "wlax/uea.hpp"

namespace wlax {

// Exponents are doubled everywhere: key 2 means z^1, key 1 means z^{1/2}.
constexpr int kExact = INT_MIN / 4;  // floor of a series known completely
constexpr int kNoTop = INT_MIN / 2;  // top of a zero series

using Poly = std::map<int, UEAElement>;

// Matrix of truncated Laurent series in z^{-1/2}.  Coefficients at exponents
// >= floor are exact, nothing is known below.  kExact marks a finite object.
struct SeriesMatrix {
    int rows = 0, cols = 0;
    std::vector<Poly> e;
    int floor = kExact;

    SeriesMatrix() = default;
    SeriesMatrix(int r, int c, int fl = kExact) : rows(r), cols(c), e(static_cast<size_t>(r) * c), floor(fl) {}

    Poly& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const Poly& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
    bool exact() const { return floor == kExact; }

    int top() const;           // largest stored exponent, kNoTop when zero
    int top_bound() const;     // largest exponent possibly nonzero, unknown part included
    bool is_zero() const;
    UEAElement coeff(int i, int j, int exp2) const;
    QMatrix scalar_coeff(int exp2) const;  // throws NonScalarLeading if not scalar
    void set(int i, int j, int exp2, const UEAElement& c);
    void add(int i, int j, int exp2, const UEAElement& c);
    void prune();           // drop zeros and terms below floor
    void raise_floor(int f);  // forget everything below f

    static SeriesMatrix identity(int n);
    static SeriesMatrix constant(const QMatrix& m, int exp2 = 0);
};

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix operator*(const Rational& s, const SeriesMatrix& a);
SeriesMatrix shift(const SeriesMatrix& a, int exp2);  // z^{exp2/2} a
SeriesMatrix mat_mul(const UEARing& R, const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix submatrix(const SeriesMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols);
SeriesMatrix map_coeffs(const SeriesMatrix& a, const std::function<UEAElement(const UEAElement&)>& fn);
// z^{-x} a z^{y} entrywise: (i,j) gets exponent shift cols_w[j] - rows_w[i]
SeriesMatrix conjugate_by_weights(const SeriesMatrix& a, const std::vector<int>& rows_w,
                                  const std::vector<int>& cols_w);

// Solves M X = rhs.  M square with a scalar invertible coefficient at its
// top exponent.  The result is exact down to at least `target` whenever the
// inputs are precise enough, otherwise to the floor they allow.
SeriesMatrix invert_apply(const UEARing& R, const SeriesMatrix& m, const SeriesMatrix& rhs, int target);
SeriesMatrix invert(const UEARing& R, const SeriesMatrix& m, int target);

// Inverse of a square M whose conjugate z^{-w} M z^{w} is scalar-leading.
SeriesMatrix invert_balanced(const UEARing& R, const SeriesMatrix& m, const std::vector<int>& rows_w,
                             const std::vector<int>& cols_w, int target);

// Coordinate subsets standing for the 0/1 maps Ψ (injection of coordinates
// psi) and Π (projection onto coordinates pi).
struct CompressionMaps {
    std::vector<int> psi;
    std::vector<int> pi;
    QMatrix psi_matrix(int n) const;  // n x |psi|
    QMatrix pi_matrix(int n) const;   // |pi| x n
};

// (Π M^{-1} Ψ)^{-1}, exact down to `target`.
SeriesMatrix quasideterminant(const UEARing& R, const SeriesMatrix& m, const CompressionMaps& maps, int target);

// M_{T,S} - M_{T,S^c} (M_{T^c,S^c})^{-1} M_{T^c,S} with T = chi2.psi, T^c =
// chi2.pi, S^c = chi1.psi, S = chi1.pi.  The pivot is inverted after
// balancing with the weights w (one per coordinate, empty for none).
SeriesMatrix dirac_reduction(const UEARing& R, const SeriesMatrix& m, const CompressionMaps& chi1,
                             const CompressionMaps& chi2, int target, const std::vector<int>& w = {});

struct Residue {
    int exp2 = 0;   // z exponent (doubled)
    int wexp2 = 0;  // w exponent for bivariate checks
    int row = 0, col = 0;
    UEAElement term;
};

// Nonzero coefficients of a - b at exponents >= floor (and >= both floors).
std::vector<Residue> diff_above(const SeriesMatrix& a, const SeriesMatrix& b, int floor = kExact);
int common_floor(const SeriesMatrix& a, const SeriesMatrix& b);

}  // namespace wlax
