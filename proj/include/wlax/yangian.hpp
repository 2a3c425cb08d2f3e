#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wlax/laxop.hpp"
#include "wlax/report.hpp"
#include "wlax/series.hpp"

namespace wlax {

struct YangianParams {
    Rational alpha, beta, gamma;
    int epsilon = 0;  // form symmetry, needed iff beta != 0
    std::string str() const;
};

YangianParams params_for_A(const GradedSetup& s);    // z + U over V
YangianParams params_for_lax(const LaxResult& r, const GradedSetup& s);  // L(z)

// Tensor conventions: kron is row-major, index (i,j) -> i*n2 + j.
QMatrix omega(int m);
// Ω†_{W,U} on W⊗U for a pairing P[w][u] = <w|u>:  entry ((w',u'),(w,u)) = P[w][u] P^{-1}[u'][w'].
QMatrix omega_dagger_wu(const QMatrix& P);
// Ω†_{U,W} on U⊗W: entry ((u',w'),(u,w)) = P[w][u] P^{-1}[u'][w'].
QMatrix omega_dagger_uw(const QMatrix& P);
// Ω† on V⊗V for a form G[a][b] = <v_a|v_b>
inline QMatrix omega_dagger(const QMatrix& G) { return omega_dagger_wu(G); }

// A† = G^{-1} A^T G for A in End V
QMatrix adjoint_end(const QMatrix& A, const QMatrix& G);
// adjoints w.r.t. a pairing P between W and U
QMatrix adjoint_hom_wu(const QMatrix& D, const QMatrix& P);  // D in Hom(W,U)
QMatrix adjoint_hom_uw(const QMatrix& C, const QMatrix& P);  // C in Hom(U,W)
// <w|u> = <Π^{-1}w | Ψu>; throws OrthogonalityViolation unless im Ψ = (ker Π)^⊥
QMatrix induced_pairing(const QMatrix& psi, const QMatrix& pi, const QMatrix& G);

// Σ U_i ⊗ U^i
QMatrix omega_g(const LieAlgebraModel& m);

// Bivariate Laurent polynomials in z, w with per-variable floors.
using BiPoly = std::map<std::pair<int, int>, UEAElement>;

struct BiMatrix {
    int rows = 0, cols = 0;
    std::vector<BiPoly> e;
    int fz = kExact, fw = kExact;

    BiMatrix() = default;
    BiMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}
    BiPoly& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const BiPoly& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
    void add(int i, int j, int ez, int ew, const UEAElement& c);
    int top_z() const;
    int top_w() const;
};

BiMatrix bi_constant(const QMatrix& q);
// a ⊗ 1_n (first = true) or 1_n ⊗ a, with the series variable z or w
BiMatrix bi_tensor(const SeriesMatrix& a, int n, bool first, bool in_w);
// c_z z + c_w w + c + s·Q for a rational square Q
BiMatrix bi_linear(int n, const Rational& cz, const Rational& cw, const Rational& c, const Rational& s,
                   const QMatrix& Q);
BiMatrix operator+(const BiMatrix& a, const BiMatrix& b);
BiMatrix operator-(const BiMatrix& a, const BiMatrix& b);
BiMatrix bi_mul(const UEARing& R, const BiMatrix& a, const BiMatrix& b);

enum class IdentityMode { Exact, ModJ };

// The operator A(z): X -> Y.  omega_xy acts on X⊗Y, omega_yx on Y⊗X.
struct IdentityData {
    SeriesMatrix A;
    QMatrix omega_x, omega_y;
    QMatrix omega_dag_xy, omega_dag_yx;
};

IdentityData identity_data_end(const SeriesMatrix& A, const QMatrix& G);
IdentityData identity_data_wu(const SeriesMatrix& D, const QMatrix& P);  // D in Hom(W,U)
IdentityData identity_data_uw(const SeriesMatrix& C, const QMatrix& P);  // C in Hom(U,W)

// LHS - RHS of the generalized Yangian identity.
Report check_identity(const UEARing& R, const IdentityData& data, const YangianParams& p, IdentityMode mode);
// Commutator form, multiplied through by (z-w)(z+w+γ); End V only.
Report check_identity_commutator(const UEARing& R, const SeriesMatrix& A, const QMatrix& G, const YangianParams& p);
// [A(z),A(w)] = Σ u_i [1⊗U^i, Ω^g]
Report check_commutator_lemma(const UEARing& R);
// Ω^g against Ω, Ω - 1/N, ½(Ω - Ω†)
Report check_omega_g(const LieAlgebraModel& m);

// Parameters for A(z) and L(z)
Report yangian_for_A(const UEARing& R);
Report yangian_for_lax(const UEARing& R, const LaxResult& r);

// Form on V[d/2] x V[-d/2] induced by the form on V.
QMatrix lax_pairing(const GradedSetup& s, const LaxResult& r);

// L†(-z) = -ε L(z) for L in Hom(W,U) with pairing P; A†(-z) = -A(z) for End V.
Report check_skewadjoint(const UEARing& R, const LaxResult& r);
Report check_skewadjoint_A(const UEARing& R);

// Polynomial A(z) -> A(az+b)
SeriesMatrix substitute_affine(const SeriesMatrix& A, const Rational& a, const Rational& b);

struct TransformReports {
    Report affine, compression, inverse, quasidet;
};
// (a)-(d): affine change of variable, compression, inverse, quasideterminant
TransformReports transform_checks(const UEARing& R, const Rational& a, const Rational& b, int floor);

}  // namespace wlax
