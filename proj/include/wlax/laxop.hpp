#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wlax/report.hpp"
#include "wlax/series.hpp"
#include "wlax/uea.hpp"

namespace wlax {

// U = Σ u_i U^i as an N x N matrix of degree-one elements (z^0 only).
SeriesMatrix build_U(const UEARing& R);
// D = -Σ_{δ(i)>=1} U^i U_i, from the actual dual basis.
QMatrix shift_matrix(const GradedSetup& s);
// Closed forms for the standard representations, used as an oracle.
QMatrix shift_matrix_closed_form(const GradedSetup& s);

SeriesMatrix build_A(const UEARing& R);     // z + U
SeriesMatrix build_Arho(const UEARing& R);  // z + F + π_{<=1/2} U
SeriesMatrix lax_matrix(const UEARing& R);  // Arho + D

int default_floor(const GradedSetup& s);  // -(2d+6), doubled

struct LaxResult {
    int d = 0;
    int r1 = 0;
    int floor = 0;
    std::vector<int> T;  // coordinates of V[d/2]: rows of L
    std::vector<int> S;  // coordinates of V[-d/2]: columns of L
    QMatrix D;
    QMatrix K;           // Π F^d Ψ : V[d/2] -> V[-d/2]
    SeriesMatrix L_tilde;  // in U(g)
    SeriesMatrix L;        // reduced mod J
    std::optional<std::vector<Residue>> dirac_residues;  // quasidet minus Dirac form
};

LaxResult lax(const UEARing& R, int floor, bool dirac_cross_check = false);
// Dirac form of the same operator, pivot inverted after balancing by X.
SeriesMatrix lax_dirac(const UEARing& R, int floor);

// L·K, an endomorphism of V[d/2]
SeriesMatrix square_lax(const LaxResult& r, bool reduced = true);

Report check_membership(const UEARing& R, const LaxResult& r);
Report check_arho(const UEARing& R);
Report check_leading_term(const UEARing& R);
Report check_shift_matrix(const GradedSetup& s);
Report main_lemma_check(const UEARing& R, const LaxResult& r);
Report kazhdan_profile(const UEARing& R, const LaxResult& r);
// number of trailing coefficients of L̃ at exponents <= 0 that are nonzero
Report polynomial_tail(const LaxResult& r);

// Quasideterminant against Dirac reduction.  The pipeline form needs a
// LaxResult computed with the cross-check enabled.
Report quasidet_dirac_pipeline(const LaxResult& r);
// Same comparison on `count` random invertible rational matrices up to 5x5.
Report quasidet_dirac_random(const UEARing& R, uint64_t seed, int count = 50);

}  // namespace wlax
