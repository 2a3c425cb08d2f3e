#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wlax/qmatrix.hpp"

namespace wlax {

enum class Family { GL, SL, SO, SP, Generic };

const char* family_name(Family f);
Family parse_family(const std::string& s);  // "gl","sl","so","sp"
int family_dimension(Family f, int n);

using SparseComb = std::vector<std::pair<int, Rational>>;

// A Lie algebra given by a faithful matrix representation on V = F^N, with
// the trace form of that representation.
struct LieAlgebraModel {
    Family family = Family::Generic;
    int N = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> keys;  // structured labels for tie-breaking
    std::vector<QMatrix> rep;
    std::vector<SparseComb> brackets;  // [u_i,u_j] at i*dim+j
    QMatrix gram;
    QMatrix gram_inv;
    std::vector<QVec> dual;  // u^i in the basis {u_j}
    std::optional<QMatrix> form;  // <v_a|v_b>, for so/sp
    int epsilon = 0;              // symmetry of form
    std::vector<std::string> vlabels;

    int dim() const { return static_cast<int>(rep.size()); }
    const SparseComb& bracket(int i, int j) const { return brackets[static_cast<size_t>(i) * dim() + j]; }
    QMatrix matrix_of(const QVec& c) const;
    QMatrix dual_matrix(int i) const { return matrix_of(dual[i]); }
    // Coordinates of a matrix lying in the image of the representation.
    std::optional<QVec> try_coords(const QMatrix& m) const;
    QVec coords(const QMatrix& m) const;  // throws ConstructionFailed
    Rational trace_form(const QVec& a, const QVec& b) const;
    // A^dagger w.r.t. form: G^{-1} A^T G.
    QMatrix adjoint(const QMatrix& a) const;
};

// Standard realizations.  so uses <v_a|v_b> = δ_{a+b,N+1}; sp uses
// <v_a|v_b> = -(-1)^a δ_{a+b,N+1}.  Basis of so/sp: F_ab/(1+δ_{b,a'}) with
// F_ab = E_ab - ε_a ε_b E_{b'a'} and a' = N+1-a.
LieAlgebraModel build_algebra(Family f, int n);

// so/sp on the anti-diagonal form <v_a|v_b> = -s_a δ_{b,a'} for a sign
// vector s (1-based semantics, stored 0-based).  Symmetry must be uniform.
LieAlgebraModel build_algebra_signed(Family f, int n, const std::vector<int>& signs,
                                     std::vector<std::string> vlabels = {});

// Generic entry point: arbitrary faithful representation, trace form of it.
LieAlgebraModel model_from_rep(std::vector<std::string> labels, std::vector<QMatrix> reps);

QVec dual_element(const LieAlgebraModel& m, int i);

struct GradedSetup {
    LieAlgebraModel algebra;  // basis sorted by ascending δ, then key
    std::vector<int> partition;
    QVec f, x, e;
    QMatrix F, X, E;
    std::vector<int> delta2;    // doubled ad x eigenvalue per basis index
    std::vector<int> vweight2;  // doubled X eigenvalue per V basis vector
    int d2 = 0;                 // largest vweight2, i.e. d
    std::vector<int> perm;      // perm[new index] = index in the source model

    int d() const { return d2; }
    std::vector<int> positions_with_weight(int w2) const;
    int dim_weight(int w2) const { return static_cast<int>(positions_with_weight(w2).size()); }
    std::vector<int> distinct_weights() const;  // descending
    std::vector<int> indices_with_delta_at_least(int d2min) const;
    Rational f_pairing(int i) const;  // (f|u_i)
};

std::vector<int> parse_partition(const std::string& s);
void validate_partition(Family f, int n, const std::vector<int>& partition);

GradedSetup build_graded_setup(const LieAlgebraModel& m, std::vector<int> partition);

// Setup from explicit matrices of an sl2-triple; X must be diagonal.
GradedSetup setup_from_triple(const LieAlgebraModel& m, const QMatrix& F, const QMatrix& X,
                              const QMatrix& E, std::vector<int> partition = {});

}  // namespace wlax
