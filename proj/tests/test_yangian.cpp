#include "doctest.h"
#include "helpers.hpp"
#include "wlax/errors.hpp"
#include "wlax/yangian.hpp"

using namespace wlax;

namespace {

GradedSetup setup(Family f, int n, std::vector<int> p) { return build_graded_setup(build_algebra(f, n), p); }

struct Case {
    Family f;
    int n;
    std::vector<int> p;
};

const std::vector<Case> kAll = {
    {Family::GL, 2, {2}},    {Family::GL, 3, {2, 1}}, {Family::SL, 2, {2}},    {Family::SL, 3, {3}},
    {Family::SO, 3, {3}},    {Family::SO, 4, {3, 1}}, {Family::SP, 2, {2}},    {Family::SP, 4, {2, 2}},
};

QMatrix random_matrix(th::Rng& rng, int r, int c) {
    QMatrix m(r, c);
    for (auto& x : m.a) x = rng.small_rational();
    return m;
}

}  // namespace

TEST_CASE("Ω and Ω† algebra") {
    for (auto [f, n] : {std::pair{Family::SO, 3}, {Family::SO, 4}, {Family::SP, 4}, {Family::SP, 6}}) {
        auto m = build_algebra(f, n);
        const QMatrix& G = *m.form;
        QMatrix O = omega(n), Od = omega_dagger(G);
        QMatrix I = QMatrix::identity(n * n);
        CHECK(O * O == I);
        CHECK(Od * Od == Rational(n) * Od);
        CHECK(O * Od == Rational(m.epsilon) * Od);
        CHECK(Od * O == Rational(m.epsilon) * Od);
        // both one-sided adjoints agree on V
        CHECK(omega_dagger_uw(G) == Od);
        th::Rng rng(17 + n);
        for (int t = 0; t < 5; ++t) {
            QMatrix A = random_matrix(rng, n, n);
            QMatrix Ad = adjoint_end(A, G);
            QMatrix id = QMatrix::identity(n);
            CHECK(kron(A, id) * Od == kron(id, Ad) * Od);
            CHECK(Od * kron(A, id) == Od * kron(id, Ad));
        }
    }
}

TEST_CASE("Ω† from a pairing between two spaces") {
    th::Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        int k = rng.range(1, 3);
        QMatrix P = random_matrix(rng, k, k);
        if (!inverse(P)) continue;
        QMatrix A = random_matrix(rng, k, k);  // End U
        QMatrix Ad = *inverse(P.transpose()) * A.transpose() * P.transpose();  // End W: <Ad w|u> = <w|A u>
        QMatrix id = QMatrix::identity(k);
        QMatrix Owu = omega_dagger_wu(P), Ouw = omega_dagger_uw(P);
        CHECK(kron(A, id) * Ouw == kron(id, Ad) * Ouw);
        CHECK(Ouw * kron(A, id) == Ouw * kron(id, Ad));
        CHECK(kron(Ad, id) * Owu == kron(id, A) * Owu);
        CHECK(Owu * kron(Ad, id) == Owu * kron(id, A));
        // D in Hom(W,U): <w|D† w1> = <w1|D w>
        QMatrix D = random_matrix(rng, k, k);
        QMatrix Dd = adjoint_hom_wu(D, P);
        for (int w = 0; w < k; ++w)
            for (int w1 = 0; w1 < k; ++w1) {
                Rational l = 0, r = 0;
                for (int u = 0; u < k; ++u) {
                    l += P(w, u) * Dd(u, w1);
                    r += P(w1, u) * D(u, w);
                }
                CHECK(l == r);
            }
    }
}

TEST_CASE("compression adjoint picks up ε") {
    th::Rng rng(99);
    for (auto [f, n] : {std::pair{Family::SO, 4}, {Family::SP, 4}, {Family::SO, 5}}) {
        auto m = build_algebra(f, n);
        const QMatrix& G = *m.form;
        CompressionMaps maps{{0, 1}, {}};
        for (int c = 0; c < n; ++c)
            if (!G(c, 0).is_zero() || !G(c, 1).is_zero()) maps.pi.push_back(c);
        QMatrix psi = maps.psi_matrix(n), pi = maps.pi_matrix(n);
        QMatrix P = induced_pairing(psi, pi, G);
        for (int t = 0; t < 5; ++t) {
            QMatrix A = random_matrix(rng, n, n);
            QMatrix lhs = adjoint_hom_uw(pi * A * psi, P);
            CHECK(lhs == Rational(m.epsilon) * (pi * adjoint_end(A, G) * psi));
        }
        // Π onto the same coordinates as Ψ violates orthogonality
        CHECK_THROWS_AS(induced_pairing(psi, maps.psi_matrix(n).transpose(), G), Error);
    }
}

TEST_CASE("Ω^g relations") {
    for (auto& c : kAll) CHECK(check_omega_g(build_algebra(c.f, c.n)).pass);
    CHECK_THROWS_AS(check_omega_g(th::sl2_adjoint().algebra), Error);
}

TEST_CASE("commutator lemma") {
    for (auto& c : kAll) {
        UEARing R(setup(c.f, c.n, c.p));
        CHECK(check_commutator_lemma(R).pass);
    }
}

TEST_CASE("generalized identity for z + U, exact") {
    for (auto& c : kAll) {
        auto s = setup(c.f, c.n, c.p);
        UEARing R(s);
        Report r = yangian_for_A(R);
        INFO(family_name(c.f), c.n);
        CHECK(r.pass);
    }
    // gl2 and so3 params
    {
        auto s = setup(Family::GL, 2, {2});
        auto p = params_for_A(s);
        CHECK((p.alpha == 1 && p.beta == 0 && p.gamma == 0));
    }
    {
        auto s = setup(Family::SO, 3, {3});
        auto p = params_for_A(s);
        CHECK((p.alpha == Rational(1, 2) && p.beta == Rational(1, 2) && p.gamma == Rational(1, 2)));
    }
}

TEST_CASE("wrong parameters leave residues") {
    auto s = setup(Family::SO, 3, {3});
    UEARing R(s);
    auto data = identity_data_end(build_A(R), *s.algebra.form);
    auto p = params_for_A(s);
    p.gamma = p.gamma + 1;
    CHECK_FALSE(check_identity(R, data, p, IdentityMode::Exact).pass);
    p = params_for_A(s);
    p.alpha = 1;
    CHECK_FALSE(check_identity(R, data, p, IdentityMode::Exact).pass);

    auto g = setup(Family::GL, 2, {2});
    UEARing Rg(g);
    auto dg = identity_data_end(build_A(Rg), QMatrix());
    CHECK_FALSE(check_identity(Rg, dg, {2, 0, 0, 0}, IdentityMode::Exact).pass);
    CHECK_THROWS_AS(check_identity(Rg, dg, {1, 1, 0, 1}, IdentityMode::Exact), Error);
}

TEST_CASE("commutator form agrees with the product form") {
    for (auto& c : kAll) {
        auto s = setup(c.f, c.n, c.p);
        UEARing R(s);
        QMatrix G = s.algebra.form ? *s.algebra.form : QMatrix();
        SeriesMatrix A = build_A(R);
        auto p = params_for_A(s);
        INFO(family_name(c.f), c.n);
        CHECK(check_identity_commutator(R, A, G, p).pass);
        p.gamma = p.gamma + Rational(1, 3);
        if (!p.beta.is_zero()) {
            CHECK_FALSE(check_identity_commutator(R, A, G, p).pass);
            CHECK_FALSE(check_identity(R, identity_data_end(A, G), p, IdentityMode::Exact).pass);
        }
    }
}

TEST_CASE("transformation rules") {
    for (auto& c : kAll) {
        auto s = setup(c.f, c.n, c.p);
        UEARing R(s);
        auto t = transform_checks(R, 2, Rational(3, 2), -8);
        INFO(family_name(c.f), c.n);
        CHECK(t.affine.pass);
        CHECK(t.compression.pass);
        CHECK(t.inverse.pass);
        CHECK(t.quasidet.pass);
    }
}

TEST_CASE("affine substitution") {
    auto s = setup(Family::GL, 2, {2});
    UEARing R(s);
    SeriesMatrix A = build_A(R);
    SeriesMatrix B = substitute_affine(A, 2, 3);
    CHECK(B.coeff(0, 0, 2) == scalar_element(2));
    CHECK(B.coeff(0, 0, 0) == scalar_element(3) + A.coeff(0, 0, 0));
    CHECK(B.coeff(0, 1, 2).is_zero());
    CHECK_THROWS_AS(substitute_affine(invert(R, A, -6), 1, 0), Error);
}

TEST_CASE("generalized identity for L modulo J") {
    struct LCase {
        Family f;
        int n;
        std::vector<int> p;
        Rational gamma;
    };
    std::vector<LCase> cases = {
        {Family::GL, 2, {2}, 0},
        {Family::GL, 3, {2, 1}, 0},
        {Family::GL, 3, {3}, 0},
        {Family::SO, 3, {3}, Rational(-1, 2)},
        {Family::SP, 4, {2, 2}, Rational(-3, 2)},
    };
    for (auto& c : cases) {
        auto s = setup(c.f, c.n, c.p);
        UEARing R(s);
        LaxResult r = lax(R, default_floor(s));
        auto p = params_for_lax(r, s);
        CHECK(p.gamma == c.gamma);
        Report rep = yangian_for_lax(R, r);
        INFO(family_name(c.f), c.n, " ", rep.residues.size());
        CHECK(rep.pass);
        // the same series with a perturbed γ fails
        if (r.T.size() > 1 && (c.f == Family::SO || c.f == Family::SP)) {
            p.gamma = p.gamma + 1;
            auto data = identity_data_wu(r.L_tilde, lax_pairing(s, r));
            CHECK_FALSE(check_identity(R, data, p, IdentityMode::ModJ).pass);
        }
    }
}

TEST_CASE("skewadjointness of z + U") {
    for (auto& c : kAll) {
        if (c.f != Family::SO && c.f != Family::SP) continue;
        UEARing R(setup(c.f, c.n, c.p));
        CHECK(check_skewadjoint_A(R).pass);
    }
    auto g = setup(Family::GL, 2, {2});
    UEARing Rg(g);
    CHECK_THROWS_AS(check_skewadjoint_A(Rg), Error);
}

TEST_CASE("L is not skewadjoint beyond the classical part") {
    // so3 principal: L is 1x1, so L†(-z) = -L(z) would make L odd in z.
    // The quantum correction gives a z^2 term and a matching constant term.
    auto s = setup(Family::SO, 3, {3});
    UEARing R(s);
    LaxResult r = lax(R, default_floor(s));
    CHECK(r.L.coeff(0, 0, 6) == scalar_element(-1));
    CHECK(r.L.coeff(0, 0, 4) == scalar_element(1));
    // constant term is -c/2 - 1/8 for the z coefficient c
    CHECK(r.L.coeff(0, 0, 0) == Rational(-1, 2) * r.L.coeff(0, 0, 2) - scalar_element(Rational(1, 8)));
    Report rep = check_skewadjoint(R, r);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.residues.size() == 2);
    CHECK(rep.residues[0].exp2 == 4);
    CHECK(rep.residues[0].term == scalar_element(2));
    CHECK(rep.residues[1].exp2 == 0);
}

TEST_CASE("adjoint representation search reports") {
    // no parameters are claimed for a generic representation; the residual is only reported
    auto s = th::sl2_adjoint();
    UEARing R(s);
    Report r = yangian_for_A(R);
    MESSAGE("sl2 adjoint, params (1,0,0): " << (r.pass ? "identity holds" : "residues found"));
    CHECK(r.check == "yangian-A");
}
