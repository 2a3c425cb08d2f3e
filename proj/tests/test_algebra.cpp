#include <algorithm>
#include <climits>
#include <functional>

#include "doctest.h"
#include "helpers.hpp"
#include "wlax/errors.hpp"

using namespace wlax;
using th::idx;

namespace {

bool throws_code(const std::function<void()>& fn, Errc c) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == c;
    }
    return false;
}

void check_model_invariants(const LieAlgebraModel& m) {
    int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            QMatrix br(m.N, m.N);
            for (auto& [k, c] : m.bracket(i, j)) br = br + c * m.rep[k];
            REQUIRE(br == commutator(m.rep[i], m.rep[j]));
            REQUIRE(m.gram(i, j) == (m.rep[i] * m.rep[j]).trace());
            REQUIRE(m.gram(i, j) == m.gram(j, i));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational p;
            for (int k = 0; k < n; ++k) p += m.gram(i, k) * m.dual[j][k];
            REQUIRE(p == Rational(i == j ? 1 : 0));
        }
    // invariance ([a,b]|c) + (b|[a,c]) = 0 and Jacobi, checked through the rep
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                QMatrix ab = commutator(m.rep[a], m.rep[b]);
                QMatrix ac = commutator(m.rep[a], m.rep[c]);
                REQUIRE((ab * m.rep[c]).trace() + (m.rep[b] * ac).trace() == Rational(0));
                // Jacobi on structure constants
                QVec acc(n);
                auto add_br = [&](int x, const SparseComb& y, const Rational& s) {
                    for (auto& [k, ck] : y)
                        for (auto& [l, cl] : m.bracket(x, k)) acc[l] += s * ck * cl;
                };
                add_br(a, m.bracket(b, c), 1);
                add_br(b, m.bracket(c, a), 1);
                add_br(c, m.bracket(a, b), 1);
                for (auto& v : acc) REQUIRE(v.is_zero());
            }
    if (m.form)
        for (auto& u : m.rep) REQUIRE(m.adjoint(u) == Rational(-1) * u);
}

void check_setup_invariants(const GradedSetup& s) {
    const auto& m = s.algebra;
    int n = m.dim();
    REQUIRE(commutator(s.X, s.E) == s.E);
    REQUIRE(commutator(s.X, s.F) == Rational(-1) * s.F);
    REQUIRE(commutator(s.E, s.F) == Rational(2) * s.X);
    for (int i = 0; i < n; ++i) {
        REQUIRE(commutator(s.X, m.rep[i]) == Rational(s.delta2[i], 2) * m.rep[i]);
        if (i > 0) REQUIRE(s.delta2[i - 1] <= s.delta2[i]);
        for (int j = 0; j < n; ++j)
            for (auto& [k, c] : m.bracket(i, j)) REQUIRE(s.delta2[k] == s.delta2[i] + s.delta2[j]);
    }
    int tr = 0;
    for (int w : s.vweight2) tr += w;
    REQUIRE(tr == 0);
    if (s.partition.empty()) return;
    REQUIRE(s.d2 == *std::max_element(s.partition.begin(), s.partition.end()) - 1);
    if (m.family == Family::GL || m.family == Family::SL) {
        int lhs = static_cast<int>(s.indices_with_delta_at_least(2).size());
        int rhs = 0;
        for (int k : s.distinct_weights()) {
            int above = 0;
            for (int l : s.distinct_weights())
                if (l >= k + 2) above += s.dim_weight(l);
            rhs += s.dim_weight(k) * above;
        }
        if (m.family == Family::SL) REQUIRE(lhs == rhs);
        else REQUIRE(lhs == rhs);
    }
}

void partitions_of(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

bool parity_ok(Family f, const std::vector<int>& part) {
    for (int p : part) {
        bool restricted = f == Family::SO ? p % 2 == 0 : p % 2 == 1;
        if (!restricted) continue;
        if (std::count(part.begin(), part.end(), p) % 2 != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("gl2 trace form") {
    auto m = build_algebra(Family::GL, 2);
    CHECK(m.dim() == 4);
    int e11 = idx(m, "e[1,1]"), e12 = idx(m, "e[1,2]"), e21 = idx(m, "e[2,1]"), e22 = idx(m, "e[2,2]");
    CHECK(m.gram(e12, e21) == Rational(1));
    CHECK(m.gram(e11, e11) == Rational(1));
    CHECK(m.gram(e11, e22) == Rational(0));
    CHECK(m.gram(e12, e12) == Rational(0));
    CHECK(m.dual[e12][e21] == Rational(1));
}

TEST_CASE("so3 dual of F12 is half F21") {
    auto m = build_algebra(Family::SO, 3);
    CHECK(m.dim() == 3);
    QVec d = dual_element(m, idx(m, "F[1,2]"));
    QVec want(3);
    want[idx(m, "F[2,1]")] = Rational(1, 2);
    CHECK(d == want);
}

TEST_CASE("sp4 basis is skewadjoint") {
    auto m = build_algebra(Family::SP, 4);
    CHECK(m.dim() == 10);
    CHECK(m.epsilon == -1);
    for (auto& u : m.rep) CHECK(m.adjoint(u) == Rational(-1) * u);
}

TEST_CASE("sl2 dual of h") {
    auto m = build_algebra(Family::SL, 2);
    int h = idx(m, "h[1]");
    QVec want(3);
    want[h] = Rational(1, 2);
    CHECK(dual_element(m, h) == want);
}

TEST_CASE("family dimensions and invalid families") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(build_algebra(Family::GL, n).dim() == n * n);
        if (n >= 2) CHECK(build_algebra(Family::SL, n).dim() == n * n - 1);
        if (n >= 2) CHECK(build_algebra(Family::SO, n).dim() == n * (n - 1) / 2);
        if (n % 2 == 0) CHECK(build_algebra(Family::SP, n).dim() == n * (n + 1) / 2);
    }
    CHECK(throws_code([] { build_algebra(Family::SP, 3); }, Errc::InvalidFamily));
    CHECK(throws_code([] { parse_family("e8"); }, Errc::InvalidFamily));
}

TEST_CASE("model invariants hold for small algebras") {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{
             {Family::GL, 2}, {Family::GL, 3}, {Family::SL, 3}, {Family::SO, 3}, {Family::SO, 4},
             {Family::SO, 5}, {Family::SP, 2}, {Family::SP, 4}}) {
        CAPTURE(family_name(f));
        CAPTURE(n);
        check_model_invariants(build_algebra(f, n));
    }
}

TEST_CASE("gl2 principal grading") {
    auto s = build_graded_setup(build_algebra(Family::GL, 2), {2});
    CHECK(s.d2 == 1);
    CHECK(s.dim_weight(1) == 1);
    CHECK(s.dim_weight(-1) == 1);
    CHECK(s.delta2[idx(s.algebra, "e[1,2]")] == 2);
    CHECK(s.delta2[idx(s.algebra, "e[2,1]")] == -2);
    check_setup_invariants(s);
}

TEST_CASE("gl3 zero nilpotent") {
    auto s = build_graded_setup(build_algebra(Family::GL, 3), {1, 1, 1});
    CHECK(s.d2 == 0);
    for (auto& c : s.f) CHECK(c.is_zero());
    for (int d : s.delta2) CHECK(d == 0);
}

TEST_CASE("sp4 rectangle (2,2)") {
    auto s = build_graded_setup(build_algebra(Family::SP, 4), {2, 2});
    CHECK(s.d2 == 1);
    CHECK(s.dim_weight(1) == 2);
    CHECK(s.dim_weight(-1) == 2);
    check_setup_invariants(s);
}

TEST_CASE("partition validation") {
    CHECK(parse_partition("3,1,1") == std::vector<int>{3, 1, 1});
    CHECK(throws_code([] { parse_partition("3,,1"); }, Errc::InvalidPartition));
    CHECK(throws_code([] { validate_partition(Family::GL, 3, {2, 2}); }, Errc::InvalidPartition));
    CHECK(throws_code([] { validate_partition(Family::SO, 4, {2, 1, 1}); }, Errc::InvalidPartition));
    CHECK(throws_code([] { validate_partition(Family::SP, 4, {3, 1}); }, Errc::InvalidPartition));
}

TEST_CASE("every valid partition yields a graded setup") {
    for (auto [f, lo, hi] : std::vector<std::tuple<Family, int, int>>{
             {Family::GL, 1, 5}, {Family::SL, 2, 5}, {Family::SO, 2, 8}, {Family::SP, 2, 8}}) {
        for (int n = lo; n <= hi; ++n) {
            if (f == Family::SP && n % 2) continue;
            auto m = build_algebra(f, n);
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            partitions_of(n, n, cur, parts);
            for (auto& p : parts) {
                if ((f == Family::SO || f == Family::SP) && !parity_ok(f, p)) continue;
                CAPTURE(family_name(f));
                CAPTURE(n);
                std::string ps;
                for (int x : p) ps += std::to_string(x) + ",";
                CAPTURE(ps);
                auto s = build_graded_setup(m, p);
                check_setup_invariants(s);
            }
        }
    }
}

// ---- enveloping algebra ----

TEST_CASE("gl2 straightening and reduction") {
    auto s = build_graded_setup(build_algebra(Family::GL, 2), {2});
    UEARing R(s);
    const auto& m = s.algebra;
    int e11 = idx(m, "e[1,1]"), e12 = idx(m, "e[1,2]"), e21 = idx(m, "e[2,1]"), e22 = idx(m, "e[2,2]");
    auto g = [&](int i) { return R.gen(i); };
    UEAElement p = R.mul(g(e12), g(e21));
    CHECK(p == R.monomial({e21, e12}) + g(e11) - g(e22));
    CHECK(R.render(R.monomial({e21, e12})) == "e[2,1]*e[1,2]");
    CHECK(R.mul(R.mul(g(e12), g(e21)), g(e11)) == R.mul(g(e12), R.mul(g(e21), g(e11))));

    CHECK(R.kazhdan_weight2(g(e12)) == 0);
    CHECK(R.kazhdan_weight2(g(e21)) == 4);
    CHECK(R.kazhdan_weight2(R.monomial({e21, e12}) + g(e11)) == 4);
    CHECK(R.kazhdan_weight2(UEAElement{}) == INT_MIN);

    CHECK(R.reduce_mod_J(g(e12)) == scalar_element(1));
    CHECK(R.reduce_mod_J(R.monomial({e21, e12})) == g(e21));
    CHECK(R.reduce_mod_J(R.mul(g(e12), g(e22))) == g(e22) + scalar_element(1));

    CHECK(R.epsilon0(g(e12)) == Rational(1));
    CHECK(R.epsilon0(R.monomial({e12, e12})) == Rational(1));
    CHECK(throws_code([&] { R.epsilon0(g(e11)); }, Errc::PositiveWeight));

    CHECK(R.commutator(g(e12), g(e21)) == g(e11) - g(e22));
    CHECK(R.commutator(g(e21) + g(e11), g(e21) + g(e11)).is_zero());
}

TEST_CASE("enveloping algebra properties on random elements") {
    th::Rng rng(20261016);
    struct Case { Family f; int n; std::vector<int> p; };
    for (auto& c : std::vector<Case>{{Family::GL, 2, {2}}, {Family::GL, 3, {2, 1}}, {Family::SP, 4, {2, 2}},
                                    {Family::SO, 5, {3, 1, 1}}}) {
        auto s = build_graded_setup(build_algebra(c.f, c.n), c.p);
        UEARing R(s);
        auto J = s.indices_with_delta_at_least(2);
        for (int trial = 0; trial < 25; ++trial) {
            auto a = th::random_element(R, rng, 2, 3);
            auto b = th::random_element(R, rng, 2, 3);
            auto d = th::random_element(R, rng, 2, 2);
            CHECK(R.mul(R.mul(a, b), d) == R.mul(a, R.mul(b, d)));
            CHECK(R.mul(scalar_element(1), a) == a);
            CHECK(R.mul(a, scalar_element(1)) == a);
            // Leibniz
            CHECK(R.commutator(a, R.mul(b, d)) == R.mul(R.commutator(a, b), d) + R.mul(b, R.commutator(a, d)));
            int wa = R.kazhdan_weight2(a), wb = R.kazhdan_weight2(b);
            if (!a.is_zero() && !b.is_zero()) {
                CHECK(R.kazhdan_weight2(R.mul(a, b)) <= wa + wb);
                auto cm = R.commutator(a, b);
                if (!cm.is_zero()) CHECK(R.kazhdan_weight2(cm) <= wa + wb - 2);
            }
            // degree-1 Jacobi
            int i = rng.below(R.dim()), j = rng.below(R.dim()), k = rng.below(R.dim());
            auto x = R.gen(i), y = R.gen(j), z = R.gen(k);
            CHECK((R.commutator(x, R.commutator(y, z)) + R.commutator(y, R.commutator(z, x)) +
                   R.commutator(z, R.commutator(x, y))).is_zero());
            // left ideal J is killed
            if (!J.empty()) {
                int jm = J[rng.below(static_cast<int>(J.size()))];
                auto gen = R.gen(jm) - scalar_element(s.f_pairing(jm));
                CHECK(R.reduce_mod_J(R.mul(a, gen)).is_zero());
                auto r = R.reduce_mod_J(a);
                CHECK(R.is_m_element(r));
                CHECK(R.reduce_mod_J(r) == r);
            }
            // epsilon0 multiplicative on weight <= 0
            std::vector<int> low;
            for (int q = 0; q < R.dim(); ++q)
                if (s.delta2[q] >= 2) low.push_back(q);
            if (!low.empty()) {
                auto u = R.monomial({low[rng.below((int)low.size())], low[rng.below((int)low.size())]}, 2) +
                         scalar_element(rng.small_rational());
                auto v = R.monomial({low[rng.below((int)low.size())]}, -1) + scalar_element(3);
                if (R.kazhdan_weight2(u) <= 0 && R.kazhdan_weight2(v) <= 0)
                    CHECK(R.epsilon0(R.mul(u, v)) == R.epsilon0(u) * R.epsilon0(v));
            }
        }
    }
}
