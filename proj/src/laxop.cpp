#include "wlax/laxop.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "wlax/errors.hpp"

namespace wlax {

namespace {

constexpr size_t kMaxResidues = 64;

void record(Report& rep, Residue r) {
    rep.pass = false;
    if (rep.residues.size() < kMaxResidues) rep.residues.push_back(std::move(r));
}

std::vector<int> complement(int n, const std::vector<int>& v) {
    std::vector<int> out;
    for (int a = 0; a < n; ++a)
        if (std::find(v.begin(), v.end(), a) == v.end()) out.push_back(a);
    return out;
}

QMatrix power(const QMatrix& m, int k) {
    QMatrix r = QMatrix::identity(m.rows);
    for (int i = 0; i < k; ++i) r = r * m;
    return r;
}

QMatrix sub(const QMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    QMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) r(static_cast<int>(i), static_cast<int>(j)) = m(rows[i], cols[j]);
    return r;
}

// Σ_{i in sel} u_i U^i, z^0 only
SeriesMatrix partial_U(const UEARing& R, const std::function<bool(int)>& sel) {
    const auto& s = R.setup();
    int N = s.algebra.N;
    std::vector<Accumulator> acc(static_cast<size_t>(N) * N);
    for (int i = 0; i < R.dim(); ++i) {
        if (!sel(s.delta2[i])) continue;
        QMatrix Ui = s.algebra.dual_matrix(i);
        UEAElement g = R.gen(i);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                if (!Ui(a, b).is_zero()) acc[a * N + b].add(g, Ui(a, b));
    }
    SeriesMatrix m(N, N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            UEAElement c = acc[a * N + b].take();
            if (!c.is_zero()) m.at(a, b)[0] = c;
        }
    return m;
}

SeriesMatrix z_identity(int n) { return shift(SeriesMatrix::identity(n), 2); }

}  // namespace

SeriesMatrix build_U(const UEARing& R) {
    return partial_U(R, [](int) { return true; });
}

QMatrix shift_matrix(const GradedSetup& s) {
    int N = s.algebra.N;
    QMatrix D(N, N);
    for (int i = 0; i < s.algebra.dim(); ++i)
        if (s.delta2[i] >= 2) D = D - s.algebra.dual_matrix(i) * s.algebra.rep[i];
    return D;
}

QMatrix shift_matrix_closed_form(const GradedSetup& s) {
    Family f = s.algebra.family;
    if (f == Family::Generic) throw Error(Errc::UnsupportedFamily, "no closed form for a generic representation");
    int N = s.algebra.N;
    QMatrix D(N, N);
    for (int a = 0; a < N; ++a) {
        int w = s.vweight2[a];
        int above = 0;
        for (int b = 0; b < N; ++b)
            if (s.vweight2[b] >= w + 2) ++above;
        Rational v = -Rational(above);
        if (f == Family::SO || f == Family::SP) {
            v = Rational(1, 2) * v;
            if (w <= -1) v += Rational(f == Family::SO ? 1 : -1, 2);
        }
        D(a, a) = v;
    }
    return D;
}

SeriesMatrix build_A(const UEARing& R) { return z_identity(R.setup().algebra.N) + build_U(R); }

SeriesMatrix build_Arho(const UEARing& R) {
    const auto& s = R.setup();
    return z_identity(s.algebra.N) + SeriesMatrix::constant(s.F) + partial_U(R, [](int d2) { return d2 <= 1; });
}

SeriesMatrix lax_matrix(const UEARing& R) {
    return build_Arho(R) + SeriesMatrix::constant(shift_matrix(R.setup()));
}

int default_floor(const GradedSetup& s) { return -(2 * s.d2 + 6); }

LaxResult lax(const UEARing& R, int floor, bool cross) {
    const auto& s = R.setup();
    LaxResult r;
    r.d = s.d2;
    r.floor = floor;
    r.T = s.positions_with_weight(s.d2);
    r.S = s.positions_with_weight(-s.d2);
    r.r1 = static_cast<int>(r.T.size());
    r.D = shift_matrix(s);
    r.K = sub(power(s.F, s.d2), r.S, r.T);
    SeriesMatrix M = lax_matrix(R);
    r.L_tilde = quasideterminant(R, M, CompressionMaps{r.T, r.S}, floor);
    r.L = map_coeffs(r.L_tilde, [&](const UEAElement& x) { return R.reduce_mod_J(x); });
    if (cross) r.dirac_residues = diff_above(r.L_tilde, lax_dirac(R, floor), floor);
    return r;
}

SeriesMatrix lax_dirac(const UEARing& R, int floor) {
    const auto& s = R.setup();
    int N = s.algebra.N;
    auto T = s.positions_with_weight(s.d2);
    auto S = s.positions_with_weight(-s.d2);
    CompressionMaps chi1{complement(N, S), S};
    CompressionMaps chi2{T, complement(N, T)};
    return dirac_reduction(R, lax_matrix(R), chi1, chi2, floor, s.vweight2);
}

SeriesMatrix square_lax(const LaxResult& r, bool reduced) {
    const SeriesMatrix& L = reduced ? r.L : r.L_tilde;
    SeriesMatrix out(L.rows, L.rows, L.floor);
    for (int i = 0; i < L.rows; ++i)
        for (int j = 0; j < L.rows; ++j)
            for (int k = 0; k < L.cols; ++k) {
                const Rational& c = r.K(k, j);
                if (c.is_zero()) continue;
                for (auto& [x, v] : L.at(i, k)) out.add(i, j, x, c * v);
            }
    return out;
}

Report check_membership(const UEARing& R, const LaxResult& r) {
    Report rep;
    rep.check = "membership";
    rep.floor = r.floor;
    const auto& s = R.setup();
    int tested = 0;
    for (int i = 0; i < R.dim(); ++i) {
        if (s.delta2[i] < 1) continue;
        ++tested;
        UEAElement a = R.gen(i);
        for (int p = 0; p < r.L_tilde.rows; ++p)
            for (int q = 0; q < r.L_tilde.cols; ++q)
                for (auto& [x, c] : r.L_tilde.at(p, q)) {
                    MElement res = R.reduce_mod_J(R.mul(a, c) - R.mul(c, a));
                    if (!res.is_zero()) record(rep, {x, 0, p, q, res});
                }
        rep.note("generator", s.algebra.labels[i]);
    }
    rep.note("generators_tested", std::to_string(tested));
    return rep;
}

Report check_arho(const UEARing& R) {
    Report rep;
    rep.check = "arho";
    SeriesMatrix diff = build_A(R) - build_Arho(R);
    diff = map_coeffs(diff, [&](const UEAElement& x) { return R.reduce_mod_J(x); });
    for (int a = 0; a < diff.rows; ++a)
        for (int b = 0; b < diff.cols; ++b)
            for (auto& [x, c] : diff.at(a, b)) record(rep, {x, 0, a, b, c});
    return rep;
}

Report check_leading_term(const UEARing& R) {
    Report rep;
    rep.check = "leading-term";
    const auto& s = R.setup();
    int N = s.algebra.N, d = s.d2;
    auto T = s.positions_with_weight(d);
    auto S = s.positions_with_weight(-d);
    QMatrix Fd = sub(power(s.F, d), S, T);
    // K = F + π_{<=1/2}U + D, powers applied to Ψ
    SeriesMatrix K = SeriesMatrix::constant(s.F) + partial_U(R, [](int d2) { return d2 <= 1; }) +
                     SeriesMatrix::constant(shift_matrix(s));
    CompressionMaps maps{T, S};
    SeriesMatrix G = SeriesMatrix::constant(maps.psi_matrix(N));
    std::vector<int> all(T.size());
    for (size_t q = 0; q < all.size(); ++q) all[q] = static_cast<int>(q);
    for (int l = 0; l <= d; ++l) {
        SeriesMatrix P = submatrix(G, S, all);
        SeriesMatrix want = l == d ? SeriesMatrix::constant(Fd) : SeriesMatrix(P.rows, P.cols);
        for (auto& res : diff_above(P, want)) {
            res.exp2 = -2 * (l + 1);
            record(rep, res);
        }
        if (l < d) G = mat_mul(R, K, G);
    }
    // top coefficient of Π (Arho + D)^{-1} Ψ
    SeriesMatrix B = submatrix(invert_apply(R, lax_matrix(R), SeriesMatrix::constant(maps.psi_matrix(N)), -2 * (d + 1)),
                               S, all);
    SeriesMatrix want = SeriesMatrix::constant(Rational(d % 2 == 0 ? 1 : -1) * Fd, -2 * (d + 1));
    for (auto& res : diff_above(B, want, -2 * (d + 1))) record(rep, res);
    return rep;
}

Report check_shift_matrix(const GradedSetup& s) {
    Report rep;
    rep.check = "shift-matrix";
    QMatrix D = shift_matrix(s);
    int N = s.algebra.N;
    auto mismatch = [&](const QMatrix& a, const QMatrix& b, const std::string& what) {
        for (int i = 0; i < a.rows; ++i)
            for (int j = 0; j < a.cols; ++j)
                if (a(i, j) != b(i, j)) {
                    record(rep, {0, 0, i, j, scalar_element(a(i, j) - b(i, j))});
                    rep.note("mismatch", what);
                    return;
                }
    };
    if (s.algebra.family != Family::Generic) mismatch(D, shift_matrix_closed_form(s), "closed form");
    auto T = s.positions_with_weight(s.d2);
    std::vector<int> all(N);
    for (int a = 0; a < N; ++a) all[a] = a;
    mismatch(sub(D, T, all), QMatrix(static_cast<int>(T.size()), N), "Pi D");
    mismatch(sub(D, all, T), QMatrix(N, static_cast<int>(T.size())), "D Psi");
    for (int i = 0; i < s.algebra.dim(); ++i)
        if (s.delta2[i] == 0) mismatch(commutator(D, s.algebra.rep[i]), QMatrix(N, N), "commutes with g0");
    return rep;
}

Report main_lemma_check(const UEARing& R, const LaxResult& r) {
    Report rep;
    rep.check = "main-lemma";
    const auto& s = R.setup();
    int N = s.algebra.N, d = r.d;

    // 1 + z^{-Δ}U against z^{-1-X}(z+U)z^X
    SeriesMatrix Y = SeriesMatrix::identity(N);
    {
        SeriesMatrix U = build_U(R);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                for (auto& [x, c] : U.at(a, b))
                    for (auto& [m, v] : c.terms) {
                        int i = R.factors(m)[0];
                        UEAElement t;
                        t.terms.emplace_back(m, v);
                        Y.add(a, b, x + s.delta2[i] - 2, t);
                    }
    }
    std::vector<int> rw(N);
    for (int a = 0; a < N; ++a) rw[a] = s.vweight2[a] + 2;
    SeriesMatrix conj = conjugate_by_weights(build_A(R), rw, s.vweight2);
    for (auto& res : diff_above(Y, conj)) {
        rep.note("stage", "conjugation");
        record(rep, res);
    }

    // ε0(Π U^d Ψ) = Π F^d Ψ
    SeriesMatrix U = build_U(R);
    CompressionMaps maps{r.T, r.S};
    SeriesMatrix G = SeriesMatrix::constant(maps.psi_matrix(N));
    for (int l = 0; l < d; ++l) G = mat_mul(R, U, G);
    for (size_t i = 0; i < r.S.size(); ++i)
        for (size_t j = 0; j < r.T.size(); ++j) {
            Rational e = R.epsilon0(G.coeff(r.S[i], static_cast<int>(j), 0));
            if (e != r.K(static_cast<int>(i), static_cast<int>(j))) {
                rep.note("stage", "epsilon");
                record(rep, {0, 0, static_cast<int>(i), static_cast<int>(j), scalar_element(e - r.K(i, j))});
            }
        }

    // Σ_l (-1)^l z^{d-l} Π U^l Ψ · z^{-d-1} L  =  1 in RM, via the left action
    int E = r.floor - 2;
    rep.floor = E;
    int m = r.L.cols;
    std::vector<std::vector<std::pair<int, Rational>>> Uent(static_cast<size_t>(N) * N);
    for (int i = 0; i < R.dim(); ++i) {
        QMatrix Ui = s.algebra.dual_matrix(i);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                if (!Ui(a, b).is_zero()) Uent[a * N + b].emplace_back(i, Ui(a, b));
    }
    std::vector<Poly> g(static_cast<size_t>(N) * m);
    for (size_t t = 0; t < r.T.size(); ++t)
        for (int j = 0; j < m; ++j)
            for (auto& [x, c] : r.L.at(static_cast<int>(t), j)) g[r.T[t] * m + j][x - 2 * (d + 1)] = c;
    SeriesMatrix acc(m, m, E);
    for (int l = 0; 2 * (d - l) >= E; ++l) {
        int sh = 2 * (d - l);
        Rational sign = l % 2 == 0 ? 1 : -1;
        for (size_t p = 0; p < r.S.size(); ++p)
            for (int j = 0; j < m; ++j)
                for (auto& [x, c] : g[r.S[p] * m + j])
                    if (x + sh >= E) acc.add(static_cast<int>(p), j, x + sh, sign * c);
        int keep = E - 2 * (d - l - 1);
        std::vector<Poly> ng(g.size());
        for (int a = 0; a < N; ++a)
            for (int j = 0; j < m; ++j) {
                std::map<int, Accumulator> out;
                for (int b = 0; b < N; ++b) {
                    const auto& ue = Uent[a * N + b];
                    if (ue.empty()) continue;
                    for (auto& [x, c] : g[b * m + j]) {
                        if (x < keep) continue;
                        for (auto& [i, coef] : ue) out[x].add(R.reduce_mod_J(R.left_mul(i, c)), coef);
                    }
                }
                for (auto& [x, ac] : out) {
                    UEAElement c = ac.take();
                    if (!c.is_zero()) ng[a * m + j][x] = c;
                }
            }
        g.swap(ng);
    }
    SeriesMatrix one = SeriesMatrix::identity(m);
    for (auto& res : diff_above(acc, one, E)) {
        rep.note("stage", "product");
        record(rep, res);
    }
    return rep;
}

Report kazhdan_profile(const UEARing& R, const LaxResult& r) {
    Report rep;
    rep.check = "kazhdan";
    rep.floor = r.floor;
    std::map<int, int> maxw;
    for (int p = 0; p < r.L.rows; ++p)
        for (int q = 0; q < r.L.cols; ++q)
            for (auto& [x, c] : r.L.at(p, q)) {
                int w = R.kazhdan_weight2(c);
                int bound = 2 * (r.d + 1) - x;
                if (w > bound) record(rep, {x, 0, p, q, c});
                auto it = maxw.find(x);
                if (it == maxw.end()) maxw[x] = w;
                else it->second = std::max(it->second, w);
            }
    bool tight = true;
    std::string slack;
    for (auto& [x, w] : maxw) {
        int bound = 2 * (r.d + 1) - x;
        if (w != bound) {
            tight = false;
            slack += (slack.empty() ? "" : ",") + std::to_string(x);
        }
    }
    rep.note("tight", tight ? "true" : "false");
    if (!slack.empty()) rep.note("non_tight_exponents", slack);
    return rep;
}

Report polynomial_tail(const LaxResult& r) {
    Report rep;
    rep.check = "polynomial-tail";
    rep.floor = r.floor;
    int lowest = kNoTop, count = 0;
    for (int p = 0; p < r.L_tilde.rows; ++p)
        for (int q = 0; q < r.L_tilde.cols; ++q)
            for (auto& [x, c] : r.L_tilde.at(p, q))
                if (x < 0) {
                    ++count;
                    if (lowest == kNoTop || x < lowest) lowest = x;
                    record(rep, {x, 0, p, q, c});
                }
    rep.note("negative_coefficients", std::to_string(count));
    if (count) rep.note("lowest_exponent2", std::to_string(lowest));
    return rep;
}

Report quasidet_dirac_pipeline(const LaxResult& r) {
    Report rep;
    rep.check = "quasidet-dirac";
    rep.floor = r.floor;
    if (!r.dirac_residues) throw Error(Errc::InvalidInput, "lax() was run without the Dirac cross-check");
    for (auto& x : *r.dirac_residues) record(rep, x);
    return rep;
}

Report quasidet_dirac_random(const UEARing& R, uint64_t seed, int count) {
    Report rep;
    rep.check = "quasidet-dirac-random";
    rep.floor = -2;
    std::mt19937_64 gen(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); };
    int done = 0, tries = 0;
    while (done < count && tries < 100 * count) {
        ++tries;
        int n = pick(1, 5);
        QMatrix a(n, n);
        for (auto& v : a.a) v = Rational(pick(-3, 3));
        if (!inverse(a)) continue;
        int k = pick(1, n);
        std::vector<int> p1(n), p2(n);
        std::iota(p1.begin(), p1.end(), 0);
        std::iota(p2.begin(), p2.end(), 0);
        std::shuffle(p1.begin(), p1.end(), gen);
        std::shuffle(p2.begin(), p2.end(), gen);
        std::vector<int> T(p1.begin(), p1.begin() + k), Tc(p1.begin() + k, p1.end());
        std::vector<int> S(p2.begin(), p2.begin() + k), Sc(p2.begin() + k, p2.end());
        QMatrix piv(n - k, n - k);
        for (int i = 0; i < n - k; ++i)
            for (int j = 0; j < n - k; ++j) piv(i, j) = a(Tc[i], Sc[j]);
        if (n > k && !inverse(piv)) continue;
        SeriesMatrix M = SeriesMatrix::constant(a);
        SeriesMatrix q = quasideterminant(R, M, {T, S}, -2);
        SeriesMatrix d = dirac_reduction(R, M, {Sc, S}, {T, Tc}, -2);
        for (auto& x : diff_above(q, d, -2)) record(rep, x);
        ++done;
    }
    rep.note("seed", std::to_string(seed));
    rep.note("matrices", std::to_string(done));
    if (done < count) {
        rep.pass = false;
        rep.note("error", "could not draw enough invertible matrices");
    }
    return rep;
}

}  // namespace wlax
