#include "wlax/yangian.hpp"

#include <algorithm>

#include "wlax/errors.hpp"

namespace wlax {

namespace {

constexpr size_t kMaxResidues = 64;

void record(Report& rep, Residue r) {
    rep.pass = false;
    if (rep.residues.size() < kMaxResidues) rep.residues.push_back(std::move(r));
}

bool has_form(const LieAlgebraModel& m) { return m.form.has_value(); }

QMatrix inv_or_throw(const QMatrix& m, const char* what) {
    auto x = inverse(m);
    if (!x) throw Error(Errc::DegenerateForm, what);
    return *x;
}

QMatrix sub(const QMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    QMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) r(static_cast<int>(i), static_cast<int>(j)) = m(rows[i], cols[j]);
    return r;
}

int topz_bound(const BiMatrix& m) {
    int t = m.top_z();
    return m.fz == kExact ? t : std::max(t, m.fz - 1);
}
int topw_bound(const BiMatrix& m) {
    int t = m.top_w();
    return m.fw == kExact ? t : std::max(t, m.fw - 1);
}

bool bi_is_zero(const BiMatrix& m) {
    for (auto& p : m.e)
        if (!p.empty()) return false;
    return true;
}

int contrib(int side_floor, const BiMatrix& other, int other_top, bool other_exact) {
    if (side_floor == kExact) return kExact;
    if (other_exact && bi_is_zero(other)) return kExact;
    return side_floor + other_top;
}

void prune(BiMatrix& m) {
    for (auto& p : m.e)
        for (auto it = p.begin(); it != p.end();) {
            if (it->second.is_zero() || it->first.first < m.fz || it->first.second < m.fw) it = p.erase(it);
            else ++it;
        }
}

BiMatrix scale(const Rational& s, BiMatrix m) {
    for (auto& p : m.e)
        for (auto& [k, c] : p) c = s * c;
    prune(m);
    return m;
}

// series with only even exponents: z -> -z
SeriesMatrix negate_variable(const SeriesMatrix& a) {
    SeriesMatrix r = a;
    for (auto& p : r.e)
        for (auto& [x, c] : p) {
            if (x % 2 != 0) throw Error(Errc::ShapeMismatch, "z -> -z needs integer exponents");
            if ((x / 2) % 2 != 0) c = -c;
        }
    return r;
}

// Lm · a^T · Rm with rational Lm, Rm
SeriesMatrix sandwich_transpose(const QMatrix& Lm, const SeriesMatrix& a, const QMatrix& Rm) {
    SeriesMatrix r(Lm.rows, Rm.cols, a.floor);
    for (int i = 0; i < Lm.rows; ++i)
        for (int j = 0; j < Rm.cols; ++j)
            for (int p = 0; p < Lm.cols; ++p) {
                if (Lm(i, p).is_zero()) continue;
                for (int q = 0; q < Rm.rows; ++q) {
                    if (Rm(q, j).is_zero()) continue;
                    Rational s = Lm(i, p) * Rm(q, j);
                    for (auto& [x, c] : a.at(q, p)) r.add(i, j, x, s * c);
                }
            }
    r.prune();
    return r;
}

void compare_series(Report& rep, const SeriesMatrix& a, const SeriesMatrix& b) {
    rep.floor = common_floor(a, b);
    for (auto& res : diff_above(a, b)) record(rep, res);
}

}  // namespace

std::string YangianParams::str() const {
    return "(" + alpha.str() + ", " + beta.str() + ", " + gamma.str() + ")";
}

YangianParams params_for_A(const GradedSetup& s) {
    const auto& m = s.algebra;
    if (m.family == Family::SO || m.family == Family::SP)
        return {Rational(1, 2), Rational(1, 2), Rational(m.epsilon, 2), m.epsilon};
    return {1, 0, 0, 0};
}

YangianParams params_for_lax(const LaxResult& r, const GradedSetup& s) {
    const auto& m = s.algebra;
    if (m.family == Family::SO || m.family == Family::SP)
        return {Rational(1, 2), Rational(1, 2), Rational(m.epsilon - m.N + r.r1, 2), m.epsilon};
    return {1, 0, 0, 0};
}

QMatrix omega(int m) {
    QMatrix o(m * m, m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) o(i * m + j, j * m + i) = 1;
    return o;
}

QMatrix omega_dagger_wu(const QMatrix& P) {
    int mw = P.rows, mu = P.cols;
    if (mw != mu) throw Error(Errc::DegenerateForm, "pairing is not square");
    QMatrix Pi = inv_or_throw(P, "pairing is degenerate");
    QMatrix o(mw * mu, mw * mu);
    for (int w = 0; w < mw; ++w)
        for (int u = 0; u < mu; ++u) {
            if (P(w, u).is_zero()) continue;
            for (int w2 = 0; w2 < mw; ++w2)
                for (int u2 = 0; u2 < mu; ++u2) o(w2 * mu + u2, w * mu + u) = P(w, u) * Pi(u2, w2);
        }
    return o;
}

QMatrix omega_dagger_uw(const QMatrix& P) {
    int mw = P.rows, mu = P.cols;
    if (mw != mu) throw Error(Errc::DegenerateForm, "pairing is not square");
    QMatrix Pi = inv_or_throw(P, "pairing is degenerate");
    QMatrix o(mw * mu, mw * mu);
    for (int w = 0; w < mw; ++w)
        for (int u = 0; u < mu; ++u) {
            if (P(w, u).is_zero()) continue;
            for (int w2 = 0; w2 < mw; ++w2)
                for (int u2 = 0; u2 < mu; ++u2) o(u2 * mw + w2, u * mw + w) = P(w, u) * Pi(u2, w2);
        }
    return o;
}

QMatrix adjoint_end(const QMatrix& A, const QMatrix& G) { return inv_or_throw(G, "form") * A.transpose() * G; }

QMatrix adjoint_hom_wu(const QMatrix& D, const QMatrix& P) {
    return inv_or_throw(P, "pairing") * D.transpose() * P.transpose();
}

QMatrix adjoint_hom_uw(const QMatrix& C, const QMatrix& P) {
    return inv_or_throw(P.transpose(), "pairing") * C.transpose() * P;
}

QMatrix induced_pairing(const QMatrix& psi, const QMatrix& pi, const QMatrix& G) {
    int N = G.rows;
    if (psi.rows != N || pi.cols != N || psi.cols != pi.rows)
        throw Error(Errc::ShapeMismatch, "compression maps do not fit the form");
    if (rank(psi) != psi.cols || rank(pi) != pi.rows)
        throw Error(Errc::OrthogonalityViolation, "Ψ must be injective and Π surjective");
    QMatrix K = nullspace(pi);
    if (K.cols > 0 && !(K.transpose() * G * psi).is_zero())
        throw Error(Errc::OrthogonalityViolation, "im Ψ is not orthogonal to ker Π");
    auto ppt = inverse(pi * pi.transpose());
    QMatrix lift = pi.transpose() * *ppt;  // a right inverse of Π
    QMatrix P = lift.transpose() * G * psi;
    if (!inverse(P)) throw Error(Errc::OrthogonalityViolation, "im Ψ differs from (ker Π)^⊥");
    return P;
}

QMatrix omega_g(const LieAlgebraModel& m) {
    int N = m.N;
    QMatrix o(N * N, N * N);
    for (int i = 0; i < m.dim(); ++i) o = o + kron(m.rep[i], m.dual_matrix(i));
    return o;
}

// ---- bivariate matrices

void BiMatrix::add(int i, int j, int ez, int ew, const UEAElement& c) {
    if (c.is_zero()) return;
    BiPoly& p = at(i, j);
    auto key = std::make_pair(ez, ew);
    auto it = p.find(key);
    if (it == p.end()) {
        p.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) p.erase(it);
    }
}

int BiMatrix::top_z() const {
    int t = kNoTop;
    for (auto& p : e)
        for (auto& [k, c] : p) t = std::max(t, k.first);
    return t;
}

int BiMatrix::top_w() const {
    int t = kNoTop;
    for (auto& p : e)
        for (auto& [k, c] : p) t = std::max(t, k.second);
    return t;
}

BiMatrix bi_constant(const QMatrix& q) {
    BiMatrix m(q.rows, q.cols);
    for (int i = 0; i < q.rows; ++i)
        for (int j = 0; j < q.cols; ++j)
            if (!q(i, j).is_zero()) m.at(i, j)[{0, 0}] = scalar_element(q(i, j));
    return m;
}

BiMatrix bi_tensor(const SeriesMatrix& a, int n, bool first, bool in_w) {
    BiMatrix m(a.rows * n, a.cols * n);
    (in_w ? m.fw : m.fz) = a.floor;
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k)
            for (auto& [x, c] : a.at(i, k))
                for (int j = 0; j < n; ++j) {
                    int r = first ? i * n + j : j * a.rows + i;
                    int col = first ? k * n + j : j * a.cols + k;
                    m.at(r, col)[in_w ? std::make_pair(0, x) : std::make_pair(x, 0)] = c;
                }
    return m;
}

BiMatrix bi_linear(int n, const Rational& cz, const Rational& cw, const Rational& c, const Rational& s,
                   const QMatrix& Q) {
    BiMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.add(i, i, 2, 0, scalar_element(cz));
        m.add(i, i, 0, 2, scalar_element(cw));
        m.add(i, i, 0, 0, scalar_element(c));
    }
    if (!s.is_zero()) {
        if (Q.rows != n || Q.cols != n) throw Error(Errc::ShapeMismatch, "bi_linear operator");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!Q(i, j).is_zero()) m.add(i, j, 0, 0, scalar_element(s * Q(i, j)));
    }
    return m;
}

namespace {

BiMatrix combine(const BiMatrix& a, const BiMatrix& b, const Rational& sb) {
    if (a.rows != b.rows || a.cols != b.cols) throw Error(Errc::ShapeMismatch, "bivariate sum");
    BiMatrix r = a;
    r.fz = std::max(a.fz, b.fz);
    r.fw = std::max(a.fw, b.fw);
    for (size_t k = 0; k < r.e.size(); ++k)
        for (auto& [x, c] : b.e[k]) {
            auto it = r.e[k].find(x);
            if (it == r.e[k].end()) r.e[k].emplace(x, sb * c);
            else add_scaled(it->second, c, sb);
        }
    prune(r);
    return r;
}

}  // namespace

BiMatrix operator+(const BiMatrix& a, const BiMatrix& b) { return combine(a, b, 1); }
BiMatrix operator-(const BiMatrix& a, const BiMatrix& b) { return combine(a, b, -1); }

BiMatrix bi_mul(const UEARing& R, const BiMatrix& a, const BiMatrix& b) {
    if (a.cols != b.rows) throw Error(Errc::ShapeMismatch, "bivariate product");
    bool ea = a.fz == kExact && a.fw == kExact, eb = b.fz == kExact && b.fw == kExact;
    BiMatrix r(a.rows, b.cols);
    r.fz = std::max(contrib(a.fz, b, topz_bound(b), eb), contrib(b.fz, a, topz_bound(a), ea));
    r.fw = std::max(contrib(a.fw, b, topw_bound(b), eb), contrib(b.fw, a, topw_bound(a), ea));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            std::map<std::pair<int, int>, Accumulator> acc;
            for (int k = 0; k < a.cols; ++k) {
                const BiPoly& pa = a.at(i, k);
                const BiPoly& pb = b.at(k, j);
                if (pa.empty() || pb.empty()) continue;
                for (auto& [xa, ca] : pa)
                    for (auto& [xb, cb] : pb) {
                        int ez = xa.first + xb.first, ew = xa.second + xb.second;
                        if (ez < r.fz || ew < r.fw) continue;
                        acc[{ez, ew}].add(R.mul(ca, cb), 1);
                    }
            }
            BiPoly& out = r.at(i, j);
            for (auto& [x, ac] : acc) {
                UEAElement c = ac.take();
                if (!c.is_zero()) out.emplace(x, std::move(c));
            }
        }
    return r;
}

// ---- identities

IdentityData identity_data_end(const SeriesMatrix& A, const QMatrix& G) {
    if (A.rows != A.cols) throw Error(Errc::ShapeMismatch, "expected an endomorphism");
    IdentityData d{A, omega(A.rows), omega(A.rows), {}, {}};
    if (G.rows > 0) d.omega_dag_xy = d.omega_dag_yx = omega_dagger(G);
    return d;
}

IdentityData identity_data_wu(const SeriesMatrix& D, const QMatrix& P) {
    IdentityData d{D, omega(D.cols), omega(D.rows), {}, {}};
    if (P.rows > 0) {
        d.omega_dag_xy = omega_dagger_wu(P);
        d.omega_dag_yx = omega_dagger_uw(P);
    }
    return d;
}

IdentityData identity_data_uw(const SeriesMatrix& C, const QMatrix& P) {
    IdentityData d{C, omega(C.cols), omega(C.rows), {}, {}};
    if (P.rows > 0) {
        d.omega_dag_xy = omega_dagger_uw(P);
        d.omega_dag_yx = omega_dagger_wu(P);
    }
    return d;
}

namespace {

void collect(Report& rep, const UEARing& R, const BiMatrix& diff, IdentityMode mode) {
    rep.floor = diff.fz;
    if (diff.fw != kExact) rep.note("floor_w", std::to_string(diff.fw));
    size_t checked = 0;
    for (int i = 0; i < diff.rows; ++i)
        for (int j = 0; j < diff.cols; ++j)
            for (auto& [x, c] : diff.at(i, j)) {
                ++checked;
                UEAElement t = mode == IdentityMode::ModJ ? R.reduce_mod_J(c) : c;
                if (!t.is_zero()) record(rep, {x.first, x.second, i, j, t});
            }
    rep.note("nonzero_before_reduction", std::to_string(checked));
}

}  // namespace

Report check_identity(const UEARing& R, const IdentityData& d, const YangianParams& p, IdentityMode mode) {
    Report rep;
    rep.check = "yangian";
    rep.note("params", p.str());
    rep.note("mode", mode == IdentityMode::Exact ? "exact" : "mod_J");
    if (!p.beta.is_zero() && (d.omega_dag_xy.rows == 0 || d.omega_dag_yx.rows == 0))
        throw Error(Errc::FormMissing, "β != 0 needs a bilinear form");
    const SeriesMatrix& A = d.A;
    int X = A.cols, Y = A.rows;

    BiMatrix lhs = bi_mul(R, bi_linear(Y * Y, 1, -1, 0, p.alpha, d.omega_y), bi_tensor(A, Y, true, false));
    lhs = bi_mul(R, lhs, bi_linear(X * Y, 1, 1, p.gamma, -p.beta, d.omega_dag_xy));
    lhs = bi_mul(R, lhs, bi_tensor(A, X, false, true));

    BiMatrix rhs = bi_mul(R, bi_tensor(A, Y, false, true), bi_linear(Y * X, 1, 1, p.gamma, -p.beta, d.omega_dag_yx));
    rhs = bi_mul(R, rhs, bi_tensor(A, X, true, false));
    rhs = bi_mul(R, rhs, bi_linear(X * X, 1, -1, 0, p.alpha, d.omega_x));

    collect(rep, R, lhs - rhs, mode);
    return rep;
}

Report check_identity_commutator(const UEARing& R, const SeriesMatrix& A, const QMatrix& G, const YangianParams& p) {
    Report rep;
    rep.check = "yangian-commutator";
    rep.note("params", p.str());
    int n = A.rows;
    if (A.rows != A.cols) throw Error(Errc::ShapeMismatch, "expected an endomorphism");
    if (!p.beta.is_zero() && G.rows == 0) throw Error(Errc::FormMissing, "β != 0 needs a bilinear form");
    int n2 = n * n;
    BiMatrix Az1 = bi_tensor(A, n, true, false), Aw1 = bi_tensor(A, n, true, true);
    BiMatrix Az2 = bi_tensor(A, n, false, false), Aw2 = bi_tensor(A, n, false, true);
    QMatrix zero(n2, n2);
    BiMatrix zmw = bi_linear(n2, 1, -1, 0, 0, zero);
    BiMatrix zpw = bi_linear(n2, 1, 1, p.gamma, 0, zero);
    BiMatrix Om = bi_constant(omega(n));

    BiMatrix zw = bi_mul(R, Az1, Aw2);
    BiMatrix comm = zw - bi_mul(R, Aw2, Az1);
    BiMatrix res = bi_mul(R, bi_mul(R, zmw, zpw), comm);
    res = res - scale(p.alpha, bi_mul(R, zpw, bi_mul(R, Om, bi_mul(R, Aw1, Az2) - zw)));
    if (!p.beta.is_zero()) {
        BiMatrix Od = bi_constant(omega_dagger(G));
        BiMatrix t2 = bi_mul(R, bi_mul(R, Aw2, Od), Az1) - bi_mul(R, bi_mul(R, Az1, Od), Aw2);
        res = res + scale(p.beta, bi_mul(R, zmw, t2));
        BiMatrix t3 = bi_mul(R, bi_mul(R, Aw2, Od), Az2) - bi_mul(R, bi_mul(R, Az2, Od), Aw2);
        res = res + scale(Rational(p.epsilon) * p.alpha * p.beta, t3);
    }
    collect(rep, R, res, IdentityMode::Exact);
    return rep;
}

Report check_commutator_lemma(const UEARing& R) {
    Report rep;
    rep.check = "commutator-lemma";
    const auto& m = R.setup().algebra;
    int n = m.N;
    SeriesMatrix A = build_A(R);
    BiMatrix Az1 = bi_tensor(A, n, true, false), Aw2 = bi_tensor(A, n, false, true);
    BiMatrix lhs = bi_mul(R, Az1, Aw2) - bi_mul(R, Aw2, Az1);
    QMatrix og = omega_g(m);
    QMatrix id = QMatrix::identity(n);
    BiMatrix rhs(n * n, n * n);
    for (int i = 0; i < m.dim(); ++i) {
        QMatrix t = kron(id, m.dual_matrix(i));
        QMatrix c = t * og - og * t;
        UEAElement u = R.gen(i);
        for (int a = 0; a < n * n; ++a)
            for (int b = 0; b < n * n; ++b)
                if (!c(a, b).is_zero()) rhs.add(a, b, 0, 0, c(a, b) * u);
    }
    collect(rep, R, lhs - rhs, IdentityMode::Exact);
    return rep;
}

Report check_omega_g(const LieAlgebraModel& m) {
    Report rep;
    rep.check = "omega-g";
    QMatrix og = omega_g(m);
    QMatrix expect;
    int N = m.N;
    switch (m.family) {
        case Family::GL: expect = omega(N); break;
        case Family::SL: expect = omega(N) - Rational(1, N) * QMatrix::identity(N * N); break;
        case Family::SO:
        case Family::SP: expect = Rational(1, 2) * (omega(N) - omega_dagger(*m.form)); break;
        default: throw Error(Errc::UnsupportedFamily, "no closed form for Ω^g");
    }
    QMatrix diff = og - expect;
    for (int a = 0; a < diff.rows; ++a)
        for (int b = 0; b < diff.cols; ++b)
            if (!diff(a, b).is_zero()) rep.pass = false;
    if (!rep.pass) rep.note("difference", diff.str());
    return rep;
}

Report yangian_for_A(const UEARing& R) {
    const auto& s = R.setup();
    QMatrix G = has_form(s.algebra) ? *s.algebra.form : QMatrix();
    Report rep = check_identity(R, identity_data_end(build_A(R), G), params_for_A(s), IdentityMode::Exact);
    rep.check = "yangian-A";
    return rep;
}

QMatrix lax_pairing(const GradedSetup& s, const LaxResult& r) {
    if (!has_form(s.algebra)) throw Error(Errc::FormMissing, "family has no invariant form");
    return sub(*s.algebra.form, r.S, r.T);
}

Report yangian_for_lax(const UEARing& R, const LaxResult& r) {
    const auto& s = R.setup();
    QMatrix P = has_form(s.algebra) ? lax_pairing(s, r) : QMatrix();
    Report rep = check_identity(R, identity_data_wu(r.L_tilde, P), params_for_lax(r, s), IdentityMode::ModJ);
    rep.check = "yangian-L";
    return rep;
}

Report check_skewadjoint(const UEARing& R, const LaxResult& r) {
    const auto& s = R.setup();
    Report rep;
    rep.check = "skewadjoint-L";
    QMatrix P = lax_pairing(s, r);
    // L† = P^{-1} L^T P^T
    SeriesMatrix adj = negate_variable(sandwich_transpose(inv_or_throw(P, "pairing"), r.L, P.transpose()));
    compare_series(rep, adj, Rational(-s.algebra.epsilon) * r.L);
    return rep;
}

Report check_skewadjoint_A(const UEARing& R) {
    const auto& s = R.setup();
    Report rep;
    rep.check = "skewadjoint-A";
    if (!has_form(s.algebra)) throw Error(Errc::FormMissing, "family has no invariant form");
    const QMatrix& G = *s.algebra.form;
    SeriesMatrix A = build_A(R);
    SeriesMatrix adj = negate_variable(sandwich_transpose(inv_or_throw(G, "form"), A, G));
    compare_series(rep, adj, Rational(-1) * A);
    return rep;
}

SeriesMatrix substitute_affine(const SeriesMatrix& A, const Rational& a, const Rational& b) {
    if (!A.exact()) throw Error(Errc::ShapeMismatch, "substitution needs a polynomial");
    SeriesMatrix r(A.rows, A.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            for (auto& [x, c] : A.at(i, j)) {
                if (x < 0 || x % 2 != 0) throw Error(Errc::ShapeMismatch, "substitution needs a polynomial");
                int k = x / 2;
                // (az+b)^k = Σ C(k,q) a^q b^{k-q} z^q
                Rational binom = 1;
                for (int q = 0; q <= k; ++q) {
                    Rational t = binom;
                    for (int u = 0; u < q; ++u) t *= a;
                    for (int u = 0; u < k - q; ++u) t *= b;
                    r.add(i, j, 2 * q, t * c);
                    binom = binom * Rational(k - q) / Rational(q + 1);
                }
            }
    return r;
}

TransformReports transform_checks(const UEARing& R, const Rational& a, const Rational& b, int floor) {
    const auto& s = R.setup();
    const auto& m = s.algebra;
    int N = m.N;
    YangianParams p = params_for_A(s);
    QMatrix G = has_form(m) ? *m.form : QMatrix();
    SeriesMatrix A = build_A(R);
    TransformReports out;

    // (a) A(az+b)
    YangianParams pa{p.alpha / a, p.beta / a, (p.gamma + Rational(2) * b) / a, p.epsilon};
    SeriesMatrix Aab = substitute_affine(A, a, b);
    out.affine = check_identity(R, identity_data_end(Aab, G), pa, IdentityMode::Exact);
    out.affine.check = "transform-affine";

    // (b) Π A Ψ with im Ψ = (ker Π)^⊥, U and W swapped
    int k = std::max(1, N / 2);
    std::vector<int> psi, pi;
    for (int q = 0; q < k; ++q) psi.push_back(q);
    if (has_form(m)) {
        for (int c = 0; c < N; ++c) {
            bool pairs = false;
            for (int q : psi) pairs = pairs || !G(c, q).is_zero();
            if (pairs) pi.push_back(c);
        }
    } else {
        for (int q = N - k; q < N; ++q) pi.push_back(q);
    }
    CompressionMaps maps{psi, pi};
    QMatrix P = has_form(m) ? induced_pairing(maps.psi_matrix(N), maps.pi_matrix(N), G) : QMatrix();
    SeriesMatrix C = submatrix(A, pi, psi);
    out.compression = check_identity(R, identity_data_uw(C, P), p, IdentityMode::Exact);
    out.compression.check = "transform-compression";

    // (c) A^{-1}
    YangianParams pc{-p.alpha, -p.beta, p.gamma - p.beta * Rational(N), p.epsilon};
    out.inverse = check_identity(R, identity_data_end(invert(R, A, floor), G), pc, IdentityMode::Exact);
    out.inverse.check = "transform-inverse";

    // (d) |A(az+b)|_{Ψ,Π}, with a set of coordinates closed under pairing
    std::vector<int> sym = {0};
    if (N > 1) sym.push_back(N - 1);
    CompressionMaps qm{sym, sym};
    QMatrix Pq = has_form(m) ? induced_pairing(qm.psi_matrix(N), qm.pi_matrix(N), G) : QMatrix();
    int du = static_cast<int>(sym.size());
    YangianParams pd{p.alpha / a, p.beta / a, (p.gamma - p.beta * Rational(N - du) + Rational(2) * b) / a, p.epsilon};
    SeriesMatrix Q = quasideterminant(R, Aab, qm, floor);
    out.quasidet = check_identity(R, identity_data_wu(Q, Pq), pd, IdentityMode::Exact);
    out.quasidet.check = "transform-quasidet";
    return out;
}

}  // namespace wlax
