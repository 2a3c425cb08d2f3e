#include "wlax/liealg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wlax/errors.hpp"

namespace wlax {

const char* family_name(Family f) {
    switch (f) {
        case Family::GL: return "gl";
        case Family::SL: return "sl";
        case Family::SO: return "so";
        case Family::SP: return "sp";
        case Family::Generic: return "generic";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "gl") return Family::GL;
    if (s == "sl") return Family::SL;
    if (s == "so") return Family::SO;
    if (s == "sp") return Family::SP;
    throw Error(Errc::InvalidFamily, "unknown family '" + s + "'");
}

int family_dimension(Family f, int n) {
    switch (f) {
        case Family::GL: return n * n;
        case Family::SL: return n * n - 1;
        case Family::SO: return n * (n - 1) / 2;
        case Family::SP: return n * (n + 1) / 2;
        case Family::Generic: break;
    }
    throw Error(Errc::UnsupportedFamily, "no dimension formula");
}

QMatrix LieAlgebraModel::matrix_of(const QVec& c) const {
    QMatrix m(N, N);
    for (int i = 0; i < dim(); ++i) {
        if (c[i].is_zero()) continue;
        const QMatrix& r = rep[i];
        for (size_t k = 0; k < m.a.size(); ++k)
            if (!r.a[k].is_zero()) m.a[k] += c[i] * r.a[k];
    }
    return m;
}

std::optional<QVec> LieAlgebraModel::try_coords(const QMatrix& m) const {
    QVec c(dim());
    for (int i = 0; i < dim(); ++i) {
        // (u^i | m) = tr(U^i M)
        Rational t;
        for (int j = 0; j < dim(); ++j) {
            if (dual[i][j].is_zero()) continue;
            const QMatrix& r = rep[j];
            Rational tr;
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b)
                    if (!r(a, b).is_zero() && !m(b, a).is_zero()) tr += r(a, b) * m(b, a);
            t += dual[i][j] * tr;
        }
        c[i] = t;
    }
    if (matrix_of(c) != m) return std::nullopt;
    return c;
}

QVec LieAlgebraModel::coords(const QMatrix& m) const {
    auto c = try_coords(m);
    if (!c) throw Error(Errc::ConstructionFailed, "matrix does not lie in the algebra");
    return *c;
}

Rational LieAlgebraModel::trace_form(const QVec& a, const QVec& b) const {
    Rational s;
    for (int i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j)
            if (!b[j].is_zero()) s += a[i] * b[j] * gram(i, j);
    }
    return s;
}

QMatrix LieAlgebraModel::adjoint(const QMatrix& a) const {
    if (!form) throw Error(Errc::FormMissing, "adjoint needs a bilinear form on V");
    auto gi = inverse(*form);
    return *gi * a.transpose() * *form;
}

namespace {

// Fill gram, duals and structure constants from labels + rep.
void finish_model(LieAlgebraModel& m) {
    int n = m.dim();
    m.gram = QMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational t = (m.rep[i] * m.rep[j]).trace();
            m.gram(i, j) = t;
            m.gram(j, i) = t;
        }
    auto gi = inverse(m.gram);
    if (!gi) throw Error(Errc::DegenerateForm, "trace form is degenerate");
    m.gram_inv = *gi;
    m.dual.assign(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.dual[i][j] = m.gram_inv(i, j);
    m.brackets.assign(static_cast<size_t>(n) * n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (j < i) {
                auto& src = m.brackets[static_cast<size_t>(j) * n + i];
                SparseComb neg;
                for (auto& [k, c] : src) neg.emplace_back(k, -c);
                m.brackets[static_cast<size_t>(i) * n + j] = neg;
                continue;
            }
            auto c = m.try_coords(commutator(m.rep[i], m.rep[j]));
            if (!c) throw Error(Errc::ConstructionFailed, "basis is not closed under the bracket");
            SparseComb sc;
            for (int k = 0; k < n; ++k)
                if (!(*c)[k].is_zero()) sc.emplace_back(k, (*c)[k]);
            m.brackets[static_cast<size_t>(i) * n + j] = sc;
        }
}

std::string vl(const LieAlgebraModel& m, int a) {
    if (!m.vlabels.empty()) return m.vlabels[a];
    return std::to_string(a + 1);
}

}  // namespace

LieAlgebraModel build_algebra_signed(Family f, int n, const std::vector<int>& signs,
                                     std::vector<std::string> vlabels) {
    if (f != Family::SO && f != Family::SP)
        throw Error(Errc::UnsupportedFamily, "signed realization only for so/sp");
    if (static_cast<int>(signs.size()) != n) throw Error(Errc::ShapeMismatch, "sign vector length");
    LieAlgebraModel m;
    m.family = f;
    m.N = n;
    m.vlabels = std::move(vlabels);
    m.epsilon = f == Family::SO ? 1 : -1;
    auto pr = [n](int a) { return n - 1 - a; };
    QMatrix g(n, n);
    for (int a = 0; a < n; ++a) g(a, pr(a)) = -signs[a];
    for (int a = 0; a < n; ++a)
        if (g(pr(a), a) != Rational(m.epsilon) * g(a, pr(a)))
            throw Error(Errc::DegenerateForm, "sign vector does not give the family's symmetry");
    m.form = g;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // a + b <= N (so) or a + b <= N + 1 (sp), 1-based
            int lim = f == Family::SO ? n - 2 : n - 1;
            if (a + b > lim) continue;
            QMatrix u = QMatrix::unit(n, n, a, b);
            u(pr(b), pr(a)) -= Rational(signs[a] * signs[b]);
            if (b == pr(a)) u = Rational(1, 2) * u;
            m.rep.push_back(u);
            m.labels.push_back("F[" + vl(m, a) + "," + vl(m, b) + "]");
            m.keys.push_back({a, b});
        }
    for (auto& u : m.rep)
        if (m.adjoint(u) != Rational(-1) * u)
            throw Error(Errc::ConstructionFailed, "basis element is not skewadjoint");
    finish_model(m);
    return m;
}

LieAlgebraModel build_algebra(Family f, int n) {
    if (n < 1) throw Error(Errc::InvalidFamily, "n must be positive");
    if (f == Family::SP && n % 2 != 0) throw Error(Errc::InvalidFamily, "sp needs even n");
    if (f == Family::SO && n < 2) throw Error(Errc::InvalidFamily, "so needs n >= 2");
    if (f == Family::SL && n < 2) throw Error(Errc::InvalidFamily, "sl needs n >= 2");
    if (f == Family::SO) return build_algebra_signed(f, n, std::vector<int>(n, -1));
    if (f == Family::SP) {
        std::vector<int> s(n);
        for (int a = 0; a < n; ++a) s[a] = (a + 1) % 2 == 0 ? 1 : -1;
        return build_algebra_signed(f, n, s);
    }
    if (f != Family::GL && f != Family::SL) throw Error(Errc::InvalidFamily, "unknown family");
    LieAlgebraModel m;
    m.family = f;
    m.N = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (f == Family::SL && i == j) continue;
            m.rep.push_back(QMatrix::unit(n, n, i, j));
            m.labels.push_back("e[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]");
            m.keys.push_back({i, j});
        }
    if (f == Family::SL)
        for (int i = 0; i + 1 < n; ++i) {
            QMatrix h(n, n);
            h(i, i) = 1;
            h(i + 1, i + 1) = -1;
            m.rep.push_back(h);
            m.labels.push_back("h[" + std::to_string(i + 1) + "]");
            m.keys.push_back({i, i});
        }
    finish_model(m);
    return m;
}

LieAlgebraModel model_from_rep(std::vector<std::string> labels, std::vector<QMatrix> reps) {
    if (labels.size() != reps.size() || reps.empty())
        throw Error(Errc::ShapeMismatch, "labels and matrices must match");
    LieAlgebraModel m;
    m.family = Family::Generic;
    m.N = reps[0].rows;
    for (auto& r : reps)
        if (r.rows != m.N || r.cols != m.N) throw Error(Errc::ShapeMismatch, "representation matrix size");
    m.labels = std::move(labels);
    m.rep = std::move(reps);
    for (int i = 0; i < m.dim(); ++i) m.keys.push_back({i});
    finish_model(m);
    return m;
}

QVec dual_element(const LieAlgebraModel& m, int i) {
    if (i < 0 || i >= m.dim()) throw Error(Errc::ShapeMismatch, "basis index out of range");
    return m.dual[i];
}

std::vector<int> GradedSetup::positions_with_weight(int w2) const {
    std::vector<int> r;
    for (int a = 0; a < static_cast<int>(vweight2.size()); ++a)
        if (vweight2[a] == w2) r.push_back(a);
    return r;
}

std::vector<int> GradedSetup::distinct_weights() const {
    std::vector<int> w = vweight2;
    std::sort(w.begin(), w.end(), std::greater<>());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
}

std::vector<int> GradedSetup::indices_with_delta_at_least(int d2min) const {
    std::vector<int> r;
    for (int i = 0; i < static_cast<int>(delta2.size()); ++i)
        if (delta2[i] >= d2min) r.push_back(i);
    return r;
}

Rational GradedSetup::f_pairing(int i) const {
    Rational s;
    for (int j = 0; j < algebra.dim(); ++j)
        if (!f[j].is_zero()) s += f[j] * algebra.gram(j, i);
    return s;
}

std::vector<int> parse_partition(const std::string& s) {
    std::vector<int> p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw Error(Errc::InvalidPartition, "empty part in '" + s + "'");
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw Error(Errc::InvalidPartition, "bad part '" + tok + "'");
        }
        if (pos != tok.size() || v <= 0) throw Error(Errc::InvalidPartition, "bad part '" + tok + "'");
        p.push_back(v);
    }
    if (p.empty()) throw Error(Errc::InvalidPartition, "empty partition");
    return p;
}

void validate_partition(Family f, int n, const std::vector<int>& partition) {
    if (partition.empty()) throw Error(Errc::InvalidPartition, "empty partition");
    int sum = 0;
    for (int p : partition) {
        if (p <= 0) throw Error(Errc::InvalidPartition, "parts must be positive");
        sum += p;
    }
    if (sum != n) throw Error(Errc::InvalidPartition, "parts sum to " + std::to_string(sum) + ", not " + std::to_string(n));
    if (f == Family::SO || f == Family::SP) {
        int bad_parity = f == Family::SO ? 0 : 1;  // so: even parts, sp: odd parts
        std::vector<int> mult(n + 1, 0);
        for (int p : partition) ++mult[p];
        for (int p = 1; p <= n; ++p)
            if (p % 2 == bad_parity && mult[p] % 2 != 0)
                throw Error(Errc::InvalidPartition, std::string(f == Family::SO ? "so: even" : "sp: odd") +
                                                        " part " + std::to_string(p) + " has odd multiplicity");
    }
}

namespace {

LieAlgebraModel reorder(const LieAlgebraModel& m, const std::vector<int>& perm) {
    int n = m.dim();
    std::vector<int> inv(n);
    for (int k = 0; k < n; ++k) inv[perm[k]] = k;
    LieAlgebraModel r;
    r.family = m.family;
    r.N = m.N;
    r.form = m.form;
    r.epsilon = m.epsilon;
    r.vlabels = m.vlabels;
    for (int k = 0; k < n; ++k) {
        r.labels.push_back(m.labels[perm[k]]);
        r.keys.push_back(m.keys[perm[k]]);
        r.rep.push_back(m.rep[perm[k]]);
    }
    r.gram = QMatrix(n, n);
    r.gram_inv = QMatrix(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            r.gram(k, l) = m.gram(perm[k], perm[l]);
            r.gram_inv(k, l) = m.gram_inv(perm[k], perm[l]);
        }
    r.dual.assign(n, QVec(n));
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) r.dual[k][l] = m.dual[perm[k]][perm[l]];
    r.brackets.assign(static_cast<size_t>(n) * n, {});
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            SparseComb sc;
            for (auto& [idx, c] : m.bracket(perm[k], perm[l])) sc.emplace_back(inv[idx], c);
            std::sort(sc.begin(), sc.end(), [](auto& x, auto& y) { return x.first < y.first; });
            r.brackets[static_cast<size_t>(k) * n + l] = sc;
        }
    return r;
}

// Jordan data for a partition: matrices of an sl2-triple in the standard
// basis of V, with X diagonal.
struct TripleMats {
    QMatrix F, X, E;
};

TripleMats chain_triple(int N, const std::vector<std::vector<int>>& chains) {
    // chains[c][t] = abstract index of the t-th vector (t = 0..p-1), f w_t = w_{t+1}
    TripleMats t{QMatrix(N, N), QMatrix(N, N), QMatrix(N, N)};
    for (auto& ch : chains) {
        int p = static_cast<int>(ch.size());
        for (int s = 0; s < p; ++s) {
            t.X(ch[s], ch[s]) = Rational(p - 1 - 2 * s, 2);
            if (s + 1 < p) {
                t.F(ch[s + 1], ch[s]) = 1;
                t.E(ch[s], ch[s + 1]) = Rational((s + 1) * (p - 1 - s));
            }
        }
    }
    return t;
}

TripleMats orthosymplectic_triple(const LieAlgebraModel& m, const std::vector<int>& parts) {
    const int N = m.N;
    const int eps = m.epsilon;
    const QMatrix& GT = *m.form;
    // group parts by size, descending
    std::vector<int> sizes = parts;
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    struct Unit {
        int p;
        int c1;
        int c2;  // -1 for a self-paired chain
    };
    std::vector<std::vector<int>> chains;
    std::vector<Unit> units;
    int next = 0;
    auto new_chain = [&](int p) {
        std::vector<int> ch(p);
        for (int s = 0; s < p; ++s) ch[s] = next++;
        chains.push_back(ch);
        return static_cast<int>(chains.size()) - 1;
    };
    for (size_t i = 0; i < sizes.size();) {
        size_t j = i;
        while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
        int p = sizes[i];
        int mult = static_cast<int>(j - i);
        for (int k = 0; k < mult / 2; ++k) {
            int a = new_chain(p);
            int b = new_chain(p);
            units.push_back({p, a, b});
        }
        if (mult % 2) {
            if ((((p - 1) % 2 == 0) ? 1 : -1) != eps)
                throw Error(Errc::InvalidPartition, "unpaired block of size " + std::to_string(p));
            units.push_back({p, new_chain(p), -1});
        }
        i = j;
    }
    auto mirror = [N](int q) { return N - 1 - q; };
    QMatrix Gabs(N, N);
    QMatrix P(N, N);
    int lp = 0;
    struct Middle {
        int chain;
        int vec;
        int p;
    };
    std::vector<Middle> middles;
    std::vector<std::pair<int, int>> self_odd_first;  // (chain, position of its first vector)
    auto set_pair_form = [&](int c1, int c2, int p, const Rational& kappa) {
        for (int t = 0; t < p; ++t) {
            Rational v = (t % 2 == 0) ? kappa : -kappa;
            int x = chains[c1][t];
            int y = chains[c2][p - 1 - t];
            Gabs(x, y) = v;
            if (c1 != c2) Gabs(y, x) = Rational(eps) * v;
        }
    };
    for (auto& u : units) {
        if (u.c2 >= 0) {
            int q0 = lp;
            for (int t = 0; t < u.p; ++t) {
                int q = lp++;
                P(chains[u.c1][t], q) = 1;
                P(chains[u.c2][u.p - 1 - t], mirror(q)) = 1;
            }
            set_pair_form(u.c1, u.c2, u.p, GT(q0, mirror(q0)));
        } else {
            int h = u.p / 2;
            int q0 = lp;
            for (int t = 0; t < h; ++t) {
                int q = lp++;
                P(chains[u.c1][t], q) = 1;
                P(chains[u.c1][u.p - 1 - t], mirror(q)) = 1;
            }
            if (u.p % 2 == 0) {
                set_pair_form(u.c1, u.c1, u.p, GT(q0, mirror(q0)));
            } else {
                middles.push_back({u.c1, chains[u.c1][h], u.p});
            }
        }
    }
    // middle vectors of odd self-paired chains: combine in pairs, last one
    // (if any) goes to the centre of the anti-diagonal
    size_t k = middles.size();
    for (size_t j = 0; j < k; ++j) {
        Rational mu;
        if (j + 1 == k && k % 2 == 1) {
            if (N % 2 == 0) throw Error(Errc::ConstructionFailed, "no centre for an odd self-paired block");
            mu = GT((N - 1) / 2, (N - 1) / 2);
        } else {
            mu = (j % 2 == 0) ? 1 : -1;
        }
        int h = middles[j].p / 2;
        Rational kappa = (h % 2 == 0) ? mu : -mu;
        set_pair_form(middles[j].chain, middles[j].chain, middles[j].p, kappa);
    }
    for (size_t j = 0; j + 1 < k; j += 2) {
        int q = lp++;
        P(middles[j].vec, q) = 1;
        P(middles[j + 1].vec, q) = 1;
        P(middles[j].vec, mirror(q)) = 1;
        P(middles[j + 1].vec, mirror(q)) = -1;
    }
    if (k % 2 == 1) {
        int q = lp;
        if (q != mirror(q)) throw Error(Errc::ConstructionFailed, "centre position mismatch");
        P(middles[k - 1].vec, q) = 1;
    }
    if (lp != N / 2) throw Error(Errc::ConstructionFailed, "layout does not fill V");
    QMatrix GP = P.transpose() * Gabs * P;
    for (int q = 0; q < N / 2; ++q) {
        int qq = mirror(q);
        if (GP(q, qq).is_zero()) throw Error(Errc::ConstructionFailed, "isotropic pair in layout");
        Rational s = GT(q, qq) / GP(q, qq);
        if (s.is_one()) continue;
        for (int r = 0; r < N; ++r) P(r, qq) *= s;
    }
    GP = P.transpose() * Gabs * P;
    if (GP != GT) throw Error(Errc::ConstructionFailed, "could not match the invariant form");
    auto Pinv = inverse(P);
    if (!Pinv) throw Error(Errc::ConstructionFailed, "singular layout");
    TripleMats abs = chain_triple(N, chains);
    TripleMats t{*Pinv * abs.F * P, *Pinv * abs.X * P, *Pinv * abs.E * P};
    for (const QMatrix* a : {&t.F, &t.X, &t.E})
        if (m.adjoint(*a) != Rational(-1) * *a)
            throw Error(Errc::ConstructionFailed, "sl2-triple is not skewadjoint");
    return t;
}

}  // namespace

GradedSetup setup_from_triple(const LieAlgebraModel& m, const QMatrix& F, const QMatrix& X,
                              const QMatrix& E, std::vector<int> partition) {
    if (!X.is_diagonal()) throw Error(Errc::ConstructionFailed, "X must be diagonal");
    if (commutator(X, E) != E || commutator(X, F) != Rational(-1) * F ||
        commutator(E, F) != Rational(2) * X)
        throw Error(Errc::ConstructionFailed, "sl2 relations fail");
    int N = m.N;
    std::vector<int> vw(N);
    for (int a = 0; a < N; ++a) {
        Rational w2 = Rational(2) * X(a, a);
        if (!w2.is_integer()) throw Error(Errc::ConstructionFailed, "X weights must be half-integers");
        vw[a] = static_cast<int>(std::stol(w2.str()));
    }
    int n = m.dim();
    std::vector<int> del(n);
    for (int i = 0; i < n; ++i) {
        const QMatrix& u = m.rep[i];
        int found = 0;
        bool have = false;
        for (int a = 0; a < N && !have; ++a)
            for (int b = 0; b < N; ++b)
                if (!u(a, b).is_zero()) {
                    found = vw[a] - vw[b];
                    have = true;
                    break;
                }
        if (!have) throw Error(Errc::ConstructionFailed, "zero basis matrix");
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                if (!u(a, b).is_zero() && vw[a] - vw[b] != found)
                    throw Error(Errc::ConstructionFailed, "basis element " + m.labels[i] + " is not ad x homogeneous");
        del[i] = found;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        if (del[a] != del[b]) return del[a] < del[b];
        return m.keys[a] < m.keys[b];
    });
    GradedSetup s;
    s.algebra = reorder(m, perm);
    s.perm = perm;
    s.partition = std::move(partition);
    s.F = F;
    s.X = X;
    s.E = E;
    s.f = s.algebra.coords(F);
    s.x = s.algebra.coords(X);
    s.e = s.algebra.coords(E);
    s.vweight2 = vw;
    s.d2 = *std::max_element(vw.begin(), vw.end());
    s.delta2.resize(n);
    for (int k = 0; k < n; ++k) s.delta2[k] = del[perm[k]];
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            if (!s.algebra.dual[k][l].is_zero() && s.delta2[l] != -s.delta2[k])
                throw Error(Errc::ConstructionFailed, "dual basis does not flip the grading");
    return s;
}

GradedSetup build_graded_setup(const LieAlgebraModel& m, std::vector<int> partition) {
    if (m.family == Family::Generic) throw Error(Errc::UnsupportedFamily, "use setup_from_triple for generic models");
    validate_partition(m.family, m.N, partition);
    std::sort(partition.begin(), partition.end(), std::greater<>());
    TripleMats t;
    if (m.family == Family::GL || m.family == Family::SL) {
        std::vector<std::vector<int>> chains;
        int next = 0;
        for (int p : partition) {
            std::vector<int> ch(p);
            for (int s = 0; s < p; ++s) ch[s] = next++;
            chains.push_back(ch);
        }
        t = chain_triple(m.N, chains);
    } else {
        t = orthosymplectic_triple(m, partition);
    }
    return setup_from_triple(m, t.F, t.X, t.E, partition);
}

}  // namespace wlax
