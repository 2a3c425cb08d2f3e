#include "wlax/series.hpp"

#include <algorithm>

#include "wlax/errors.hpp"

namespace wlax {

int SeriesMatrix::top() const {
    int t = kNoTop;
    for (const auto& p : e)
        if (!p.empty()) t = std::max(t, p.rbegin()->first);
    return t;
}

int SeriesMatrix::top_bound() const {
    int t = top();
    if (!exact()) t = std::max(t, floor - 1);
    return t;
}

bool SeriesMatrix::is_zero() const {
    for (const auto& p : e)
        if (!p.empty()) return false;
    return true;
}

UEAElement SeriesMatrix::coeff(int i, int j, int exp2) const {
    const Poly& p = at(i, j);
    auto it = p.find(exp2);
    return it == p.end() ? UEAElement{} : it->second;
}

QMatrix SeriesMatrix::scalar_coeff(int exp2) const {
    QMatrix c(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            UEAElement x = coeff(i, j, exp2);
            if (!x.is_scalar()) throw Error(Errc::NonScalarLeading, "leading coefficient is not scalar");
            c(i, j) = x.scalar_part();
        }
    return c;
}

void SeriesMatrix::set(int i, int j, int exp2, const UEAElement& c) {
    Poly& p = at(i, j);
    if (c.is_zero()) p.erase(exp2);
    else p[exp2] = c;
}

void SeriesMatrix::add(int i, int j, int exp2, const UEAElement& c) {
    if (c.is_zero()) return;
    Poly& p = at(i, j);
    auto it = p.find(exp2);
    if (it == p.end()) {
        p.emplace(exp2, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) p.erase(it);
    }
}

void SeriesMatrix::prune() {
    for (auto& p : e) {
        if (!exact()) p.erase(p.begin(), p.lower_bound(floor));
        for (auto it = p.begin(); it != p.end();) {
            if (it->second.is_zero()) it = p.erase(it);
            else ++it;
        }
    }
}

void SeriesMatrix::raise_floor(int f) {
    if (f <= floor) return;
    floor = f;
    prune();
}

SeriesMatrix SeriesMatrix::identity(int n) {
    SeriesMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i)[0] = scalar_element(1);
    return m;
}

SeriesMatrix SeriesMatrix::constant(const QMatrix& q, int exp2) {
    SeriesMatrix m(q.rows, q.cols);
    for (int i = 0; i < q.rows; ++i)
        for (int j = 0; j < q.cols; ++j)
            if (!q(i, j).is_zero()) m.at(i, j)[exp2] = scalar_element(q(i, j));
    return m;
}

namespace {

SeriesMatrix combine(const SeriesMatrix& a, const SeriesMatrix& b, const Rational& sb) {
    if (a.rows != b.rows || a.cols != b.cols) throw Error(Errc::ShapeMismatch, "series matrix sum");
    SeriesMatrix r = a;
    r.floor = std::max(a.floor, b.floor);
    for (size_t k = 0; k < r.e.size(); ++k)
        for (auto& [x, c] : b.e[k]) {
            auto it = r.e[k].find(x);
            if (it == r.e[k].end()) r.e[k].emplace(x, sb * c);
            else add_scaled(it->second, c, sb);
        }
    r.prune();
    return r;
}

// floor contribution of the unknown part of `side` multiplied by `other`
int unknown_contrib(const SeriesMatrix& side, const SeriesMatrix& other) {
    if (side.exact()) return kExact;
    if (other.exact() && other.is_zero()) return kExact;
    return side.floor + other.top_bound();
}

using Dense = std::vector<UEAElement>;

}  // namespace

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) { return combine(a, b, 1); }
SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) { return combine(a, b, -1); }

SeriesMatrix operator*(const Rational& s, const SeriesMatrix& a) {
    SeriesMatrix r = a;
    for (auto& p : r.e)
        for (auto& [x, c] : p) c = s * c;
    r.prune();
    return r;
}

SeriesMatrix shift(const SeriesMatrix& a, int k) {
    SeriesMatrix r(a.rows, a.cols, a.exact() ? kExact : a.floor + k);
    for (size_t i = 0; i < a.e.size(); ++i)
        for (auto& [x, c] : a.e[i]) r.e[i].emplace(x + k, c);
    return r;
}

SeriesMatrix mat_mul(const UEARing& R, const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.cols != b.rows) throw Error(Errc::ShapeMismatch, "series matrix product");
    int fl = std::max(unknown_contrib(a, b), unknown_contrib(b, a));
    SeriesMatrix r(a.rows, b.cols, fl);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            std::map<int, Accumulator> acc;
            for (int k = 0; k < a.cols; ++k) {
                const Poly& pa = a.at(i, k);
                const Poly& pb = b.at(k, j);
                if (pa.empty() || pb.empty()) continue;
                for (auto ia = pa.rbegin(); ia != pa.rend(); ++ia)
                    for (auto ib = pb.rbegin(); ib != pb.rend(); ++ib) {
                        int x = ia->first + ib->first;
                        if (x < fl) break;
                        acc[x].add(R.mul(ia->second, ib->second), 1);
                    }
            }
            Poly& out = r.at(i, j);
            for (auto& [x, ac] : acc) {
                UEAElement c = ac.take();
                if (!c.is_zero()) out.emplace(x, std::move(c));
            }
        }
    return r;
}

SeriesMatrix submatrix(const SeriesMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    SeriesMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()), a.floor);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) r.at(static_cast<int>(i), static_cast<int>(j)) = a.at(rows[i], cols[j]);
    return r;
}

SeriesMatrix map_coeffs(const SeriesMatrix& a, const std::function<UEAElement(const UEAElement&)>& fn) {
    SeriesMatrix r = a;
    for (auto& p : r.e)
        for (auto& [x, c] : p) c = fn(c);
    r.prune();
    return r;
}

SeriesMatrix conjugate_by_weights(const SeriesMatrix& a, const std::vector<int>& rw, const std::vector<int>& cw) {
    if (static_cast<int>(rw.size()) != a.rows || static_cast<int>(cw.size()) != a.cols)
        throw Error(Errc::ShapeMismatch, "weight vector length");
    int smax = INT_MIN;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) smax = std::max(smax, cw[j] - rw[i]);
    SeriesMatrix r(a.rows, a.cols, a.exact() ? kExact : a.floor + smax);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            for (auto& [x, c] : a.at(i, j)) r.at(i, j).emplace(x + cw[j] - rw[i], c);
    r.prune();
    return r;
}

SeriesMatrix invert_apply(const UEARing& R, const SeriesMatrix& m, const SeriesMatrix& rhs, int target) {
    if (m.rows != m.cols || rhs.rows != m.rows) throw Error(Errc::ShapeMismatch, "invert_apply shapes");
    if (target <= kExact) throw Error(Errc::ShapeMismatch, "inversion needs a finite target floor");
    int n = m.rows, k = rhs.cols;
    int top = m.top();
    if (top == kNoTop || (!m.exact() && m.floor > top))
        throw Error(Errc::SingularLeading, "leading coefficient unknown or zero");
    auto Cinv = inverse(m.scalar_coeff(top));
    if (!Cinv) throw Error(Errc::SingularLeading, "leading coefficient is singular");

    // X = Y + Σ_r R_r X shifted, with R_r = -C^{-1} M_{top+r}, r < 0
    std::vector<std::pair<int, Dense>> Rs;
    std::map<int, Dense> by_exp;
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l)
            for (auto& [x, c] : m.at(i, l)) {
                if (x == top) continue;
                Dense& d = by_exp[x - top];
                if (d.empty()) d.resize(static_cast<size_t>(n) * n);
                for (int q = 0; q < n; ++q)
                    if (!(*Cinv)(q, i).is_zero()) add_scaled(d[q * n + l], c, -(*Cinv)(q, i));
            }
    for (auto it = by_exp.rbegin(); it != by_exp.rend(); ++it) Rs.emplace_back(it->first, std::move(it->second));

    std::map<int, Dense> Y;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j)
            for (auto& [x, c] : rhs.at(i, j)) {
                Dense& d = Y[x - top];
                if (d.empty()) d.resize(static_cast<size_t>(n) * k);
                for (int q = 0; q < n; ++q)
                    if (!(*Cinv)(q, i).is_zero()) add_scaled(d[q * k + j], c, (*Cinv)(q, i));
            }

    if (rhs.exact() && rhs.is_zero()) return SeriesMatrix(n, k);
    int fY = rhs.exact() ? kExact : rhs.floor - top;
    int topY = rhs.top_bound() - top;
    int fR = m.exact() ? kExact : m.floor - top;
    int fl = std::max({target, fY, fR == kExact ? kExact : fR + topY});
    int start = Y.empty() ? kNoTop : Y.rbegin()->first;

    std::map<int, Dense> X;
    for (int x = start; x >= fl && start != kNoTop; --x) {
        std::vector<Accumulator> acc(static_cast<size_t>(n) * k);
        bool any = false;
        auto yit = Y.find(x);
        if (yit != Y.end()) {
            for (size_t q = 0; q < acc.size(); ++q) acc[q].add(yit->second[q], 1);
            any = true;
        }
        for (auto& [r, Rr] : Rs) {
            auto xit = X.find(x - r);
            if (xit == X.end()) continue;
            const Dense& Xp = xit->second;
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l) {
                    const UEAElement& rl = Rr[i * n + l];
                    if (rl.is_zero()) continue;
                    for (int j = 0; j < k; ++j) {
                        const UEAElement& xl = Xp[l * k + j];
                        if (xl.is_zero()) continue;
                        acc[i * k + j].add(R.mul(rl, xl), 1);
                        any = true;
                    }
                }
        }
        if (!any) continue;
        Dense d(acc.size());
        bool nz = false;
        for (size_t q = 0; q < acc.size(); ++q) {
            d[q] = acc[q].take();
            nz = nz || !d[q].is_zero();
        }
        if (nz) X.emplace(x, std::move(d));
    }
    SeriesMatrix out(n, k, fl);
    for (auto& [x, d] : X)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j)
                if (!d[i * k + j].is_zero()) out.at(i, j).emplace(x, d[i * k + j]);
    return out;
}

SeriesMatrix invert(const UEARing& R, const SeriesMatrix& m, int target) {
    return invert_apply(R, m, SeriesMatrix::identity(m.rows), target);
}

SeriesMatrix invert_balanced(const UEARing& R, const SeriesMatrix& m, const std::vector<int>& rw,
                             const std::vector<int>& cw, int target) {
    SeriesMatrix hat = conjugate_by_weights(m, rw, cw);
    int smax = INT_MIN;
    for (int b : cw)
        for (int a : rw) smax = std::max(smax, b - a);
    SeriesMatrix hinv = invert(R, hat, target - smax);
    std::vector<int> ny(cw.size()), nx(rw.size());
    for (size_t i = 0; i < cw.size(); ++i) ny[i] = -cw[i];
    for (size_t i = 0; i < rw.size(); ++i) nx[i] = -rw[i];
    return conjugate_by_weights(hinv, ny, nx);
}

QMatrix CompressionMaps::psi_matrix(int n) const {
    QMatrix m(n, static_cast<int>(psi.size()));
    for (size_t k = 0; k < psi.size(); ++k) m(psi[k], static_cast<int>(k)) = 1;
    return m;
}

QMatrix CompressionMaps::pi_matrix(int n) const {
    QMatrix m(static_cast<int>(pi.size()), n);
    for (size_t k = 0; k < pi.size(); ++k) m(static_cast<int>(k), pi[k]) = 1;
    return m;
}

namespace {
constexpr int kMaxDeepen = 16;
}

SeriesMatrix quasideterminant(const UEARing& R, const SeriesMatrix& m, const CompressionMaps& maps, int target) {
    if (maps.psi.size() != maps.pi.size()) throw Error(Errc::ShapeMismatch, "compression is not square");
    int n = m.rows;
    SeriesMatrix rhs = SeriesMatrix::constant(maps.psi_matrix(n));
    int t = target;
    for (int round = 0; round < kMaxDeepen; ++round) {
        SeriesMatrix X = invert_apply(R, m, rhs, t);
        std::vector<int> all(maps.psi.size());
        for (size_t q = 0; q < all.size(); ++q) all[q] = static_cast<int>(q);
        SeriesMatrix B = submatrix(X, maps.pi, all);
        if (B.top() == kNoTop) {
            if (B.exact()) throw Error(Errc::CompressionNotInvertible, "compression vanishes");
            t -= 4;
            continue;
        }
        SeriesMatrix L;
        try {
            L = invert(R, B, target);
        } catch (const Error& e) {
            if (e.code() == Errc::SingularLeading || e.code() == Errc::NonScalarLeading)
                throw Error(Errc::CompressionNotInvertible, std::string("compression: ") + e.what());
            throw;
        }
        if (L.exact() || L.floor <= target) {
            L.raise_floor(target);
            return L;
        }
        t -= L.floor - target;
    }
    throw Error(Errc::CompressionNotInvertible, "precision did not converge");
}

SeriesMatrix dirac_reduction(const UEARing& R, const SeriesMatrix& m, const CompressionMaps& chi1,
                             const CompressionMaps& chi2, int target, const std::vector<int>& w) {
    const auto& T = chi2.psi;
    const auto& Tc = chi2.pi;
    const auto& Sc = chi1.psi;
    const auto& S = chi1.pi;
    SeriesMatrix mts = submatrix(m, T, S);
    if (Tc.empty() && Sc.empty()) return mts;
    if (Tc.size() != Sc.size()) throw Error(Errc::PivotNotInvertible, "pivot is not square");
    SeriesMatrix P = submatrix(m, Tc, Sc);
    SeriesMatrix left = submatrix(m, T, Sc);
    SeriesMatrix right = submatrix(m, Tc, S);
    std::vector<int> rw, cw;
    if (!w.empty()) {
        for (int a : Tc) rw.push_back(w[a]);
        for (int b : Sc) cw.push_back(w[b]);
    }
    int t = target;
    for (int round = 0; round < kMaxDeepen; ++round) {
        SeriesMatrix Pinv;
        try {
            Pinv = w.empty() ? invert(R, P, t) : invert_balanced(R, P, rw, cw, t);
        } catch (const Error& e) {
            if (e.code() == Errc::SingularLeading || e.code() == Errc::NonScalarLeading)
                throw Error(Errc::PivotNotInvertible, std::string("pivot: ") + e.what());
            throw;
        }
        SeriesMatrix res = mts - mat_mul(R, mat_mul(R, left, Pinv), right);
        if (res.exact() || res.floor <= target) {
            res.raise_floor(target);
            return res;
        }
        t -= res.floor - target;
    }
    throw Error(Errc::PivotNotInvertible, "precision did not converge");
}

int common_floor(const SeriesMatrix& a, const SeriesMatrix& b) { return std::max(a.floor, b.floor); }

std::vector<Residue> diff_above(const SeriesMatrix& a, const SeriesMatrix& b, int floor) {
    if (a.rows != b.rows || a.cols != b.cols) throw Error(Errc::ShapeMismatch, "comparison shapes");
    int f = std::max(floor, common_floor(a, b));
    std::vector<Residue> out;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            std::map<int, UEAElement> d;
            for (auto& [x, c] : a.at(i, j))
                if (x >= f) d[x] = c;
            for (auto& [x, c] : b.at(i, j))
                if (x >= f) d[x] = d[x] - c;
            for (auto it = d.rbegin(); it != d.rend(); ++it)
                if (!it->second.is_zero()) out.push_back({it->first, 0, i, j, it->second});
        }
    return out;
}

}  // namespace wlax
