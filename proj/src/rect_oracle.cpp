#include "wlax/rect_oracle.hpp"

#include <string>

#include "wlax/errors.hpp"

namespace wlax {

namespace {

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

std::string variant_name(unsigned v) {
    if (v == Literal) return "literal";
    std::string s;
    if (v & TildeLeading) s += "tilde_leading";
    if (v & UniformHalf) s += std::string(s.empty() ? "" : "+") + "uniform_half";
    return s;
}

std::pair<RectSetup, GradedSetup> build_rect(Family f, int r, int p) {
    if (f != Family::SO && f != Family::SP) throw Error(Errc::InvalidRectangle, "rectangular oracle covers so and sp");
    if (r < 1 || p < 1 || r * p < 2) throw Error(Errc::InvalidRectangle, "need r, p >= 1 and N >= 2");
    RectSetup rs;
    rs.family = f;
    rs.r = r;
    rs.p = p;
    rs.N = r * p;
    rs.epsilon = f == Family::SO ? 1 : -1;
    if (f == Family::SP && rs.N % 2 != 0) throw Error(Errc::InvalidRectangle, "sp needs N even");
    if (f == Family::SO && p % 2 == 0 && r % 2 != 0)
        throw Error(Errc::InvalidRectangle, "so with p even needs r even");
    // case 1 gives ε = -1 for even N, so so_N with N even uses case 2
    rs.case2 = f == Family::SO && rs.N % 2 == 0;
    int n = rs.N / 2;
    rs.eps.resize(rs.N);
    std::vector<std::string> vlabels(rs.N);
    for (int i = 1; i <= r; ++i)
        for (int h = 1; h <= p; ++h) {
            int q = h + (i - 1) * p;
            int e = sign_pow(q);
            if (rs.case2 && q > n) e = sign_pow(1 - h + (r + 1 - i) * p + 2 * rs.N);
            rs.eps[rs.index(i, h)] = e;
            vlabels[rs.index(i, h)] = "(" + std::to_string(i) + "," + std::to_string(h) + ")";
        }
    LieAlgebraModel m = build_algebra_signed(f, rs.N, rs.eps, vlabels);

    QMatrix F(rs.N, rs.N), X(rs.N, rs.N), E(rs.N, rs.N);
    for (int i = 1; i <= r; ++i)
        for (int h = 1; h <= p; ++h) {
            X(rs.index(i, h), rs.index(i, h)) = Rational(p + 1 - 2 * h, 2);
            if (h < p) {
                F(rs.index(i, h + 1), rs.index(i, h)) = 1;
                E(rs.index(i, h), rs.index(i, h + 1)) = h * (p - h);
            }
        }
    GradedSetup s = setup_from_triple(m, F, X, E, std::vector<int>(r, p));
    return {rs, s};
}

QMatrix rect_F(const RectSetup& rs, int a, int b) {
    QMatrix m = QMatrix::unit(rs.N, rs.N, a, b);
    m(rs.prime(b), rs.prime(a)) -= Rational(rs.eps[a] * rs.eps[b]);
    return m;
}

namespace {

struct Tilde {
    std::vector<UEAElement> t;  // f~ at a*N + b
    int N;
    const UEAElement& operator()(int a, int b) const { return t[static_cast<size_t>(a) * N + b]; }
};

// f~_(a),(b) = f_ab / (2 c_ab) + ½ δ_ab (r(1-h) + ε [h >= p/2 + 1])
Tilde tilde_table(const UEARing& R, const RectSetup& rs, bool uniform_half) {
    const auto& m = R.setup().algebra;
    Tilde T{std::vector<UEAElement>(static_cast<size_t>(rs.N) * rs.N), rs.N};
    for (int a = 0; a < rs.N; ++a)
        for (int b = 0; b < rs.N; ++b) {
            QMatrix F = rect_F(rs, a, b);
            UEAElement x;
            if (!F.is_zero()) {
                int c = 1 + (a == rs.prime(b) && !uniform_half ? 1 : 0);
                x = Rational(1, 2 * c) * R.lie(m.coords(F));
            }
            if (a == b) {
                int h = rs.h_of(a);
                Rational sh = Rational(rs.r * (1 - h));
                if (2 * h >= rs.p + 2) sh += Rational(rs.epsilon);
                x = x + scalar_element(Rational(1, 2) * sh);
            }
            T.t[static_cast<size_t>(a) * rs.N + b] = x;
        }
    return T;
}

// poly · (cz z + c)
Poly times_factor(const UEARing& R, const Poly& acc, bool with_z, const UEAElement& c) {
    Poly out;
    auto add = [&](int x, const UEAElement& v) {
        if (v.is_zero()) return;
        auto it = out.find(x);
        if (it == out.end()) out.emplace(x, v);
        else {
            it->second = it->second + v;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (auto& [x, a] : acc) {
        if (with_z) add(x + 2, a);
        if (!c.is_zero()) add(x, R.mul(a, c));
    }
    return out;
}

void add_into(Poly& dst, const Poly& src, int sign) {
    for (auto& [x, c] : src) {
        auto it = dst.find(x);
        if (it == dst.end()) dst.emplace(x, Rational(sign) * c);
        else {
            add_scaled(it->second, c, sign);
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

}  // namespace

SeriesMatrix explicit_L(const UEARing& R, const RectSetup& rs, unsigned v) {
    const auto& m = R.setup().algebra;
    Tilde T = tilde_table(R, rs, (v & UniformHalf) != 0);
    int r = rs.r, p = rs.p;
    SeriesMatrix L(r, r);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            Poly total;
            int target = rs.index(j, p), start = rs.index(i, 1);
            // s = 0
            Poly lead;
            if (!(v & TildeLeading)) {
                QMatrix F = rect_F(rs, target, start);
                if (!F.is_zero()) lead[0] = R.lie(m.coords(F));
            } else {
                lead = times_factor(R, Poly{{0, scalar_element(1)}}, target == start, T(target, start));
            }
            add_into(total, lead, 1);

            // chains (i_1,h_1), ..., (i_s,h_s) with 2 <= h_1 < ... < h_s <= p
            struct Frame {
                Poly acc;
                int last;    // coordinate (i_{t-1}, h_{t-1})
                int hlast;   // h_{t-1}, 1 for the start
                int depth;
            };
            std::vector<Frame> work{{Poly{{0, scalar_element(1)}}, start, 1, 0}};
            while (!work.empty()) {
                Frame fr = std::move(work.back());
                work.pop_back();
                if (fr.depth >= 1) {
                    // close the chain with the factor toward (j,p)
                    Poly closed = times_factor(R, fr.acc, fr.last == target, T(target, fr.last));
                    add_into(total, closed, fr.depth % 2 == 0 ? 1 : -1);
                }
                if (fr.depth == p - 1) continue;
                for (int h = fr.hlast + 1; h <= p; ++h)
                    for (int it = 1; it <= r; ++it) {
                        int tgt = rs.index(it, h - 1);
                        bool with_z = tgt == fr.last;
                        const UEAElement& c = T(tgt, fr.last);
                        if (!with_z && c.is_zero()) continue;
                        Poly next = times_factor(R, fr.acc, with_z, c);
                        if (next.empty()) continue;
                        work.push_back({std::move(next), rs.index(it, h), h, fr.depth + 1});
                    }
            }
            L.at(i - 1, j - 1) = std::move(total);
        }
    return L;
}

Report rect_cross_check(const UEARing& R, const RectSetup& rs, const LaxResult& lr, unsigned v) {
    Report rep;
    rep.check = "rect-oracle";
    rep.note("variant", variant_name(v));
    SeriesMatrix ex = map_coeffs(explicit_L(R, rs, v), [&](const UEAElement& c) { return R.reduce_mod_J(c); });
    // pipeline rows are V[d/2] = v_(i,1), columns V[-d/2] = v_(j,p), both ascending in i
    if (lr.L.rows != rs.r || lr.L.cols != rs.r) throw Error(Errc::ShapeMismatch, "pipeline L has the wrong size");
    for (int i = 1; i <= rs.r; ++i) {
        if (lr.T[i - 1] != rs.index(i, 1) || lr.S[i - 1] != rs.index(i, rs.p))
            throw Error(Errc::ShapeMismatch, "pipeline coordinates differ from the rectangular layout");
    }
    rep.floor = lr.L.floor;
    for (auto& res : diff_above(ex, lr.L, lr.L.floor)) rep.fail(res);
    return rep;
}

}  // namespace wlax
