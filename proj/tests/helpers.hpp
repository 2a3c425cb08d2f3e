#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wlax/liealg.hpp"
#include "wlax/uea.hpp"

namespace th {

inline int idx(const wlax::LieAlgebraModel& m, const std::string& label) {
    for (int i = 0; i < m.dim(); ++i)
        if (m.labels[i] == label) return i;
    throw std::runtime_error("no basis element " + label);
}

// splitmix64, enough for seeded property tests
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }
    wlax::Rational small_rational() { return wlax::Rational(range(-4, 4), range(1, 3)); }
};

// random element of U(g) of degree <= maxdeg with a few terms
inline wlax::UEAElement random_element(const wlax::UEARing& R, Rng& rng, int maxdeg, int nterms) {
    wlax::UEAElement r;
    for (int t = 0; t < nterms; ++t) {
        int deg = rng.range(0, maxdeg);
        std::vector<int> fs(deg);
        for (auto& f : fs) f = rng.below(R.dim());
        r = r + R.monomial(fs, rng.small_rational());
    }
    return r;
}

// irreducible N-dimensional representation of sl2 on the basis (e, h, f)
inline wlax::GradedSetup sl2_irreducible(int N) {
    wlax::QMatrix E(N, N), F(N, N), H(N, N);
    for (int i = 0; i + 1 < N; ++i) {
        E(i, i + 1) = (i + 1) * (N - 1 - i);
        F(i + 1, i) = 1;
    }
    for (int i = 0; i < N; ++i) H(i, i) = N - 1 - 2 * i;
    auto m = wlax::model_from_rep({"e", "h", "f"}, {E, H, F});
    return wlax::setup_from_triple(m, F, wlax::Rational(1, 2) * H, E);
}

inline wlax::GradedSetup sl2_adjoint() {
    // basis (e,h,f) of V = sl2 itself
    wlax::QMatrix ade(3, 3), adh(3, 3), adf(3, 3);
    ade(0, 1) = -2;
    ade(1, 2) = 1;
    adh(0, 0) = 2;
    adh(2, 2) = -2;
    adf(1, 0) = -1;
    adf(2, 1) = 2;
    auto m = wlax::model_from_rep({"e", "h", "f"}, {ade, adh, adf});
    return wlax::setup_from_triple(m, adf, wlax::Rational(1, 2) * adh, ade);
}

}  // namespace th
