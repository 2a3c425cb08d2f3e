#include "wlax/uea.hpp"

#include <algorithm>
#include <climits>

#include "wlax/errors.hpp"

namespace wlax {

namespace {
constexpr size_t kProductMemoCap = 1500000;

uint64_t key(uint32_t a, uint32_t b) { return (static_cast<uint64_t>(a) << 32) | b; }
}  // namespace

Rational UEAElement::scalar_part() const {
    if (!terms.empty() && terms[0].first == kUnit) return terms[0].second;
    return 0;
}

bool operator==(const UEAElement& a, const UEAElement& b) { return a.terms == b.terms; }

namespace {
UEAElement merge(const UEAElement& a, const UEAElement& b, const Rational& sb) {
    UEAElement r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
            r.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
            r.terms.emplace_back(b.terms[j].first, b.terms[j].second * sb);
            ++j;
        } else {
            Rational c = a.terms[i].second + b.terms[j].second * sb;
            if (!c.is_zero()) r.terms.emplace_back(a.terms[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return r;
}
}  // namespace

UEAElement operator+(const UEAElement& a, const UEAElement& b) { return merge(a, b, 1); }
UEAElement operator-(const UEAElement& a, const UEAElement& b) { return merge(a, b, -1); }
UEAElement operator-(const UEAElement& a) { return Rational(-1) * a; }

UEAElement operator*(const Rational& s, const UEAElement& a) {
    UEAElement r;
    if (s.is_zero()) return r;
    r.terms.reserve(a.terms.size());
    for (auto& [m, c] : a.terms) r.terms.emplace_back(m, c * s);
    return r;
}

void add_scaled(UEAElement& acc, const UEAElement& x, const Rational& s) {
    if (s.is_zero() || x.is_zero()) return;
    acc = merge(acc, x, s);
}

UEAElement scalar_element(const Rational& s) {
    UEAElement r;
    if (!s.is_zero()) r.terms.emplace_back(kUnit, s);
    return r;
}

void Accumulator::add(MonoId m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = map_.try_emplace(m, c);
    if (!inserted) it->second += c;
}

void Accumulator::add(const UEAElement& x, const Rational& s) {
    if (s.is_zero()) return;
    if (s.is_one()) {
        for (auto& [m, c] : x.terms) add(m, c);
    } else {
        for (auto& [m, c] : x.terms) add(m, c * s);
    }
}

UEAElement Accumulator::take() {
    UEAElement r;
    r.terms.reserve(map_.size());
    for (auto& [m, c] : map_)
        if (!c.is_zero()) r.terms.emplace_back(m, std::move(c));
    map_.clear();
    std::sort(r.terms.begin(), r.terms.end(), [](auto& x, auto& y) { return x.first < y.first; });
    return r;
}

UEARing::UEARing(const GradedSetup& s) : setup_(s), dim_(s.algebra.dim()) {
    if (dim_ > 60000) throw Error(Errc::ShapeMismatch, "algebra too large for 16-bit factor indices");
    delta2_ = s.delta2;
    labels_ = s.algebra.labels;
    fpair_.resize(dim_);
    for (int i = 0; i < dim_; ++i) fpair_[i] = s.f_pairing(i);
    intern(Word());
}

MonoId UEARing::intern(const Word& w) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = ids_.find(w);
    if (it != ids_.end()) return it->second;
    MonoId id = static_cast<MonoId>(words_.size());
    words_.push_back(w);
    int wt = 0;
    for (char16_t f : w) wt += 2 - delta2_[f];
    weight2_.push_back(wt);
    ids_.emplace(w, id);
    return id;
}

std::vector<int> UEARing::factors(MonoId m) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    const Word& w = word(m);
    return std::vector<int>(w.begin(), w.end());
}

int UEARing::kazhdan2_of(MonoId m) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    return weight2_[m];
}

size_t UEARing::monomial_count() const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    return words_.size();
}

void UEARing::clear_product_memo() const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    pmemo_.clear();
}

UEAElement UEARing::gen(int i) const {
    UEAElement r;
    r.terms.emplace_back(intern(Word(1, static_cast<char16_t>(i))), 1);
    return r;
}

UEAElement UEARing::lie(const QVec& c) const {
    Accumulator acc;
    for (int i = 0; i < dim_; ++i)
        if (!c[i].is_zero()) acc.add(intern(Word(1, static_cast<char16_t>(i))), c[i]);
    return acc.take();
}

const UEAElement& UEARing::lmul(int g, MonoId m) const {
    uint64_t k = key(static_cast<uint32_t>(g), m);
    auto it = lmemo_.find(k);
    if (it != lmemo_.end()) return it->second;
    const Word& w = word(m);
    UEAElement res;
    if (w.empty() || g <= w[0]) {
        Word nw;
        nw.reserve(w.size() + 1);
        nw.push_back(static_cast<char16_t>(g));
        nw.append(w);
        res.terms.emplace_back(intern(nw), 1);
    } else {
        int a1 = w[0];
        MonoId rest = intern(w.substr(1));
        Accumulator acc;
        // g a1 rest = a1 (g rest) + [g,a1] rest
        const UEAElement& t = lmul(g, rest);
        for (auto& [n, c] : t.terms) acc.add(lmul(a1, n), c);
        for (auto& [kk, s] : setup_.algebra.bracket(g, a1)) acc.add(lmul(kk, rest), s);
        res = acc.take();
    }
    return lmemo_.emplace(k, std::move(res)).first->second;
}

const UEAElement& UEARing::pmul(MonoId a, MonoId b) const {
    uint64_t k = key(a, b);
    auto it = pmemo_.find(k);
    if (it != pmemo_.end()) return it->second;
    UEAElement res;
    if (a == kUnit) {
        res.terms.emplace_back(b, 1);
    } else {
        const Word& w = word(a);
        int g = w[0];
        MonoId rest = intern(w.substr(1));
        const UEAElement& t = pmul(rest, b);
        if (t.terms.size() == 1) {
            res = t.terms[0].second * lmul(g, t.terms[0].first);
        } else {
            Accumulator acc;
            for (auto& [n, c] : t.terms) acc.add(lmul(g, n), c);
            res = acc.take();
        }
    }
    return pmemo_.emplace(k, std::move(res)).first->second;
}

UEAElement UEARing::mul(const UEAElement& a, const UEAElement& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    std::lock_guard<std::recursive_mutex> lk(mu_);
    if (pmemo_.size() > kProductMemoCap) pmemo_.clear();
    if (a.is_scalar()) return a.terms[0].second * b;
    if (b.is_scalar()) return b.terms[0].second * a;
    Accumulator acc;
    for (auto& [ma, ca] : a.terms)
        for (auto& [mb, cb] : b.terms) acc.add(pmul(ma, mb), ca * cb);
    return acc.take();
}

void UEARing::left_mul_into(int g, const UEAElement& a, const Rational& s, Accumulator& acc) const {
    for (auto& [m, c] : a.terms) acc.add(lmul(g, m), c * s);
}

UEAElement UEARing::left_mul(int g, const UEAElement& a) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    Accumulator acc;
    left_mul_into(g, a, 1, acc);
    return acc.take();
}

UEAElement UEARing::monomial(const std::vector<int>& fs, const Rational& c) const {
    UEAElement r = scalar_element(c);
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) r = left_mul(*it, r);
    return r;
}

UEAElement UEARing::commutator(const UEAElement& a, const UEAElement& b) const {
    return mul(a, b) - mul(b, a);
}

int UEARing::kazhdan_weight2(const UEAElement& a) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    int w = INT_MIN;
    for (auto& [m, c] : a.terms) w = std::max(w, weight2_[m]);
    return w;
}

MElement UEARing::reduce_mod_J(const UEAElement& a) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    Accumulator acc;
    for (auto& [m, c] : a.terms) {
        auto it = jmemo_.find(m);
        if (it == jmemo_.end()) {
            const Word& w = word(m);
            size_t len = w.size();
            Rational s = 1;
            while (len > 0 && delta2_[w[len - 1]] >= 2) {
                s *= fpair_[w[len - 1]];
                --len;
                if (s.is_zero()) break;
            }
            MonoId pre = s.is_zero() ? kUnit : intern(w.substr(0, len));
            it = jmemo_.emplace(m, std::make_pair(pre, s)).first;
        }
        if (!it->second.second.is_zero()) acc.add(it->second.first, c * it->second.second);
    }
    return acc.take();
}

bool UEARing::is_m_element(const UEAElement& a) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    for (auto& [m, c] : a.terms)
        for (char16_t f : word(m))
            if (delta2_[f] >= 2) return false;
    return true;
}

Rational UEARing::epsilon0(const UEAElement& a) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    Rational r;
    for (auto& [m, c] : a.terms) {
        if (weight2_[m] > 0)
            throw Error(Errc::PositiveWeight, "monomial " + render_monomial(m) + " has positive Kazhdan weight");
        Rational t = c;
        for (char16_t f : word(m)) t *= fpair_[f];
        r += t;
    }
    return r;
}

std::string UEARing::render_monomial(MonoId m) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    const Word& w = word(m);
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += labels_[w[i]];
    }
    return s;
}

std::string UEARing::render(const UEAElement& a) const {
    if (a.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : a.terms) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (m == kUnit) {
            s += mag.str();
        } else {
            if (!mag.is_one()) s += mag.str() + "*";
            s += render_monomial(m);
        }
    }
    return s;
}

}  // namespace wlax
