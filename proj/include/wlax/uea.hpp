#pragma once

#include <cstdint>
#include <deque>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wlax/liealg.hpp"

namespace wlax {

using MonoId = uint32_t;
constexpr MonoId kUnit = 0;

// Sparse element of U(g): PBW monomial handle -> nonzero coefficient, sorted
// by handle.  Empty means zero.  An MElement is the same type restricted to
// monomials without g_{>=1} factors.
struct UEAElement {
    std::vector<std::pair<MonoId, Rational>> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_scalar() const { return terms.empty() || (terms.size() == 1 && terms[0].first == kUnit); }
    Rational scalar_part() const;
    size_t size() const { return terms.size(); }
};
using MElement = UEAElement;

bool operator==(const UEAElement& a, const UEAElement& b);
inline bool operator!=(const UEAElement& a, const UEAElement& b) { return !(a == b); }
UEAElement operator+(const UEAElement& a, const UEAElement& b);
UEAElement operator-(const UEAElement& a, const UEAElement& b);
UEAElement operator-(const UEAElement& a);
UEAElement operator*(const Rational& s, const UEAElement& a);
void add_scaled(UEAElement& acc, const UEAElement& x, const Rational& s);
UEAElement scalar_element(const Rational& s);

// Accumulates terms in a hash map, then emits a sorted element.
class Accumulator {
public:
    void add(MonoId m, const Rational& c);
    void add(const UEAElement& x, const Rational& s);
    UEAElement take();
    bool empty() const { return map_.empty(); }

private:
    std::unordered_map<MonoId, Rational> map_;
};

// PBW arithmetic for the enveloping algebra of a graded setup's Lie algebra.
// The basis order of the setup (ascending δ) is the PBW order, so normal
// forms carry g_{>=1} factors rightmost.  Memo tables are guarded by one
// recursive mutex taken at every public entry point.
class UEARing {
public:
    explicit UEARing(const GradedSetup& s);
    UEARing(const UEARing&) = delete;
    UEARing& operator=(const UEARing&) = delete;

    int dim() const { return dim_; }
    const GradedSetup& setup() const { return setup_; }

    UEAElement gen(int i) const;
    UEAElement lie(const QVec& c) const;  // degree-1 element Σ c_i u_i
    UEAElement monomial(const std::vector<int>& factors, const Rational& c = 1) const;  // any order
    std::vector<int> factors(MonoId m) const;
    int kazhdan2_of(MonoId m) const;

    UEAElement mul(const UEAElement& a, const UEAElement& b) const;
    UEAElement left_mul(int g, const UEAElement& a) const;
    UEAElement commutator(const UEAElement& a, const UEAElement& b) const;

    // max over monomials of Σ (2 - δ2), or INT_MIN for zero
    int kazhdan_weight2(const UEAElement& a) const;
    MElement reduce_mod_J(const UEAElement& a) const;
    bool is_m_element(const UEAElement& a) const;
    Rational epsilon0(const UEAElement& a) const;

    std::string render(const UEAElement& a) const;
    std::string render_monomial(MonoId m) const;

    size_t monomial_count() const;
    void clear_product_memo() const;

private:
    using Word = std::u16string;

    MonoId intern(const Word& w) const;
    const Word& word(MonoId m) const { return words_[m]; }
    const UEAElement& lmul(int g, MonoId m) const;
    const UEAElement& pmul(MonoId a, MonoId b) const;
    void left_mul_into(int g, const UEAElement& a, const Rational& s, Accumulator& acc) const;

    GradedSetup setup_;
    int dim_;
    std::vector<int> delta2_;
    std::vector<Rational> fpair_;
    std::vector<std::string> labels_;

    mutable std::recursive_mutex mu_;
    mutable std::deque<Word> words_;
    mutable std::vector<int> weight2_;
    mutable std::unordered_map<Word, MonoId> ids_;
    mutable std::unordered_map<uint64_t, UEAElement> lmemo_;
    mutable std::unordered_map<uint64_t, UEAElement> pmemo_;
    mutable std::unordered_map<MonoId, std::pair<MonoId, Rational>> jmemo_;
};

}  // namespace wlax
