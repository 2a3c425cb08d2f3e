#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <gmpxx.h>

namespace wlax {

// Exact rational number.  Values whose numerator and denominator fit in
// int64 are kept inline; anything larger spills to a GMP rational.
class Rational {
public:
    Rational() = default;
    Rational(long long n);  // NOLINT: implicit from integers is intended
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o);
    Rational(Rational&& o) noexcept = default;
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&& o) noexcept = default;

    static Rational parse(const std::string& s);  // "p", "p/q", "-p/q"

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;
    mpq_class to_mpq() const;
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

private:
    void set_i128(__int128 n, __int128 d);
    void set_big(mpq_class q);

    int64_t num_ = 0;
    int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace wlax
