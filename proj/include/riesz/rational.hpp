#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace riesz {

/// Exact rational scalar. Always held in lowest terms with a positive
/// denominator; arithmetic never rounds.
class Rational {
public:
    Rational() = default;
    template <std::integral I>
    Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

    /// Parses "p", "p/q" or "-p/q" (any denominator sign is normalized).
    static Rational parse(std::string_view text);

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const { return Rational(riesz_abs_tag{}, ::abs(value_)); }
    Rational pos() const { return sign() > 0 ? *this : Rational(); }
    Rational neg() const { return sign() < 0 ? -*this : Rational(); }

    Rational operator-() const { return Rational(riesz_abs_tag{}, -value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct riesz_abs_tag {};
    Rational(riesz_abs_tag, mpq_class q) : value_(std::move(q)) {}

    mpq_class value_;
};

inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

/// Integer power with a non-negative exponent.
Rational pow(const Rational& base, unsigned long exponent);

}  // namespace riesz
