#include "riesz/rational.hpp"

#include "riesz/errors.hpp"

#include <cctype>

namespace riesz {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return std::string(s);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den)) {
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    }
    mpz_class n(strip_plus(num), 10);
    mpz_class d(strip_plus(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_str();
}

Rational pow(const Rational& base, unsigned long exponent) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

}  // namespace riesz
