#include "riesz/seq/ev_const_seq.hpp"

#include "riesz/errors.hpp"

namespace riesz::seq {

EvConstSeq::EvConstSeq(std::map<std::size_t, Rational> exceptions, Rational tail)
    : exceptions_(std::move(exceptions)), tail_(std::move(tail)) {
    if (!exceptions_.empty() && exceptions_.begin()->first == 0) {
        throw DomainError("sequence indices are 1-based");
    }
    canonicalize();
}

void EvConstSeq::canonicalize() {
    std::erase_if(exceptions_, [&](const auto& kv) { return kv.second == tail_; });
}

EvConstSeq EvConstSeq::atom(std::size_t n, const Rational& c) { return EvConstSeq({{n, c}}, Rational()); }

EvConstSeq EvConstSeq::tail_from(std::size_t n, const Rational& c) {
    std::map<std::size_t, Rational> ex;
    for (std::size_t i = 1; i < n; ++i) {
        ex.emplace(i, Rational());
    }
    return EvConstSeq(std::move(ex), c);
}

Rational EvConstSeq::at(std::size_t n) const {
    if (n == 0) {
        throw DomainError("sequence indices are 1-based");
    }
    auto it = exceptions_.find(n);
    return it == exceptions_.end() ? tail_ : it->second;
}

EvConstSeq& EvConstSeq::operator+=(const EvConstSeq& o) {
    return *this = combine(*this, o, [](const Rational& a, const Rational& b) { return a + b; });
}

EvConstSeq& EvConstSeq::operator-=(const EvConstSeq& o) {
    return *this = combine(*this, o, [](const Rational& a, const Rational& b) { return a - b; });
}

EvConstSeq& EvConstSeq::operator*=(const Rational& c) {
    for (auto& [n, v] : exceptions_) {
        v *= c;
    }
    tail_ *= c;
    canonicalize();
    return *this;
}

std::ostream& operator<<(std::ostream& os, const EvConstSeq& s) {
    os << '{';
    bool first = true;
    for (const auto& [n, v] : s.exceptions_) {
        os << (first ? "" : ", ") << n << ": " << v;
        first = false;
    }
    return os << "; tail " << s.tail_ << '}';
}

EvConstSeq sup(const EvConstSeq& u, const EvConstSeq& v) {
    return EvConstSeq::combine(u, v, [](const Rational& a, const Rational& b) { return max(a, b); });
}

EvConstSeq inf(const EvConstSeq& u, const EvConstSeq& v) {
    return EvConstSeq::combine(u, v, [](const Rational& a, const Rational& b) { return min(a, b); });
}

EvConstSeq abs(const EvConstSeq& u) {
    return EvConstSeq::combine(u, u, [](const Rational& a, const Rational&) { return a.abs(); });
}

EvConstSeq pos(const EvConstSeq& u) {
    return EvConstSeq::combine(u, u, [](const Rational& a, const Rational&) { return a.pos(); });
}

EvConstSeq neg(const EvConstSeq& u) {
    return EvConstSeq::combine(u, u, [](const Rational& a, const Rational&) { return a.neg(); });
}

EvConstSeq pointwise_product(const EvConstSeq& u, const EvConstSeq& v) {
    return EvConstSeq::combine(u, v, [](const Rational& a, const Rational& b) { return a * b; });
}

bool is_disjoint(const EvConstSeq& u, const EvConstSeq& v) {
    return inf(abs(u), abs(v)).is_zero();
}

Rational pair(const EvConstSeq& u, const EvConstSeq& f) {
    if (!f.has_finite_support()) {
        throw DomainError("pair: functional has a nonzero tail and is not summable");
    }
    Rational s;
    for (const auto& [n, fn] : f.exceptions()) {
        s += u.at(n) * fn;
    }
    return s;
}

}  // namespace riesz::seq
