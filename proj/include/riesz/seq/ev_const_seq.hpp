#pragma once

#include "riesz/rational.hpp"

#include <cstddef>
#include <map>
#include <ostream>

namespace riesz::seq {

/// Rational sequence (x_1, x_2, ...) equal to `tail` outside a finite set of
/// exceptional indices (1-based). Canonical: no exception equals the tail.
///
/// Tail 0 models c0; tail 0 read through its finite support models l1 = c0*;
/// an arbitrary tail models the eventually constant part of l∞ = c0**.
class EvConstSeq {
public:
    EvConstSeq() = default;
    EvConstSeq(std::map<std::size_t, Rational> exceptions, Rational tail);

    static EvConstSeq zero() { return {}; }
    static EvConstSeq constant(const Rational& c) { return EvConstSeq({}, c); }
    /// c·e_n.
    static EvConstSeq atom(std::size_t n, const Rational& c = 1);
    /// 0 on 1..n-1, c from n on.
    static EvConstSeq tail_from(std::size_t n, const Rational& c = 1);

    Rational at(std::size_t n) const;
    const std::map<std::size_t, Rational>& exceptions() const { return exceptions_; }
    const Rational& tail() const { return tail_; }
    /// Largest exceptional index, 0 when there is none.
    std::size_t horizon() const { return exceptions_.empty() ? 0 : exceptions_.rbegin()->first; }

    bool is_zero() const { return exceptions_.empty() && tail_.is_zero(); }
    /// Tail 0: admissible in the c0 and l1 roles.
    bool has_finite_support() const { return tail_.is_zero(); }

    EvConstSeq& operator+=(const EvConstSeq& o);
    EvConstSeq& operator-=(const EvConstSeq& o);
    EvConstSeq& operator*=(const Rational& c);
    friend EvConstSeq operator+(EvConstSeq a, const EvConstSeq& b) { return a += b; }
    friend EvConstSeq operator-(EvConstSeq a, const EvConstSeq& b) { return a -= b; }
    friend EvConstSeq operator*(EvConstSeq a, const Rational& c) { return a *= c; }

    friend bool operator==(const EvConstSeq&, const EvConstSeq&) = default;
    friend std::ostream& operator<<(std::ostream& os, const EvConstSeq& s);

    /// Builds (f(u_n, v_n))_n from the exception union and the tails.
    template <typename F>
    static EvConstSeq combine(const EvConstSeq& u, const EvConstSeq& v, F&& f) {
        std::map<std::size_t, Rational> ex;
        for (const auto& [n, _] : u.exceptions_) {
            ex.emplace(n, f(u.at(n), v.at(n)));
        }
        for (const auto& [n, _] : v.exceptions_) {
            ex.emplace(n, f(u.at(n), v.at(n)));
        }
        return EvConstSeq(std::move(ex), f(u.tail_, v.tail_));
    }

private:
    void canonicalize();

    std::map<std::size_t, Rational> exceptions_;
    Rational tail_;
};

EvConstSeq sup(const EvConstSeq& u, const EvConstSeq& v);
EvConstSeq inf(const EvConstSeq& u, const EvConstSeq& v);
EvConstSeq abs(const EvConstSeq& u);
EvConstSeq pos(const EvConstSeq& u);
EvConstSeq neg(const EvConstSeq& u);
EvConstSeq pointwise_product(const EvConstSeq& u, const EvConstSeq& v);

/// min(|u_n|, |v_n|) = 0 for every n; needs a zero tail on at least one side.
bool is_disjoint(const EvConstSeq& u, const EvConstSeq& v);

/// <u, f> = Σ u_n f_n with u in the l∞ role and f in the l1 role.
/// Throws DomainError when f has a nonzero tail.
Rational pair(const EvConstSeq& u, const EvConstSeq& f);

}  // namespace riesz::seq
