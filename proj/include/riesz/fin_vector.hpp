#pragma once

#include "riesz/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace riesz {

/// Element of R^n with the coordinatewise order. Also serves as its own
/// order dual and bidual (see duality.hpp for the role-tagged wrappers).
class FinVector {
public:
    FinVector() = default;
    explicit FinVector(std::size_t dim) : coords_(dim) {}
    explicit FinVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    FinVector(std::initializer_list<Rational> coords) : coords_(coords) {}

    /// The atom e_i (0-based i).
    static FinVector atom(std::size_t dim, std::size_t i);
    static FinVector constant(std::size_t dim, const Rational& c);

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Rational> coords() const { return coords_; }

    bool is_zero() const;
    bool is_positive() const;
    std::size_t support_size() const;

    FinVector& operator+=(const FinVector& o);
    FinVector& operator-=(const FinVector& o);
    FinVector& operator*=(const Rational& c);

    friend FinVector operator+(FinVector a, const FinVector& b) { return a += b; }
    friend FinVector operator-(FinVector a, const FinVector& b) { return a -= b; }
    friend FinVector operator*(FinVector a, const Rational& c) { return a *= c; }
    friend FinVector operator*(const Rational& c, FinVector a) { return a *= c; }
    FinVector operator-() const;

    friend bool operator==(const FinVector&, const FinVector&) = default;
    friend std::ostream& operator<<(std::ostream& os, const FinVector& v);

private:
    std::vector<Rational> coords_;
};

FinVector sup(const FinVector& x, const FinVector& y);
FinVector inf(const FinVector& x, const FinVector& y);
FinVector abs(const FinVector& x);
FinVector pos(const FinVector& x);
FinVector neg(const FinVector& x);

/// |x| ∧ |y| = 0, i.e. the coordinate supports do not meet.
bool is_disjoint(const FinVector& x, const FinVector& y);

/// x ≤ y coordinatewise.
bool leq(const FinVector& x, const FinVector& y);

/// Σ x_i y_i.
Rational dot(const FinVector& x, const FinVector& y);

}  // namespace riesz
