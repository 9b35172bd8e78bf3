#pragma once

#include "riesz/fin_vector.hpp"

namespace riesz {

/// Order-dual element x' ∈ E~ of a coordinatewise space, identified with R^n
/// through the dual basis e_1*, ..., e_n*.
struct DualVector {
    FinVector coords;

    Rational operator()(const FinVector& x) const { return dot(coords, x); }
    std::size_t dim() const { return coords.dim(); }
    friend bool operator==(const DualVector&, const DualVector&) = default;
};

/// Order-bidual element x'' ∈ E~~, identified with R^n through the basis
/// J(e_1), ..., J(e_n).
struct BidualVector {
    FinVector coords;

    Rational operator()(const DualVector& f) const { return dot(coords, f.coords); }
    std::size_t dim() const { return coords.dim(); }
    friend bool operator==(const BidualVector&, const BidualVector&) = default;
};

inline DualVector abs(const DualVector& f) { return {abs(f.coords)}; }
inline BidualVector abs(const BidualVector& x) { return {abs(x.coords)}; }
inline BidualVector inf(const BidualVector& x, const BidualVector& y) { return {inf(x.coords, y.coords)}; }
inline bool is_disjoint(const BidualVector& x, const BidualVector& y) { return is_disjoint(x.coords, y.coords); }

/// Dual functional e_k*.
inline DualVector dual_atom(std::size_t dim, std::size_t k) { return {FinVector::atom(dim, k)}; }

/// J_E(x)(x') = x'(x). In finite dimension J is onto.
inline BidualVector canonical_embed(const FinVector& x) { return {x}; }

/// A functional on R^n preserves disjointness iff it has at most one nonzero coordinate.
inline bool is_dp_functional(const DualVector& f) { return f.coords.support_size() <= 1; }

}  // namespace riesz
