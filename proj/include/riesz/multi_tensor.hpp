#pragma once

#include "riesz/fin_vector.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace riesz {

/// Multi-index into the domain slots, 0-based.
using Index = std::vector<std::size_t>;

struct EntryKey {
    std::size_t out;
    Index idx;
    friend auto operator<=>(const EntryKey&, const EntryKey&) = default;
    friend bool operator==(const EntryKey&, const EntryKey&) = default;
};

/// Regular m-linear operator R^{d_1} x ... x R^{d_m} -> R^n stored as a sparse
/// tensor: A(e_{i_1}, ..., e_{i_m}) has k-th coordinate entries[(k, i)].
/// Zero entries are never stored.
class MultiTensor {
public:
    static constexpr std::size_t kMaxArity = 4;
    static constexpr std::size_t kMaxDim = 16;

    MultiTensor(std::vector<std::size_t> domain_dims, std::size_t codomain_dim);

    std::size_t arity() const { return domain_dims_.size(); }
    const std::vector<std::size_t>& domain_dims() const { return domain_dims_; }
    std::size_t codomain_dim() const { return codomain_dim_; }
    const std::map<EntryKey, Rational>& entries() const { return entries_; }
    std::size_t nonzeros() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }
    bool same_shape(const MultiTensor& o) const {
        return domain_dims_ == o.domain_dims_ && codomain_dim_ == o.codomain_dim_;
    }

    Rational at(std::size_t out, const Index& idx) const;
    void set(std::size_t out, const Index& idx, const Rational& value);
    void add(std::size_t out, const Index& idx, const Rational& value);

    /// Number of atom tuples, ∏ d_i.
    std::size_t tuple_count() const;

    /// Multilinear evaluation by sparse contraction.
    FinVector apply(std::span<const FinVector> args) const;

    /// Entries of one output coordinate, in index order.
    std::vector<std::pair<Index, Rational>> slice(std::size_t out) const;

    MultiTensor operator-() const;
    MultiTensor& operator+=(const MultiTensor& o);
    MultiTensor& operator-=(const MultiTensor& o);
    MultiTensor& operator*=(const Rational& c);
    friend MultiTensor operator+(MultiTensor a, const MultiTensor& b) { return a += b; }
    friend MultiTensor operator-(MultiTensor a, const MultiTensor& b) { return a -= b; }
    friend MultiTensor operator*(MultiTensor a, const Rational& c) { return a *= c; }

    friend bool operator==(const MultiTensor&, const MultiTensor&) = default;

private:
    void check_key(std::size_t out, const Index& idx) const;
    void require_same_shape(const MultiTensor& o, const char* op) const;

    std::vector<std::size_t> domain_dims_;
    std::size_t codomain_dim_;
    std::map<EntryKey, Rational> entries_;
};

/// Visits every index tuple of the given dims in lexicographic order.
template <typename F>
void for_each_index(std::span<const std::size_t> dims, F&& f) {
    for (auto d : dims) {
        if (d == 0) {
            return;
        }
    }
    Index idx(dims.size(), 0);
    bool more = true;
    while (more) {
        f(static_cast<const Index&>(idx));
        more = false;
        for (std::size_t s = dims.size(); s > 0 && !more; --s) {
            if (++idx[s - 1] < dims[s - 1]) {
                more = true;
            } else {
                idx[s - 1] = 0;
            }
        }
    }
}

/// Entrywise |·|, (·)⁺, (·)⁻. For a disjointness preserving A these are the
/// lattice modulus and parts in the operator order; in finite dimension they
/// are the lattice operations for every A since atoms generate the cone.
MultiTensor modulus(const MultiTensor& a);
MultiTensor positive_part(const MultiTensor& a);
MultiTensor negative_part(const MultiTensor& a);

/// A ≥ 0: every entry non-negative.
bool is_positive(const MultiTensor& a);

/// A ≤ B in the operator order (decided entrywise).
bool operator_leq(const MultiTensor& a, const MultiTensor& b);

}  // namespace riesz
