#include "riesz/multi_tensor.hpp"

#include "riesz/errors.hpp"

#include <string>

namespace riesz {

MultiTensor::MultiTensor(std::vector<std::size_t> domain_dims, std::size_t codomain_dim)
    : domain_dims_(std::move(domain_dims)), codomain_dim_(codomain_dim) {
    if (domain_dims_.empty() || domain_dims_.size() > kMaxArity) {
        throw DomainError("arity must be in 1.." + std::to_string(kMaxArity) + ", got " +
                          std::to_string(domain_dims_.size()));
    }
    for (auto d : domain_dims_) {
        if (d == 0 || d > kMaxDim) {
            throw DomainError("domain dimension must be in 1.." + std::to_string(kMaxDim));
        }
    }
    if (codomain_dim_ == 0 || codomain_dim_ > kMaxDim) {
        throw DomainError("codomain dimension must be in 1.." + std::to_string(kMaxDim));
    }
}

void MultiTensor::check_key(std::size_t out, const Index& idx) const {
    if (out >= codomain_dim_) {
        throw DimensionError("output coordinate out of range");
    }
    if (idx.size() != arity()) {
        throw DimensionError("index arity mismatch");
    }
    for (std::size_t s = 0; s < idx.size(); ++s) {
        if (idx[s] >= domain_dims_[s]) {
            throw DimensionError("index out of range in slot " + std::to_string(s + 1));
        }
    }
}

void MultiTensor::require_same_shape(const MultiTensor& o, const char* op) const {
    if (!same_shape(o)) {
        throw DimensionError(std::string(op) + ": tensor shape mismatch");
    }
}

Rational MultiTensor::at(std::size_t out, const Index& idx) const {
    check_key(out, idx);
    auto it = entries_.find(EntryKey{out, idx});
    return it == entries_.end() ? Rational() : it->second;
}

void MultiTensor::set(std::size_t out, const Index& idx, const Rational& value) {
    check_key(out, idx);
    if (value.is_zero()) {
        entries_.erase(EntryKey{out, idx});
    } else {
        entries_.insert_or_assign(EntryKey{out, idx}, value);
    }
}

void MultiTensor::add(std::size_t out, const Index& idx, const Rational& value) {
    if (value.is_zero()) {
        return;
    }
    check_key(out, idx);
    EntryKey key{out, idx};
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(std::move(key), value);
        return;
    }
    it->second += value;
    if (it->second.is_zero()) {
        entries_.erase(it);
    }
}

std::size_t MultiTensor::tuple_count() const {
    std::size_t n = 1;
    for (auto d : domain_dims_) {
        n *= d;
    }
    return n;
}

FinVector MultiTensor::apply(std::span<const FinVector> args) const {
    if (args.size() != arity()) {
        throw DimensionError("apply: expected " + std::to_string(arity()) + " arguments, got " +
                             std::to_string(args.size()));
    }
    for (std::size_t s = 0; s < args.size(); ++s) {
        if (args[s].dim() != domain_dims_[s]) {
            throw DimensionError("apply: argument " + std::to_string(s + 1) + " has wrong dimension");
        }
    }
    FinVector out(codomain_dim_);
    Rational term;
    for (const auto& [key, value] : entries_) {
        term = value;
        for (std::size_t s = 0; s < key.idx.size() && !term.is_zero(); ++s) {
            const Rational& c = args[s][key.idx[s]];
            if (c.is_zero()) {
                term = Rational();
            } else {
                term *= c;
            }
        }
        if (!term.is_zero()) {
            out[key.out] += term;
        }
    }
    return out;
}

std::vector<std::pair<Index, Rational>> MultiTensor::slice(std::size_t out) const {
    std::vector<std::pair<Index, Rational>> rows;
    auto it = entries_.lower_bound(EntryKey{out, Index{}});
    for (; it != entries_.end() && it->first.out == out; ++it) {
        rows.emplace_back(it->first.idx, it->second);
    }
    return rows;
}

MultiTensor MultiTensor::operator-() const {
    MultiTensor r = *this;
    for (auto& [key, value] : r.entries_) {
        value = -value;
    }
    return r;
}

MultiTensor& MultiTensor::operator+=(const MultiTensor& o) {
    require_same_shape(o, "add");
    for (const auto& [key, value] : o.entries_) {
        add(key.out, key.idx, value);
    }
    return *this;
}

MultiTensor& MultiTensor::operator-=(const MultiTensor& o) {
    require_same_shape(o, "sub");
    for (const auto& [key, value] : o.entries_) {
        add(key.out, key.idx, -value);
    }
    return *this;
}

MultiTensor& MultiTensor::operator*=(const Rational& c) {
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [key, value] : entries_) {
        value *= c;
    }
    return *this;
}

namespace {

template <typename F>
MultiTensor map_entries(const MultiTensor& a, F&& f) {
    MultiTensor r(a.domain_dims(), a.codomain_dim());
    for (const auto& [key, value] : a.entries()) {
        r.set(key.out, key.idx, f(value));
    }
    return r;
}

}  // namespace

MultiTensor modulus(const MultiTensor& a) {
    return map_entries(a, [](const Rational& v) { return v.abs(); });
}

MultiTensor positive_part(const MultiTensor& a) {
    return map_entries(a, [](const Rational& v) { return v.pos(); });
}

MultiTensor negative_part(const MultiTensor& a) {
    return map_entries(a, [](const Rational& v) { return v.neg(); });
}

bool is_positive(const MultiTensor& a) {
    for (const auto& [key, value] : a.entries()) {
        if (value.sign() < 0) {
            return false;
        }
    }
    return true;
}

bool operator_leq(const MultiTensor& a, const MultiTensor& b) {
    if (!a.same_shape(b)) {
        throw DimensionError("operator_leq: tensor shape mismatch");
    }
    return is_positive(b - a);
}

}  // namespace riesz
