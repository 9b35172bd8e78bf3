#include "riesz/intermediate_form.hpp"

#include "riesz/errors.hpp"

namespace riesz {

IntermediateForm::IntermediateForm(std::vector<FormSlot> slots) : slots_(std::move(slots)) {}

IntermediateForm IntermediateForm::compose(const DualVector& y, const MultiTensor& a) {
    if (y.dim() != a.codomain_dim()) {
        throw DimensionError("compose: functional dimension does not match codomain");
    }
    std::vector<FormSlot> slots;
    for (std::size_t s = 0; s < a.arity(); ++s) {
        slots.push_back({s, a.domain_dims()[s]});
    }
    IntermediateForm f(std::move(slots));
    for (const auto& [key, v] : a.entries()) {
        const Rational& c = y.coords[key.out];
        if (!c.is_zero()) {
            f.add(key.idx, c * v);
        }
    }
    return f;
}

void IntermediateForm::add(const Index& idx, const Rational& v) {
    if (v.is_zero()) {
        return;
    }
    auto [it, inserted] = values_.try_emplace(idx, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) {
            values_.erase(it);
        }
    }
}

Rational IntermediateForm::at(const Index& idx) const {
    auto it = values_.find(idx);
    return it == values_.end() ? Rational() : it->second;
}

Rational IntermediateForm::value() const {
    if (!slots_.empty()) {
        throw DimensionError("form still has " + std::to_string(slots_.size()) + " open slots");
    }
    return at(Index{});
}

Rational IntermediateForm::evaluate(std::span<const FinVector> args) const {
    if (args.size() != slots_.size()) {
        throw DimensionError("form evaluation: arity mismatch");
    }
    for (std::size_t s = 0; s < args.size(); ++s) {
        if (args[s].dim() != slots_[s].dim) {
            throw DimensionError("form evaluation: dimension mismatch");
        }
    }
    Rational total;
    for (const auto& [idx, v] : values_) {
        Rational term = v;
        for (std::size_t s = 0; s < idx.size() && !term.is_zero(); ++s) {
            term *= args[s][idx[s]];
        }
        total += term;
    }
    return total;
}

DualVector FlippedForm::evaluate(std::span<const FinVector> rest_args) const {
    if (rest_args.size() != rest.size()) {
        throw DimensionError("flipped form evaluation: arity mismatch");
    }
    DualVector out{FinVector(first.dim)};
    for (const auto& [idx, dual] : values) {
        Rational weight = 1;
        for (std::size_t s = 0; s < idx.size() && !weight.is_zero(); ++s) {
            weight *= rest_args[s][idx[s]];
        }
        if (!weight.is_zero()) {
            out.coords += dual.coords * weight;
        }
    }
    return out;
}

IntermediateForm permute_form(const IntermediateForm& c, const Permutation& rho) {
    const std::size_t m = c.arity();
    if (rho.size() != m) {
        throw DimensionError("permute_form: permutation of " + std::to_string(rho.size()) +
                             " elements applied to a form of arity " + std::to_string(m));
    }
    std::vector<FormSlot> slots(m);
    for (std::size_t i = 0; i < m; ++i) {
        slots[i] = c.slots()[rho(i)];
    }
    IntermediateForm out(std::move(slots));
    Index permuted(m);
    for (const auto& [idx, v] : c.values()) {
        for (std::size_t i = 0; i < m; ++i) {
            permuted[i] = idx[rho(i)];
        }
        out.add(permuted, v);
    }
    return out;
}

FlippedForm flip(const IntermediateForm& b) {
    if (b.arity() == 0) {
        throw DimensionError("flip: form has no remaining slot");
    }
    FlippedForm f{b.slots().front(), std::vector<FormSlot>(b.slots().begin() + 1, b.slots().end()), {}};
    for (const auto& [idx, v] : b.values()) {
        Index rest(idx.begin() + 1, idx.end());
        auto it = f.values.find(rest);
        if (it == f.values.end()) {
            it = f.values.emplace(std::move(rest), DualVector{FinVector(f.first.dim)}).first;
        }
        it->second.coords[idx.front()] += v;
    }
    return f;
}

IntermediateForm contract(const BidualVector& x, const IntermediateForm& b) {
    if (b.arity() == 0) {
        throw DimensionError("contract: form has no remaining slot");
    }
    if (x.dim() != b.slots().front().dim) {
        throw DimensionError("contract: bidual dimension " + std::to_string(x.dim()) +
                             " does not match slot dimension " + std::to_string(b.slots().front().dim));
    }
    const FlippedForm flipped = flip(b);
    IntermediateForm out(flipped.rest);
    for (const auto& [rest, dual] : flipped.values) {
        out.add(rest, x(dual));
    }
    return out;
}

}  // namespace riesz
