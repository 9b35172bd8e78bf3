#pragma once

#include "riesz/duality.hpp"
#include "riesz/multi_tensor.hpp"
#include "riesz/permutation.hpp"

#include <map>
#include <span>
#include <vector>

namespace riesz {

/// A domain slot of an intermediate form: which original variable it carries
/// (0-based) and the dimension of that space.
struct FormSlot {
    std::size_t label;
    std::size_t dim;
    friend bool operator==(const FormSlot&, const FormSlot&) = default;
};

/// Scalar-valued regular multilinear form on the listed slots, stored sparsely
/// on atom tuples. With no slots left it is a single scalar.
class IntermediateForm {
public:
    IntermediateForm() = default;
    explicit IntermediateForm(std::vector<FormSlot> slots);

    /// y' ∘ A as a form on the slots 1..m of A, in original order.
    static IntermediateForm compose(const DualVector& y, const MultiTensor& a);

    const std::vector<FormSlot>& slots() const { return slots_; }
    const std::map<Index, Rational>& values() const { return values_; }
    std::size_t arity() const { return slots_.size(); }
    bool is_zero() const { return values_.empty(); }

    void add(const Index& idx, const Rational& v);
    Rational at(const Index& idx) const;

    /// Remaining scalar; requires arity() == 0.
    Rational value() const;

    /// Multilinear evaluation; args follow slots() order.
    Rational evaluate(std::span<const FinVector> args) const;

    friend bool operator==(const IntermediateForm&, const IntermediateForm&) = default;

private:
    std::vector<FormSlot> slots_;
    std::map<Index, Rational> values_;
};

/// B^1: the tail tuple (x_2, ..., x_k) ↦ the dual vector j ↦ B(e_j, x_2, ..., x_k).
/// Stored on atom tail tuples.
struct FlippedForm {
    FormSlot first;
    std::vector<FormSlot> rest;
    std::map<Index, DualVector> values;

    DualVector evaluate(std::span<const FinVector> rest_args) const;
};

/// C_ρ(x_1, ..., x_m) = C(x_{ρ⁻¹(1)}, ..., x_{ρ⁻¹(m)}): slot i of the result is
/// slot ρ(i) of C.
IntermediateForm permute_form(const IntermediateForm& c, const Permutation& rho);

/// Reads the first remaining slot as the dual variable.
FlippedForm flip(const IntermediateForm& b);

/// x''∘B^1. Removes the first remaining slot.
IntermediateForm contract(const BidualVector& x, const IntermediateForm& b);

}  // namespace riesz
