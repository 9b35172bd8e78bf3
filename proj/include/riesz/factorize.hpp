#pragma once

#include "riesz/dp.hpp"
#include "riesz/errors.hpp"

#include <span>
#include <stdexcept>

namespace riesz {

/// |A|(x_1, ..., x_m) = scale · x_1[coords_1] ⋯ x_m[coords_m]. The whole
/// constant sits in the first factor; the other factors are plain coordinate
/// evaluations.
struct MultimorphismFactorization {
    bool zero_operator = false;
    Rational scale;
    Index coords;

    Rational evaluate(std::span<const FinVector> args) const;
    friend bool operator==(const MultimorphismFactorization&, const MultimorphismFactorization&) = default;
};

class NotDisjointnessPreserving : public DomainError {
public:
    explicit NotDisjointnessPreserving(DPVerdict verdict)
        : DomainError("operator is not disjointness preserving"), verdict_(std::move(verdict)) {}
    const DPVerdict& verdict() const { return verdict_; }

private:
    DPVerdict verdict_;
};

/// Factors the modulus of a scalar-valued DP form into coordinate evaluations.
/// Throws NotDisjointnessPreserving (with witness) for non-DP input and
/// DimensionError when the codomain is not R.
MultimorphismFactorization factorize_multimorphism(const MultiTensor& a);

}  // namespace riesz
