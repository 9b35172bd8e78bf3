#pragma once

#include "riesz/multi_tensor.hpp"

#include <functional>
#include <span>

namespace riesz {

/// A map defined on tuples of positive vectors, additive in each slot.
using PositiveConeMap = std::function<FinVector(std::span<const FinVector>)>;

/// The multilinear extension of a positive-cone-additive map:
/// B̃(x̄) = Σ_{s ∈ {+,-}^m} (-1)^{#minus(s)} B(x_1^{s_1}, ..., x_m^{s_m}).
class PositiveConeExtension {
public:
    PositiveConeExtension(std::vector<std::size_t> domain_dims, std::size_t codomain_dim, PositiveConeMap b);

    FinVector operator()(std::span<const FinVector> args) const;

    /// The extension as a tensor, read off on atom tuples.
    MultiTensor tensor() const;

private:
    std::vector<std::size_t> domain_dims_;
    std::size_t codomain_dim_;
    PositiveConeMap b_;
};

MultiTensor extend_from_positive_cone(std::vector<std::size_t> domain_dims, std::size_t codomain_dim,
                                      PositiveConeMap b);

}  // namespace riesz
