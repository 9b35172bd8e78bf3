#pragma once

#include "riesz/lin_op.hpp"
#include "riesz/multi_tensor.hpp"

#include <optional>
#include <vector>

namespace riesz {

/// A disjoint pair (x, y) fed into `slot` with the remaining slots fixed to
/// `args`, whose images are not disjoint (they share output coordinate `out`).
struct DPWitness {
    std::size_t slot = 0;
    std::size_t out = 0;
    FinVector x;
    FinVector y;
    /// Full argument list; args[slot] is ignored when replaying.
    std::vector<FinVector> args;
    FinVector image_x;
    FinVector image_y;

    friend bool operator==(const DPWitness&, const DPWitness&) = default;
};

struct DPVerdict {
    bool is_dp = true;
    /// When DP: for each output coordinate, the unique tuple carrying a nonzero
    /// entry, or nullopt when that coordinate slice is empty.
    std::vector<std::optional<Index>> certificate;
    std::optional<DPWitness> witness;
};

/// Decides disjointness preservation of A (separately in each slot) by the
/// tensor-support criterion: every output-coordinate slice carries at most one
/// nonzero tuple. A negative verdict carries a witness that has already been
/// re-verified by evaluation.
DPVerdict is_dp(const MultiTensor& a);
DPVerdict is_dp(const LinOp& t);

/// Re-evaluates a witness: x ⊥ y and A(.., x, ..) not ⊥ A(.., y, ..). Also
/// checks the recorded images match.
bool verify_witness(const MultiTensor& a, const DPWitness& w);

/// Positive and disjointness preserving; equivalently |A(x̄)| = A(|x_1|, ..., |x_m|).
bool is_riesz_multimorphism(const MultiTensor& a);

}  // namespace riesz
