#pragma once

#include "riesz/dp.hpp"
#include "riesz/intermediate_form.hpp"

#include <optional>
#include <span>
#include <vector>

namespace riesz {

/// One recorded step of the contraction chain: the form for output coordinate
/// `out` after `step` contractions (step 0 is the permuted form (e_k*∘A)_ρ).
struct TraceEntry {
    std::size_t out;
    std::size_t step;
    IntermediateForm form;
};

struct ArensResult {
    Permutation rho;
    /// AR_m^ρ(A) on E_1~~ × ... × E_m~~ → F~~, expressed in the J-bases.
    MultiTensor tensor;
    /// Present when requested: the chain evaluated at the all-ones biduals,
    /// (m+1) forms per output coordinate.
    std::optional<std::vector<TraceEntry>> trace;
};

/// AR_m^ρ(A)(x''_1, ..., x''_m)(y'): build (y'∘A)_ρ and contract with
/// x''_{ρ(1)} first, ..., x''_{ρ(m)} last.
Rational arens_functional(const MultiTensor& a, const Permutation& rho, std::span<const BidualVector> args,
                          const DualVector& y, std::vector<IntermediateForm>* chain = nullptr);

/// AR_m^ρ(A)(x''_1, ..., x''_m) ∈ F~~, one chain per dual atom e_k*.
BidualVector arens_evaluate(const MultiTensor& a, const Permutation& rho, std::span<const BidualVector> args);

/// Assembles the extension tensor by running the chain on atom biduals.
ArensResult arens_extension(const MultiTensor& a, const Permutation& rho, bool with_trace = false);

/// All of S_m, in lexicographic order. `threads` > 1 fans permutations out
/// across worker threads; the order of the result does not depend on it.
std::vector<ArensResult> arens_extensions_all(const MultiTensor& a, bool with_trace = false,
                                              unsigned threads = 1);

struct DPPreservationReport {
    DPVerdict input;
    std::vector<std::pair<Permutation, DPVerdict>> per_rho;
    bool all_dp() const;
};

/// Runs is_dp on every AR_m^ρ(A). When the input is not DP the report carries
/// its witness and no per-ρ verdicts.
DPPreservationReport check_dp_preservation(const MultiTensor& a, unsigned threads = 1);

/// For a DP A and a DP functional y' checks, for every ρ and every tuple:
///   |AR(x̄'')|(|y'|) = |AR(|x''_1|, ..., |x''_m|)(y')| = |AR(x̄'')(y')|
/// and that y'∘AR(A) is DP. Throws DomainError if y' or A is not DP.
bool pairing_identities(const MultiTensor& a, const DualVector& y,
                        std::span<const std::vector<BidualVector>> tuples);

/// (|AR(.., w, ..)| ∧ |AR(.., z, ..)|)(|y*|) == 0 for every ρ, with `w`, `z`
/// in `slot` and the other slots from `others` (others[slot] ignored).
/// Throws DomainError unless w ⊥ z.
bool span_disjointness(const MultiTensor& a, std::size_t slot, const BidualVector& w, const BidualVector& z,
                       std::span<const BidualVector> others, const DualVector& y_star);

}  // namespace riesz
