#pragma once

#include "riesz/multi_tensor.hpp"
#include "riesz/permutation.hpp"
#include "riesz/random.hpp"
#include "riesz/seq/ev_const_seq.hpp"

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace riesz::seq {

using SeqPair = std::pair<EvConstSeq, EvConstSeq>;

/// A_w(x, y) = (w_n x_n y_n)_n on c0 × c0. A 2-morphism for w ≥ 0 and
/// disjointness preserving for every w.
struct DiagBilinear {
    EvConstSeq weight = EvConstSeq::constant(1);
    friend bool operator==(const DiagBilinear&, const DiagBilinear&) = default;
};

/// (Tx)_k = w_k x_{σ(k)} with σ(k) = table[k] when listed, k + shift otherwise.
struct WeightedCompOp {
    EvConstSeq weight = EvConstSeq::constant(1);
    std::map<std::size_t, std::size_t> table;
    std::size_t shift = 0;

    /// Validates 1-based table entries.
    void validate() const;
    std::size_t sigma(std::size_t k) const;
    /// Every k with σ(k) = n.
    std::vector<std::size_t> preimage(std::size_t n) const;
    friend bool operator==(const WeightedCompOp&, const WeightedCompOp&) = default;
};

EvConstSeq diag_apply(const DiagBilinear& a, const EvConstSeq& x, const EvConstSeq& y);

/// AR_2^ρ(A_w)(u, v)(f) by the contraction pipeline, for u, v in the l∞ role
/// and f in the l1 role. (f∘A_w) only sees coordinates in supp f, so the
/// chain runs on the truncation to 1..max(supp f).
Rational diag_arens_functional(const DiagBilinear& a, const EvConstSeq& u, const EvConstSeq& v,
                               const Permutation& rho, const EvConstSeq& f);

/// AR_2^ρ(A_w)(u, v) identified as an eventually constant sequence: evaluates
/// the pipeline at e_n* up to one index past every exception of w, u and v;
/// the last value is the tail.
EvConstSeq diag_arens(const DiagBilinear& a, const EvConstSeq& u, const EvConstSeq& v, const Permutation& rho);

/// The restriction of A_w to R^n × R^n → R^n (n ≤ MultiTensor::kMaxDim).
MultiTensor truncate(const DiagBilinear& a, std::size_t n);

/// T x for x in the c0 role (computed through preimages of supp x).
EvConstSeq comp_apply(const WeightedCompOp& t, const EvConstSeq& x);
/// T' f for f in the l1 role: (T'f)_j = Σ_{σ(k)=j} w_k f_k.
EvConstSeq comp_adjoint(const WeightedCompOp& t, const EvConstSeq& f);
/// T'' u for u in the l∞ role: (T''u)_k = w_k u_{σ(k)}.
EvConstSeq comp_biadjoint(const WeightedCompOp& t, const EvConstSeq& u);

/// First disjoint pair whose images fail to be disjoint.
struct SeqFailure {
    EvConstSeq u;
    EvConstSeq v;
    EvConstSeq image_u;
    EvConstSeq image_v;
};

/// T'' maps every sampled disjoint pair to a disjoint pair.
std::optional<SeqFailure> biadjoint_dp_check(const WeightedCompOp& t, std::span<const SeqPair> pairs);

/// Each e_n*, n ≤ n_max, is DP on the samples: min(|u_n|, |v_n|) = 0. Returns
/// the first failing n, if any.
std::optional<std::size_t> dual_basis_dp(std::size_t n_max, std::span<const SeqPair> pairs);

/// Exhibits A(e_n, e_n) = w_n e_n, n = 1..N, as N pairwise disjoint nonzero
/// elements of the range: lattice rank ≥ N. Throws DomainError when some
/// w_n = 0 (n ≤ N).
std::size_t rank_lower_bound(const DiagBilinear& a, std::size_t n);

/// AR_2^θ(A)(u_fixed, ·) and AR_2^id(A)(·, u_fixed) preserve disjointness on
/// the sampled pairs.
std::optional<SeqFailure> slotwise_dp_check(const DiagBilinear& a, const EvConstSeq& u_fixed,
                                            std::span<const SeqPair> pairs);

/// Seeded generators for the property suites.
EvConstSeq random_sequence(Sampler& rng, std::size_t max_index = 12, bool finite_support = false);
/// Structured disjoint pairs: tail-split (finite block vs co-finite tail),
/// random disjoint finite supports, and zero edge cases.
std::vector<SeqPair> sample_disjoint_pairs(Sampler& rng, std::size_t count);
WeightedCompOp random_comp_op(Sampler& rng);

}  // namespace riesz::seq
