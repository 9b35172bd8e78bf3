#include "riesz/seq/operators.hpp"

#include "riesz/duality.hpp"
#include "riesz/errors.hpp"
#include "riesz/intermediate_form.hpp"

#include <algorithm>

namespace riesz::seq {

namespace {

BidualVector truncate_bidual(const EvConstSeq& u, std::size_t n) {
    FinVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = u.at(i + 1);
    }
    return {std::move(v)};
}

}  // namespace

void WeightedCompOp::validate() const {
    for (const auto& [k, target] : table) {
        if (k == 0 || target == 0) {
            throw DomainError("index map entries are 1-based");
        }
    }
}

std::size_t WeightedCompOp::sigma(std::size_t k) const {
    auto it = table.find(k);
    return it == table.end() ? k + shift : it->second;
}

std::vector<std::size_t> WeightedCompOp::preimage(std::size_t n) const {
    std::vector<std::size_t> ks;
    for (const auto& [k, target] : table) {
        if (target == n) {
            ks.push_back(k);
        }
    }
    if (n > shift) {
        const std::size_t k = n - shift;
        if (table.find(k) == table.end()) {
            ks.push_back(k);
        }
    }
    std::sort(ks.begin(), ks.end());
    return ks;
}

EvConstSeq diag_apply(const DiagBilinear& a, const EvConstSeq& x, const EvConstSeq& y) {
    return pointwise_product(a.weight, pointwise_product(x, y));
}

Rational diag_arens_functional(const DiagBilinear& a, const EvConstSeq& u, const EvConstSeq& v,
                               const Permutation& rho, const EvConstSeq& f) {
    if (rho.size() != 2) {
        throw DimensionError("diag_arens: permutation must act on two slots");
    }
    if (!f.has_finite_support()) {
        throw DomainError("diag_arens: functional must be finitely supported");
    }
    const std::size_t n = f.horizon();
    if (n == 0) {
        return Rational();
    }
    IntermediateForm form({{0, n}, {1, n}});
    for (const auto& [i, fi] : f.exceptions()) {
        form.add({i - 1, i - 1}, fi * a.weight.at(i));
    }
    const BidualVector args[2] = {truncate_bidual(u, n), truncate_bidual(v, n)};
    IntermediateForm chain = permute_form(form, rho);
    for (std::size_t i = 0; i < 2; ++i) {
        chain = contract(args[rho(i)], chain);
    }
    return chain.value();
}

EvConstSeq diag_arens(const DiagBilinear& a, const EvConstSeq& u, const EvConstSeq& v, const Permutation& rho) {
    const std::size_t last = 1 + std::max({a.weight.horizon(), u.horizon(), v.horizon()});
    std::map<std::size_t, Rational> ex;
    Rational tail;
    for (std::size_t n = 1; n <= last; ++n) {
        Rational value = diag_arens_functional(a, u, v, rho, EvConstSeq::atom(n));
        if (n == last) {
            tail = std::move(value);
        } else {
            ex.emplace(n, std::move(value));
        }
    }
    return EvConstSeq(std::move(ex), std::move(tail));
}

MultiTensor truncate(const DiagBilinear& a, std::size_t n) {
    MultiTensor t({n, n}, n);
    for (std::size_t i = 0; i < n; ++i) {
        t.set(i, {i, i}, a.weight.at(i + 1));
    }
    return t;
}

EvConstSeq comp_apply(const WeightedCompOp& t, const EvConstSeq& x) {
    if (!x.has_finite_support()) {
        throw DomainError("comp_apply: argument must be in the c0 role (tail 0)");
    }
    std::map<std::size_t, Rational> out;
    for (const auto& [n, xn] : x.exceptions()) {
        for (std::size_t k : t.preimage(n)) {
            out[k] += t.weight.at(k) * xn;
        }
    }
    return EvConstSeq(std::move(out), Rational());
}

EvConstSeq comp_adjoint(const WeightedCompOp& t, const EvConstSeq& f) {
    if (!f.has_finite_support()) {
        throw DomainError("comp_adjoint: argument must be in the l1 role (tail 0)");
    }
    std::map<std::size_t, Rational> out;
    for (const auto& [k, fk] : f.exceptions()) {
        out[t.sigma(k)] += t.weight.at(k) * fk;
    }
    return EvConstSeq(std::move(out), Rational());
}

EvConstSeq comp_biadjoint(const WeightedCompOp& t, const EvConstSeq& u) {
    // Beyond `last`, w_k is its tail, σ(k) = k + shift, and u_{σ(k)} is u's tail.
    std::size_t last = std::max(t.weight.horizon(), u.horizon());
    if (!t.table.empty()) {
        last = std::max(last, t.table.rbegin()->first);
    }
    std::map<std::size_t, Rational> ex;
    for (std::size_t k = 1; k <= last; ++k) {
        ex.emplace(k, t.weight.at(k) * u.at(t.sigma(k)));
    }
    return EvConstSeq(std::move(ex), t.weight.tail() * u.tail());
}

std::optional<SeqFailure> biadjoint_dp_check(const WeightedCompOp& t, std::span<const SeqPair> pairs) {
    for (const auto& [u, v] : pairs) {
        if (!is_disjoint(u, v)) {
            throw DomainError("biadjoint_dp_check: sample pair is not disjoint");
        }
        EvConstSeq tu = comp_biadjoint(t, u);
        EvConstSeq tv = comp_biadjoint(t, v);
        if (!is_disjoint(tu, tv)) {
            return SeqFailure{u, v, std::move(tu), std::move(tv)};
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> dual_basis_dp(std::size_t n_max, std::span<const SeqPair> pairs) {
    for (std::size_t n = 1; n <= n_max; ++n) {
        const EvConstSeq en = EvConstSeq::atom(n);
        for (const auto& [u, v] : pairs) {
            if (!is_disjoint(u, v)) {
                throw DomainError("dual_basis_dp: sample pair is not disjoint");
            }
            if (!min(pair(u, en).abs(), pair(v, en).abs()).is_zero()) {
                return n;
            }
        }
    }
    return std::nullopt;
}

std::size_t rank_lower_bound(const DiagBilinear& a, std::size_t n) {
    std::vector<EvConstSeq> images;
    for (std::size_t i = 1; i <= n; ++i) {
        if (a.weight.at(i).is_zero()) {
            throw DomainError("rank_lower_bound: weight vanishes at index " + std::to_string(i));
        }
        const EvConstSeq ei = EvConstSeq::atom(i);
        EvConstSeq img = diag_apply(a, ei, ei);
        if (img != EvConstSeq::atom(i, a.weight.at(i))) {
            throw std::logic_error("rank_lower_bound: A(e_n, e_n) != w_n e_n");
        }
        for (const auto& prev : images) {
            if (!is_disjoint(prev, img)) {
                throw std::logic_error("rank_lower_bound: range atoms not disjoint");
            }
        }
        images.push_back(std::move(img));
    }
    return images.size();
}

std::optional<SeqFailure> slotwise_dp_check(const DiagBilinear& a, const EvConstSeq& u_fixed,
                                            std::span<const SeqPair> pairs) {
    const Permutation theta = Permutation::theta(2);
    const Permutation id = Permutation::identity(2);
    for (const auto& [v, w] : pairs) {
        if (!is_disjoint(v, w)) {
            throw DomainError("slotwise_dp_check: sample pair is not disjoint");
        }
        EvConstSeq second_v = diag_arens(a, u_fixed, v, theta);
        EvConstSeq second_w = diag_arens(a, u_fixed, w, theta);
        if (!is_disjoint(second_v, second_w)) {
            return SeqFailure{v, w, std::move(second_v), std::move(second_w)};
        }
        EvConstSeq first_v = diag_arens(a, v, u_fixed, id);
        EvConstSeq first_w = diag_arens(a, w, u_fixed, id);
        if (!is_disjoint(first_v, first_w)) {
            return SeqFailure{v, w, std::move(first_v), std::move(first_w)};
        }
    }
    return std::nullopt;
}

EvConstSeq random_sequence(Sampler& rng, std::size_t max_index, bool finite_support) {
    std::map<std::size_t, Rational> ex;
    const auto count = static_cast<std::size_t>(rng.integer(0, static_cast<long>(max_index / 2)));
    for (std::size_t i = 0; i < count; ++i) {
        ex.emplace(static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_index))), rng.rational());
    }
    Rational tail = finite_support ? Rational() : rng.rational();
    return EvConstSeq(std::move(ex), std::move(tail));
}

std::vector<SeqPair> sample_disjoint_pairs(Sampler& rng, std::size_t count) {
    std::vector<SeqPair> pairs;
    pairs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const long kind = rng.integer(0, 9);
        if (i == 0 || kind == 0) {
            // zero against anything
            pairs.emplace_back(EvConstSeq::zero(), random_sequence(rng));
        } else if (kind <= 4) {
            // finite block on 1..n-1 against a co-finite tail from n
            const auto n = static_cast<std::size_t>(rng.integer(1, 10));
            std::map<std::size_t, Rational> block;
            std::map<std::size_t, Rational> rest;
            for (std::size_t j = 1; j < n; ++j) {
                if (rng.chance(70)) {
                    block.emplace(j, rng.nonzero_rational());
                }
                rest.emplace(j, Rational());
            }
            for (std::size_t j = n; j < n + 4; ++j) {
                rest.emplace(j, rng.chance(30) ? Rational() : rng.nonzero_rational());
            }
            EvConstSeq finite(std::move(block), Rational());
            EvConstSeq tail(std::move(rest), rng.nonzero_rational());
            if (rng.chance(50)) {
                pairs.emplace_back(std::move(finite), std::move(tail));
            } else {
                pairs.emplace_back(std::move(tail), std::move(finite));
            }
        } else {
            // disjoint finite supports; one side may carry a tail beyond both
            std::map<std::size_t, Rational> left;
            std::map<std::size_t, Rational> right;
            for (std::size_t j = 1; j <= 12; ++j) {
                const long side = rng.integer(0, 2);
                if (side == 1) {
                    left.emplace(j, rng.nonzero_rational());
                } else if (side == 2) {
                    right.emplace(j, rng.nonzero_rational());
                }
            }
            Rational tail;
            if (rng.chance(40)) {
                for (std::size_t j = 1; j <= 12; ++j) {
                    right.try_emplace(j, Rational());
                }
                tail = rng.nonzero_rational();
            }
            pairs.emplace_back(EvConstSeq(std::move(left), Rational()), EvConstSeq(std::move(right), tail));
        }
    }
    return pairs;
}

WeightedCompOp random_comp_op(Sampler& rng) {
    WeightedCompOp t;
    t.weight = random_sequence(rng, 10, false);
    t.shift = static_cast<std::size_t>(rng.integer(0, 3));
    const long entries = rng.integer(0, 4);
    for (long i = 0; i < entries; ++i) {
        t.table[static_cast<std::size_t>(rng.integer(1, 8))] = static_cast<std::size_t>(rng.integer(1, 10));
    }
    return t;
}

}  // namespace riesz::seq
