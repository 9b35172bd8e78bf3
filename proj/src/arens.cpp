#include "riesz/arens.hpp"

#include "riesz/errors.hpp"

#include <future>
#include <string>

namespace riesz {

namespace {

void check_args(const MultiTensor& a, const Permutation& rho, std::span<const BidualVector> args) {
    if (rho.size() != a.arity()) {
        throw DimensionError("arens: permutation size does not match arity");
    }
    if (args.size() != a.arity()) {
        throw DimensionError("arens: expected " + std::to_string(a.arity()) + " bidual arguments");
    }
    for (std::size_t s = 0; s < args.size(); ++s) {
        if (args[s].dim() != a.domain_dims()[s]) {
            throw DimensionError("arens: bidual argument " + std::to_string(s + 1) + " has wrong dimension");
        }
    }
}

IntermediateForm run_chain(IntermediateForm form, const Permutation& rho, std::span<const BidualVector> args,
                           std::vector<IntermediateForm>* chain) {
    if (chain != nullptr) {
        chain->push_back(form);
    }
    for (std::size_t i = 0; i < rho.size(); ++i) {
        form = contract(args[rho(i)], form);
        if (chain != nullptr) {
            chain->push_back(form);
        }
    }
    return form;
}

// Contract the permuted form against every atom of the next slot, sharing
// prefixes: depth i fixes the atom of original slot ρ(i).
void assemble(const IntermediateForm& form, const Permutation& rho, std::size_t depth, Index& idx,
              std::size_t out, MultiTensor& result) {
    if (depth == rho.size()) {
        result.set(out, idx, form.value());
        return;
    }
    const std::size_t slot = rho(depth);
    const std::size_t dim = form.slots().front().dim;
    for (std::size_t j = 0; j < dim; ++j) {
        IntermediateForm next = contract(canonical_embed(FinVector::atom(dim, j)), form);
        if (next.is_zero()) {
            continue;
        }
        idx[slot] = j;
        assemble(next, rho, depth + 1, idx, out, result);
    }
}

unsigned clamp_threads(unsigned threads, std::size_t work) {
    if (threads <= 1 || work <= 1) {
        return 1;
    }
    return static_cast<unsigned>(std::min<std::size_t>(threads, work));
}

}  // namespace

Rational arens_functional(const MultiTensor& a, const Permutation& rho, std::span<const BidualVector> args,
                          const DualVector& y, std::vector<IntermediateForm>* chain) {
    check_args(a, rho, args);
    IntermediateForm permuted = permute_form(IntermediateForm::compose(y, a), rho);
    return run_chain(std::move(permuted), rho, args, chain).value();
}

BidualVector arens_evaluate(const MultiTensor& a, const Permutation& rho, std::span<const BidualVector> args) {
    check_args(a, rho, args);
    BidualVector out{FinVector(a.codomain_dim())};
    for (std::size_t k = 0; k < a.codomain_dim(); ++k) {
        out.coords[k] = arens_functional(a, rho, args, dual_atom(a.codomain_dim(), k));
    }
    return out;
}

ArensResult arens_extension(const MultiTensor& a, const Permutation& rho, bool with_trace) {
    if (a.arity() > MultiTensor::kMaxArity) {
        throw DomainError("arens: arity cap exceeded");
    }
    if (rho.size() != a.arity()) {
        throw DimensionError("arens: permutation size does not match arity");
    }
    ArensResult result{rho, MultiTensor(a.domain_dims(), a.codomain_dim()), std::nullopt};
    Index idx(a.arity(), 0);
    for (std::size_t k = 0; k < a.codomain_dim(); ++k) {
        const IntermediateForm permuted =
            permute_form(IntermediateForm::compose(dual_atom(a.codomain_dim(), k), a), rho);
        assemble(permuted, rho, 0, idx, k, result.tensor);
    }
    if (with_trace) {
        std::vector<BidualVector> ones;
        for (auto d : a.domain_dims()) {
            ones.push_back({FinVector::constant(d, 1)});
        }
        std::vector<TraceEntry> trace;
        for (std::size_t k = 0; k < a.codomain_dim(); ++k) {
            std::vector<IntermediateForm> chain;
            arens_functional(a, rho, ones, dual_atom(a.codomain_dim(), k), &chain);
            for (std::size_t step = 0; step < chain.size(); ++step) {
                trace.push_back({k, step, std::move(chain[step])});
            }
        }
        result.trace = std::move(trace);
    }
    return result;
}

std::vector<ArensResult> arens_extensions_all(const MultiTensor& a, bool with_trace, unsigned threads) {
    const std::vector<Permutation> perms = Permutation::all(a.arity());
    const unsigned workers = clamp_threads(threads, perms.size());
    std::vector<std::optional<ArensResult>> slots(perms.size());
    if (workers == 1) {
        for (std::size_t i = 0; i < perms.size(); ++i) {
            slots[i] = arens_extension(a, perms[i], with_trace);
        }
    } else {
        std::vector<std::future<void>> jobs;
        for (unsigned w = 0; w < workers; ++w) {
            jobs.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < perms.size(); i += workers) {
                    slots[i] = arens_extension(a, perms[i], with_trace);
                }
            }));
        }
        for (auto& j : jobs) {
            j.get();
        }
    }
    std::vector<ArensResult> out;
    out.reserve(slots.size());
    for (auto& s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

bool DPPreservationReport::all_dp() const {
    if (!input.is_dp) {
        return false;
    }
    for (const auto& [rho, verdict] : per_rho) {
        if (!verdict.is_dp) {
            return false;
        }
    }
    return true;
}

DPPreservationReport check_dp_preservation(const MultiTensor& a, unsigned threads) {
    DPPreservationReport report{is_dp(a), {}};
    if (!report.input.is_dp) {
        return report;
    }
    for (auto& ext : arens_extensions_all(a, false, threads)) {
        DPVerdict v = is_dp(ext.tensor);
        report.per_rho.emplace_back(std::move(ext.rho), std::move(v));
    }
    return report;
}

bool pairing_identities(const MultiTensor& a, const DualVector& y,
                        std::span<const std::vector<BidualVector>> tuples) {
    if (!is_dp_functional(y)) {
        throw DomainError("pairing_identities: functional is not disjointness preserving");
    }
    if (y.dim() != a.codomain_dim()) {
        throw DimensionError("pairing_identities: functional dimension does not match codomain");
    }
    if (!is_dp(a).is_dp) {
        throw DomainError("pairing_identities: operator is not disjointness preserving");
    }
    const DualVector abs_y = abs(y);
    for (const auto& rho : Permutation::all(a.arity())) {
        // y'∘AR(A) as a scalar form, assembled through the same pipeline.
        MultiTensor composed(a.domain_dims(), 1);
        MultiTensor ext = arens_extension(a, rho).tensor;
        for (const auto& [key, v] : ext.entries()) {
            composed.add(0, key.idx, y.coords[key.out] * v);
        }
        if (!is_dp(composed).is_dp) {
            return false;
        }
        for (const auto& tuple : tuples) {
            std::vector<BidualVector> abs_tuple;
            for (const auto& x : tuple) {
                abs_tuple.push_back(abs(x));
            }
            const Rational lhs = abs(arens_evaluate(a, rho, tuple))(abs_y);
            const Rational mid = arens_functional(a, rho, abs_tuple, y).abs();
            const Rational rhs = arens_functional(a, rho, tuple, y).abs();
            if (lhs != mid || mid != rhs) {
                return false;
            }
        }
    }
    return true;
}

bool span_disjointness(const MultiTensor& a, std::size_t slot, const BidualVector& w, const BidualVector& z,
                       std::span<const BidualVector> others, const DualVector& y_star) {
    if (!is_disjoint(w, z)) {
        throw DomainError("span_disjointness: w and z are not disjoint");
    }
    if (slot >= a.arity() || others.size() != a.arity()) {
        throw DimensionError("span_disjointness: arity mismatch");
    }
    std::vector<BidualVector> args(others.begin(), others.end());
    const DualVector abs_y = abs(y_star);
    for (const auto& rho : Permutation::all(a.arity())) {
        args[slot] = w;
        const BidualVector u = arens_evaluate(a, rho, args);
        args[slot] = z;
        const BidualVector v = arens_evaluate(a, rho, args);
        if (!inf(abs(u), abs(v))(abs_y).is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace riesz
