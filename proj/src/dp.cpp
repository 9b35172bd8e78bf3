#include "riesz/dp.hpp"

#include "riesz/errors.hpp"

namespace riesz {

namespace {

DPWitness build_witness(const MultiTensor& a, std::size_t out, const Index& first, const Index& second) {
    const std::size_t m = a.arity();
    const auto& dims = a.domain_dims();
    std::size_t slot = 0;
    while (slot < m && first[slot] == second[slot]) {
        ++slot;
    }

    // Each tuple of the slice becomes a distinct monomial t^E(tuple) once the
    // other slots hold Σ_r t^(r·w_s) e_r with mixed-radix weights w_s. Above
    // the Cauchy root bound 1 + max|a|/min|a| such a polynomial cannot vanish.
    Rational max_abs;
    Rational min_abs;
    for (const auto& [idx, v] : a.slice(out)) {
        const Rational av = v.abs();
        max_abs = max(max_abs, av);
        min_abs = min_abs.is_zero() ? av : min(min_abs, av);
    }
    const Rational ratio = max_abs / min_abs;
    mpz_class floor_ratio;
    mpz_fdiv_q(floor_ratio.get_mpz_t(), ratio.raw().get_num_mpz_t(), ratio.raw().get_den_mpz_t());
    const Rational t(mpq_class(floor_ratio + 2));

    DPWitness w;
    w.slot = slot;
    w.out = out;
    w.x = FinVector::atom(dims[slot], first[slot]);
    w.y = FinVector::atom(dims[slot], second[slot]);
    w.args.resize(m);
    unsigned long weight = 1;
    for (std::size_t s = 0; s < m; ++s) {
        if (s == slot) {
            w.args[s] = FinVector(dims[s]);
            continue;
        }
        FinVector z(dims[s]);
        for (std::size_t r = 0; r < dims[s]; ++r) {
            z[r] = pow(t, r * weight);
        }
        w.args[s] = std::move(z);
        weight *= dims[s];
    }
    std::vector<FinVector> args = w.args;
    args[slot] = w.x;
    w.image_x = a.apply(args);
    args[slot] = w.y;
    w.image_y = a.apply(args);
    return w;
}

}  // namespace

DPVerdict is_dp(const MultiTensor& a) {
    DPVerdict verdict;
    verdict.certificate.assign(a.codomain_dim(), std::nullopt);
    const Index* previous_idx = nullptr;
    std::size_t previous_out = a.codomain_dim();
    for (const auto& [key, v] : a.entries()) {
        if (previous_idx != nullptr && previous_out == key.out) {
            verdict.is_dp = false;
            verdict.certificate.clear();
            verdict.witness = build_witness(a, key.out, *previous_idx, key.idx);
            if (!verify_witness(a, *verdict.witness)) {
                throw std::logic_error("is_dp: constructed witness failed re-verification");
            }
            return verdict;
        }
        verdict.certificate[key.out] = key.idx;
        previous_idx = &key.idx;
        previous_out = key.out;
    }
    return verdict;
}

DPVerdict is_dp(const LinOp& t) { return is_dp(t.as_tensor()); }

bool verify_witness(const MultiTensor& a, const DPWitness& w) {
    if (w.slot >= a.arity() || w.args.size() != a.arity()) {
        return false;
    }
    const std::size_t d = a.domain_dims()[w.slot];
    if (w.x.dim() != d || w.y.dim() != d) {
        return false;
    }
    for (std::size_t s = 0; s < a.arity(); ++s) {
        if (s != w.slot && w.args[s].dim() != a.domain_dims()[s]) {
            return false;
        }
    }
    if (!is_disjoint(w.x, w.y)) {
        return false;
    }
    std::vector<FinVector> args = w.args;
    args[w.slot] = w.x;
    const FinVector ix = a.apply(args);
    args[w.slot] = w.y;
    const FinVector iy = a.apply(args);
    if (ix != w.image_x || iy != w.image_y) {
        return false;
    }
    return !is_disjoint(ix, iy);
}

bool is_riesz_multimorphism(const MultiTensor& a) { return is_positive(a) && is_dp(a).is_dp; }

}  // namespace riesz
