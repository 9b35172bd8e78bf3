#include "riesz/factorize.hpp"

namespace riesz {

Rational MultimorphismFactorization::evaluate(std::span<const FinVector> args) const {
    if (zero_operator) {
        return Rational();
    }
    if (args.size() != coords.size()) {
        throw DimensionError("factorization: arity mismatch");
    }
    Rational v = scale;
    for (std::size_t s = 0; s < coords.size(); ++s) {
        if (coords[s] >= args[s].dim()) {
            throw DimensionError("factorization: argument too short");
        }
        v *= args[s][coords[s]];
    }
    return v;
}

MultimorphismFactorization factorize_multimorphism(const MultiTensor& a) {
    if (a.codomain_dim() != 1) {
        throw DimensionError("factorize_multimorphism: operator must be scalar valued");
    }
    DPVerdict verdict = is_dp(a);
    if (!verdict.is_dp) {
        throw NotDisjointnessPreserving(std::move(verdict));
    }
    MultimorphismFactorization f;
    if (a.is_zero()) {
        f.zero_operator = true;
        return f;
    }
    const auto& [key, value] = *a.entries().begin();
    f.scale = value.abs();
    f.coords = key.idx;
    return f;
}

}  // namespace riesz
