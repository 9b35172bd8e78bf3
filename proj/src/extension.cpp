#include "riesz/extension.hpp"

#include "riesz/errors.hpp"

namespace riesz {

PositiveConeExtension::PositiveConeExtension(std::vector<std::size_t> domain_dims, std::size_t codomain_dim,
                                             PositiveConeMap b)
    : domain_dims_(std::move(domain_dims)), codomain_dim_(codomain_dim), b_(std::move(b)) {}

FinVector PositiveConeExtension::operator()(std::span<const FinVector> args) const {
    const std::size_t m = domain_dims_.size();
    if (args.size() != m) {
        throw DimensionError("extension: arity mismatch");
    }
    std::vector<FinVector> plus;
    std::vector<FinVector> minus;
    for (const auto& x : args) {
        plus.push_back(pos(x));
        minus.push_back(neg(x));
    }
    FinVector total(codomain_dim_);
    std::vector<FinVector> chosen(m);
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        bool skip = false;
        int minus_count = 0;
        for (std::size_t s = 0; s < m; ++s) {
            const bool use_minus = ((mask >> s) & 1UL) != 0;
            chosen[s] = use_minus ? minus[s] : plus[s];
            minus_count += use_minus ? 1 : 0;
            skip = skip || chosen[s].is_zero();
        }
        if (skip) {
            continue;
        }
        FinVector v = b_(chosen);
        if (minus_count % 2 == 0) {
            total += v;
        } else {
            total -= v;
        }
    }
    return total;
}

MultiTensor PositiveConeExtension::tensor() const {
    MultiTensor t(domain_dims_, codomain_dim_);
    std::vector<FinVector> args(domain_dims_.size());
    for_each_index(domain_dims_, [&](const Index& idx) {
        for (std::size_t s = 0; s < idx.size(); ++s) {
            args[s] = FinVector::atom(domain_dims_[s], idx[s]);
        }
        const FinVector v = (*this)(args);
        for (std::size_t k = 0; k < v.dim(); ++k) {
            t.set(k, idx, v[k]);
        }
    });
    return t;
}

MultiTensor extend_from_positive_cone(std::vector<std::size_t> domain_dims, std::size_t codomain_dim,
                                      PositiveConeMap b) {
    return PositiveConeExtension(std::move(domain_dims), codomain_dim, std::move(b)).tensor();
}

}  // namespace riesz
