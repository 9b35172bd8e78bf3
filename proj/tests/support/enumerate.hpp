#pragma once

// The bounded exhaustive tensor family: arity m ≤ 3, domain dimensions sorted
// nondecreasing in {1,2,3}, codomain dimension in {1,2,3}, entries in {-1,0,1}.
// Global sign is quotiented out (the first nonzero entry is +1), which is
// harmless because every property checked is invariant under A ↦ -A, and so
// is reordering the domain slots. Shapes with at most kFullLimit entry
// positions are enumerated completely; larger shapes are enumerated up to
// kSparseMid (or kSparseHigh) nonzero entries.

#include "riesz/multi_tensor.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace riesz::testing {

struct Shape {
    std::vector<std::size_t> dims;
    std::size_t codim = 1;

    std::size_t positions() const {
        std::size_t n = codim;
        for (auto d : dims) {
            n *= d;
        }
        return n;
    }
};

inline constexpr std::size_t kFullLimit = 9;
inline constexpr std::size_t kSparseMidLimit = 27;
inline constexpr std::size_t kSparseMid = 3;
inline constexpr std::size_t kSparseHigh = 2;

inline std::vector<Shape> exhaustive_shapes() {
    std::vector<Shape> shapes;
    for (std::size_t m = 1; m <= 3; ++m) {
        std::vector<std::size_t> dims(m, 1);
        for (;;) {
            for (std::size_t c = 1; c <= 3; ++c) {
                shapes.push_back({dims, c});
            }
            // next nondecreasing tuple over {1,2,3}
            std::size_t s = m;
            while (s > 0 && dims[s - 1] == 3) {
                --s;
            }
            if (s == 0) {
                break;
            }
            ++dims[s - 1];
            for (std::size_t t = s; t < m; ++t) {
                dims[t] = dims[s - 1];
            }
        }
    }
    return shapes;
}

/// Entry positions of a shape in (out, idx) order.
inline std::vector<std::pair<std::size_t, Index>> positions_of(const Shape& shape) {
    std::vector<std::pair<std::size_t, Index>> out;
    for (std::size_t k = 0; k < shape.codim; ++k) {
        for_each_index(shape.dims, [&](const Index& idx) { out.emplace_back(k, idx); });
    }
    return out;
}

/// Calls f on every tensor of the family for one shape.
inline void enumerate_shape(const Shape& shape, const std::function<void(const MultiTensor&)>& f) {
    const auto pos = positions_of(shape);
    const std::size_t n = pos.size();
    if (n <= kFullLimit) {
        // base-3 digits: 0 → 0, 1 → +1, 2 → -1; skip codes whose first nonzero is -1
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) {
            total *= 3;
        }
        for (std::size_t code = 0; code < total; ++code) {
            MultiTensor t(shape.dims, shape.codim);
            std::size_t c = code;
            bool first = true;
            bool skip = false;
            for (std::size_t i = 0; i < n; ++i, c /= 3) {
                const auto digit = c % 3;
                if (digit == 0) {
                    continue;
                }
                if (first && digit == 2) {
                    skip = true;
                    break;
                }
                first = false;
                t.set(pos[i].first, pos[i].second, digit == 1 ? Rational(1) : Rational(-1));
            }
            if (!skip) {
                f(t);
            }
        }
        return;
    }
    const std::size_t k_max = n <= kSparseMidLimit ? kSparseMid : kSparseHigh;
    f(MultiTensor(shape.dims, shape.codim));
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> extend = [&](std::size_t start) {
        if (!chosen.empty()) {
            // signs: first chosen entry +1, the rest free
            const std::size_t free = chosen.size() - 1;
            for (std::size_t mask = 0; mask < (std::size_t{1} << free); ++mask) {
                MultiTensor t(shape.dims, shape.codim);
                t.set(pos[chosen[0]].first, pos[chosen[0]].second, Rational(1));
                for (std::size_t j = 1; j < chosen.size(); ++j) {
                    const bool neg = ((mask >> (j - 1)) & 1U) != 0;
                    t.set(pos[chosen[j]].first, pos[chosen[j]].second, neg ? Rational(-1) : Rational(1));
                }
                f(t);
            }
        }
        if (chosen.size() == k_max) {
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            chosen.push_back(i);
            extend(i + 1);
            chosen.pop_back();
        }
    };
    extend(0);
}

inline void enumerate_exhaustive(const std::function<void(const MultiTensor&)>& f) {
    for (const auto& shape : exhaustive_shapes()) {
        enumerate_shape(shape, f);
    }
}

}  // namespace riesz::testing
