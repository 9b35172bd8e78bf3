#pragma once

// Test-only oracles. Nothing here calls into the decision procedures it is
// used to check: evaluation is dense, DP is decided by searching for disjoint
// pairs, the modulus by the Riesz-Kantorovich supremum over atom signs.

#include "riesz/multi_tensor.hpp"
#include "riesz/random.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace riesz::testing {

/// Dense copy of a tensor over scalar type T (Rational, or long long when
/// every entry is an integer).
template <typename T>
struct DenseTensor {
    std::vector<std::size_t> dims;
    std::size_t codim = 0;
    std::size_t tuples = 1;
    std::vector<T> data;  // data[out * tuples + linear(idx)]

    T& at(std::size_t out, std::size_t linear) { return data[out * tuples + linear]; }
    const T& at(std::size_t out, std::size_t linear) const { return data[out * tuples + linear]; }
};

inline std::size_t linear_index(std::span<const std::size_t> dims, const Index& idx) {
    std::size_t l = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        l = l * dims[s] + idx[s];
    }
    return l;
}

template <typename T>
DenseTensor<T> densify(const MultiTensor& a) {
    DenseTensor<T> d;
    d.dims = a.domain_dims();
    d.codim = a.codomain_dim();
    for (auto n : d.dims) {
        d.tuples *= n;
    }
    d.data.assign(d.codim * d.tuples, T(0));
    for_each_index(d.dims, [&](const Index& idx) {
        const std::size_t l = linear_index(d.dims, idx);
        for (std::size_t k = 0; k < d.codim; ++k) {
            const Rational v = a.at(k, idx);
            if constexpr (std::is_same_v<T, Rational>) {
                d.at(k, l) = v;
            } else {
                d.at(k, l) = static_cast<T>(v.numerator().get_si());
            }
        }
    });
    return d;
}

/// Σ over every atom tuple of value · ∏ args, with no sparsity shortcuts.
template <typename T>
std::vector<T> dense_apply(const DenseTensor<T>& a, const std::vector<std::vector<T>>& args) {
    std::vector<T> out(a.codim, T(0));
    std::vector<T> weights(a.tuples, T(1));
    std::size_t l = 0;
    for_each_index(a.dims, [&](const Index& idx) {
        T w(1);
        for (std::size_t s = 0; s < idx.size(); ++s) {
            w = w * args[s][idx[s]];
        }
        weights[l++] = w;
    });
    for (std::size_t k = 0; k < a.codim; ++k) {
        T acc(0);
        for (std::size_t t = 0; t < a.tuples; ++t) {
            acc = acc + a.at(k, t) * weights[t];
        }
        out[k] = acc;
    }
    return out;
}

inline FinVector dense_apply(const MultiTensor& a, std::span<const FinVector> args) {
    const auto d = densify<Rational>(a);
    std::vector<std::vector<Rational>> raw;
    for (const auto& x : args) {
        raw.emplace_back(x.coords().begin(), x.coords().end());
    }
    return FinVector(dense_apply(d, raw));
}

template <typename T>
T generic_coefficient(Sampler& rng) {
    long v = 0;
    while (v == 0) {
        v = rng.integer(-1000, 1000);
    }
    return T(v);
}

/// Brute-force DP oracle: for every slot, every split of its coordinates into
/// two disjoint nonempty supports S, T, fill x on S and y on T with generic
/// coefficients, fix the other slots to generic full-support vectors, and look
/// for an output coordinate where both images are nonzero. A hit is a genuine
/// counterexample; `draws` independent draws make a miss astronomically
/// unlikely for a non-DP tensor.
template <typename T>
bool brute_force_is_dp(const DenseTensor<T>& a, Sampler& rng, int draws = 2) {
    const std::size_t m = a.dims.size();
    for (std::size_t slot = 0; slot < m; ++slot) {
        const std::size_t d = a.dims[slot];
        if (d < 2) {
            continue;
        }
        // assignment code per coordinate: 0 = neither, 1 = S, 2 = T
        std::size_t codes = 1;
        for (std::size_t i = 0; i < d; ++i) {
            codes *= 3;
        }
        for (std::size_t code = 0; code < codes; ++code) {
            std::vector<int> side(d);
            std::size_t c = code;
            bool has_s = false;
            bool has_t = false;
            for (std::size_t i = 0; i < d; ++i) {
                side[i] = static_cast<int>(c % 3);
                c /= 3;
                has_s = has_s || side[i] == 1;
                has_t = has_t || side[i] == 2;
            }
            if (!has_s || !has_t) {
                continue;
            }
            for (int draw = 0; draw < draws; ++draw) {
                std::vector<std::vector<T>> args(m);
                for (std::size_t s = 0; s < m; ++s) {
                    if (s == slot) {
                        continue;
                    }
                    args[s].resize(a.dims[s]);
                    for (auto& v : args[s]) {
                        v = generic_coefficient<T>(rng);
                    }
                }
                std::vector<T> x(d, T(0));
                std::vector<T> y(d, T(0));
                for (std::size_t i = 0; i < d; ++i) {
                    if (side[i] == 1) {
                        x[i] = generic_coefficient<T>(rng);
                    } else if (side[i] == 2) {
                        y[i] = generic_coefficient<T>(rng);
                    }
                }
                args[slot] = x;
                const auto ix = dense_apply(a, args);
                args[slot] = y;
                const auto iy = dense_apply(a, args);
                for (std::size_t k = 0; k < a.codim; ++k) {
                    if (ix[k] != T(0) && iy[k] != T(0)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

/// |A|(e_{i_1}, ..., e_{i_m})_k = sup{ A(y)_k : |y_s| ≤ e_{i_s} }, the sup taken
/// over the extreme points y_s = ±e_{i_s} (multilinearity). T = long long is
/// exact for integer tensors.
template <typename T = Rational>
MultiTensor riesz_kantorovich_modulus(const MultiTensor& a) {
    const auto d = densify<T>(a);
    const std::size_t m = a.arity();
    MultiTensor out(a.domain_dims(), a.codomain_dim());
    std::vector<std::vector<T>> args(m);
    for_each_index(a.domain_dims(), [&](const Index& idx) {
        std::optional<std::vector<T>> best;
        for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
            for (std::size_t s = 0; s < m; ++s) {
                args[s].assign(a.domain_dims()[s], T(0));
                args[s][idx[s]] = ((mask >> s) & 1UL) != 0 ? T(-1) : T(1);
            }
            const auto v = dense_apply(d, args);
            if (!best) {
                best = v;
            } else {
                for (std::size_t k = 0; k < v.size(); ++k) {
                    if ((*best)[k] < v[k]) {
                        (*best)[k] = v[k];
                    }
                }
            }
        }
        for (std::size_t k = 0; k < best->size(); ++k) {
            out.set(k, idx, Rational((*best)[k]));
        }
    });
    return out;
}

/// Rank of a set of vectors by exact Gaussian elimination.
inline std::size_t rank_of(std::vector<FinVector> rows) {
    if (rows.empty()) {
        return 0;
    }
    const std::size_t n = rows.front().dim();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && !rows[i][col].is_zero()) {
                rows[i] -= rows[r] * (rows[i][col] / rows[r][col]);
            }
        }
        ++r;
    }
    return r;
}

/// Generated Riesz subspace by closure: keep adjoining positive parts of basis
/// vectors, their differences, and random combinations until a full pass adds
/// nothing.
inline std::size_t closure_lattice_rank(const MultiTensor& a, Sampler& rng, int samples = 300) {
    std::vector<FinVector> basis;
    auto try_add = [&](const FinVector& v) {
        if (v.is_zero()) {
            return false;
        }
        std::vector<FinVector> trial = basis;
        trial.push_back(v);
        if (rank_of(trial) > basis.size()) {
            basis.push_back(v);
            return true;
        }
        return false;
    };
    std::vector<FinVector> args(a.arity());
    for_each_index(a.domain_dims(), [&](const Index& idx) {
        for (std::size_t s = 0; s < idx.size(); ++s) {
            args[s] = FinVector::atom(a.domain_dims()[s], idx[s]);
        }
        try_add(dense_apply(a, args));
    });
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<FinVector> current = basis;
        for (std::size_t i = 0; i < current.size(); ++i) {
            grew = try_add(pos(current[i])) || grew;
            for (std::size_t j = 0; j < current.size(); ++j) {
                if (i != j) {
                    grew = try_add(pos(current[i] - current[j])) || grew;
                }
            }
        }
        for (int s = 0; s < samples && !current.empty(); ++s) {
            FinVector combo(current.front().dim());
            for (const auto& b : current) {
                combo += b * Rational(rng.integer(-20, 20));
            }
            grew = try_add(pos(combo)) || grew;
        }
    }
    return basis.size();
}

/// Random tensor with entries from `rng.rational()`; `density` is the percent
/// chance an entry is nonzero.
inline MultiTensor random_tensor(Sampler& rng, std::vector<std::size_t> dims, std::size_t codim,
                                 unsigned density = 40) {
    MultiTensor t(std::move(dims), codim);
    for (std::size_t k = 0; k < codim; ++k) {
        for_each_index(t.domain_dims(), [&](const Index& idx) {
            if (rng.chance(density)) {
                t.set(k, idx, rng.nonzero_rational());
            }
        });
    }
    return t;
}

inline std::vector<std::size_t> random_dims(Sampler& rng, std::size_t m, std::size_t max_dim) {
    std::vector<std::size_t> dims(m);
    for (auto& d : dims) {
        d = static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_dim)));
    }
    return dims;
}

/// Random DP tensor: each output coordinate gets at most one nonzero tuple.
inline MultiTensor random_dp_tensor(Sampler& rng, std::vector<std::size_t> dims, std::size_t codim) {
    MultiTensor t(std::move(dims), codim);
    for (std::size_t k = 0; k < codim; ++k) {
        if (rng.chance(20)) {
            continue;
        }
        Index idx;
        for (auto d : t.domain_dims()) {
            idx.push_back(static_cast<std::size_t>(rng.integer(0, static_cast<long>(d) - 1)));
        }
        t.set(k, idx, rng.nonzero_rational());
    }
    return t;
}

inline std::vector<FinVector> random_args(Sampler& rng, const MultiTensor& a, unsigned zero_percent = 25) {
    std::vector<FinVector> args;
    for (auto d : a.domain_dims()) {
        args.push_back(rng.vector(d, zero_percent));
    }
    return args;
}

inline std::vector<FinVector> random_positive_args(Sampler& rng, const MultiTensor& a) {
    std::vector<FinVector> args;
    for (auto d : a.domain_dims()) {
        args.push_back(abs(rng.vector(d)));
    }
    return args;
}

}  // namespace riesz::testing
