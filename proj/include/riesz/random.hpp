#pragma once

#include "riesz/fin_vector.hpp"

#include <cstdint>
#include <random>

namespace riesz {

/// Seeded generator whose output depends only on the seed (no
/// implementation-defined distributions), so reports replay byte-for-byte.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [lo, hi].
    long integer(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    bool chance(unsigned percent) { return next() % 100 < percent; }

    /// Small rational p/q with |p| ≤ max_num, 1 ≤ q ≤ max_den.
    Rational rational(long max_num = 9, long max_den = 4) {
        return Rational(integer(-max_num, max_num), integer(1, max_den));
    }

    Rational nonzero_rational(long max_num = 9, long max_den = 4) {
        long p = 0;
        while (p == 0) {
            p = integer(-max_num, max_num);
        }
        return Rational(p, integer(1, max_den));
    }

    FinVector vector(std::size_t dim, unsigned zero_percent = 25) {
        FinVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] = chance(zero_percent) ? Rational() : nonzero_rational();
        }
        return v;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace riesz
