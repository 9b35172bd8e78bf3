#include "riesz/lattice_rank.hpp"

#include <optional>
#include <vector>

namespace riesz {

namespace {

using Slice = std::vector<std::pair<Index, Rational>>;

bool positively_proportional(const Slice& a, const Slice& b) {
    if (a.size() != b.size() || a.empty()) {
        return false;
    }
    std::optional<Rational> ratio;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].first != b[i].first) {
            return false;
        }
        Rational r = a[i].second / b[i].second;
        if (r.sign() <= 0 || (ratio && *ratio != r)) {
            return false;
        }
        ratio = std::move(r);
    }
    return true;
}

}  // namespace

std::size_t lattice_rank(const MultiTensor& a) {
    std::vector<Slice> representatives;
    for (std::size_t k = 0; k < a.codomain_dim(); ++k) {
        Slice s = a.slice(k);
        if (s.empty()) {
            continue;
        }
        bool seen = false;
        for (const auto& r : representatives) {
            if (positively_proportional(s, r)) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            representatives.push_back(std::move(s));
        }
    }
    return representatives.size();
}

}  // namespace riesz
