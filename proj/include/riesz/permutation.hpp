#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace riesz {

/// Bijection of {0, ..., m-1}; printed and parsed 1-based. The inverse is
/// computed on construction.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t m);
    /// θ(1) = m, θ(2) = m-1, ..., θ(m) = 1; AR^θ(A) = A^{*(m+1)}.
    static Permutation theta(std::size_t m);
    /// All of S_m in lexicographic order of the one-line form.
    static std::vector<Permutation> all(std::size_t m);
    /// Accepts "id", "theta", or cycle notation such as "(1 3)(2 4)" or "(1,2,3)".
    static Permutation parse(std::string_view text, std::size_t m);

    std::size_t size() const { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_[i]; }
    std::size_t inverse_at(std::size_t i) const { return inverse_images_[i]; }
    Permutation inverse() const { return Permutation(inverse_images_); }
    const std::vector<std::size_t>& images() const { return images_; }
    bool is_identity() const;

    /// Cycle notation, 1-based, fixed points omitted; "id" for the identity.
    std::string cycles() const;
    /// One-line notation, 1-based: "[2 1 3]".
    std::string one_line() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

private:
    std::vector<std::size_t> images_;
    std::vector<std::size_t> inverse_images_;
};

}  // namespace riesz
