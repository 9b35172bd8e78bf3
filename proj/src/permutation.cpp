#include "riesz/permutation.hpp"

#include "riesz/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace riesz {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    const std::size_t m = images_.size();
    if (m == 0) {
        throw DomainError("permutation of an empty set");
    }
    inverse_images_.assign(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        if (images_[i] >= m || inverse_images_[images_[i]] != m) {
            throw DomainError("not a bijection");
        }
        inverse_images_[images_[i]] = i;
    }
}

Permutation Permutation::identity(std::size_t m) {
    std::vector<std::size_t> v(m);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::theta(std::size_t m) {
    std::vector<std::size_t> v(m);
    for (std::size_t i = 0; i < m; ++i) {
        v[i] = m - 1 - i;
    }
    return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(std::size_t m) {
    std::vector<std::size_t> v(m);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Permutation Permutation::parse(std::string_view text, std::size_t m) {
    if (text == "id") {
        return identity(m);
    }
    if (text == "theta") {
        return theta(m);
    }
    std::vector<std::size_t> images(m);
    std::iota(images.begin(), images.end(), 0);
    std::vector<bool> used(m, false);
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        return ParseError("permutation \"" + std::string(text) + "\": " + why);
    };
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) {
            ++pos;
        }
    };
    skip_space();
    if (pos == text.size()) {
        throw fail("empty");
    }
    while (pos < text.size()) {
        if (text[pos] != '(') {
            throw fail("expected '('");
        }
        ++pos;
        std::vector<std::size_t> cycle;
        while (true) {
            skip_space();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                skip_space();
            }
            if (pos >= text.size()) {
                throw fail("unterminated cycle");
            }
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t value = 0;
            bool any = false;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) {
                value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
                any = true;
                ++pos;
                if (value > m) {
                    throw fail("element exceeds arity " + std::to_string(m));
                }
            }
            if (!any) {
                throw fail("expected a number");
            }
            if (value == 0 || value > m) {
                throw fail("element out of range 1.." + std::to_string(m));
            }
            if (used[value - 1]) {
                throw fail("element repeated");
            }
            used[value - 1] = true;
            cycle.push_back(value - 1);
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            images[cycle[i]] = cycle[(i + 1) % cycle.size()];
        }
        skip_space();
    }
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
            return false;
        }
    }
    return true;
}

std::string Permutation::cycles() const {
    if (is_identity()) {
        return "id";
    }
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == start) {
            continue;
        }
        out += '(';
        std::size_t i = start;
        bool first = true;
        while (!seen[i]) {
            seen[i] = true;
            out += (first ? "" : " ") + std::to_string(i + 1);
            first = false;
            i = images_[i];
        }
        out += ')';
    }
    return out;
}

std::string Permutation::one_line() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        out += (i == 0 ? "" : " ") + std::to_string(images_[i] + 1);
    }
    return out + "]";
}

}  // namespace riesz
