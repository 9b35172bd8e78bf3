#include "riesz/fin_vector.hpp"

#include "riesz/errors.hpp"

#include <algorithm>
#include <string>

namespace riesz {

namespace {

void require_same_dim(const FinVector& x, const FinVector& y, const char* op) {
    if (x.dim() != y.dim()) {
        throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(x.dim()) + " vs " +
                             std::to_string(y.dim()) + ")");
    }
}

template <typename F>
FinVector zip(const FinVector& x, const FinVector& y, const char* op, F&& f) {
    require_same_dim(x, y, op);
    std::vector<Rational> out;
    out.reserve(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        out.push_back(f(x[i], y[i]));
    }
    return FinVector(std::move(out));
}

template <typename F>
FinVector map(const FinVector& x, F&& f) {
    std::vector<Rational> out;
    out.reserve(x.dim());
    for (const auto& c : x.coords()) {
        out.push_back(f(c));
    }
    return FinVector(std::move(out));
}

}  // namespace

FinVector FinVector::atom(std::size_t dim, std::size_t i) {
    if (i >= dim) {
        throw DimensionError("atom index out of range");
    }
    FinVector v(dim);
    v[i] = 1;
    return v;
}

FinVector FinVector::constant(std::size_t dim, const Rational& c) {
    return FinVector(std::vector<Rational>(dim, c));
}

bool FinVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool FinVector::is_positive() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.sign() >= 0; });
}

std::size_t FinVector::support_size() const {
    return static_cast<std::size_t>(
        std::count_if(coords_.begin(), coords_.end(), [](const Rational& c) { return !c.is_zero(); }));
}

FinVector& FinVector::operator+=(const FinVector& o) {
    require_same_dim(*this, o, "add");
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] += o.coords_[i];
    }
    return *this;
}

FinVector& FinVector::operator-=(const FinVector& o) {
    require_same_dim(*this, o, "sub");
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] -= o.coords_[i];
    }
    return *this;
}

FinVector& FinVector::operator*=(const Rational& c) {
    for (auto& x : coords_) {
        x *= c;
    }
    return *this;
}

FinVector FinVector::operator-() const {
    return map(*this, [](const Rational& c) { return -c; });
}

std::ostream& operator<<(std::ostream& os, const FinVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) {
        os << (i == 0 ? "" : ", ") << v[i];
    }
    return os << ')';
}

FinVector sup(const FinVector& x, const FinVector& y) {
    return zip(x, y, "sup", [](const Rational& a, const Rational& b) { return max(a, b); });
}

FinVector inf(const FinVector& x, const FinVector& y) {
    return zip(x, y, "inf", [](const Rational& a, const Rational& b) { return min(a, b); });
}

FinVector abs(const FinVector& x) {
    return map(x, [](const Rational& c) { return c.abs(); });
}

FinVector pos(const FinVector& x) {
    return map(x, [](const Rational& c) { return c.pos(); });
}

FinVector neg(const FinVector& x) {
    return map(x, [](const Rational& c) { return c.neg(); });
}

bool is_disjoint(const FinVector& x, const FinVector& y) {
    require_same_dim(x, y, "is_disjoint");
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (!x[i].is_zero() && !y[i].is_zero()) {
            return false;
        }
    }
    return true;
}

bool leq(const FinVector& x, const FinVector& y) {
    require_same_dim(x, y, "leq");
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (y[i] < x[i]) {
            return false;
        }
    }
    return true;
}

Rational dot(const FinVector& x, const FinVector& y) {
    require_same_dim(x, y, "dot");
    Rational s;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (!x[i].is_zero() && !y[i].is_zero()) {
            s += x[i] * y[i];
        }
    }
    return s;
}

}  // namespace riesz
