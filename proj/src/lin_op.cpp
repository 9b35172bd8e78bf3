#include "riesz/lin_op.hpp"

#include "riesz/errors.hpp"

namespace riesz {

LinOp::LinOp(std::size_t domain_dim, std::size_t codomain_dim)
    : domain_dim_(domain_dim), codomain_dim_(codomain_dim) {
    if (domain_dim_ == 0 || codomain_dim_ == 0) {
        throw DomainError("linear operator dimensions must be positive");
    }
}

LinOp LinOp::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw DomainError("empty matrix");
    }
    LinOp t(rows.front().size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != t.domain_dim_) {
            throw DimensionError("ragged matrix");
        }
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            t.set(r, c, rows[r][c]);
        }
    }
    return t;
}

LinOp LinOp::identity(std::size_t dim) {
    LinOp t(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        t.set(i, i, 1);
    }
    return t;
}

Rational LinOp::at(std::size_t row, std::size_t col) const {
    auto it = matrix_.find({row, col});
    return it == matrix_.end() ? Rational() : it->second;
}

void LinOp::set(std::size_t row, std::size_t col, const Rational& value) {
    if (row >= codomain_dim_ || col >= domain_dim_) {
        throw DimensionError("matrix index out of range");
    }
    if (value.is_zero()) {
        matrix_.erase({row, col});
    } else {
        matrix_.insert_or_assign({row, col}, value);
    }
}

FinVector LinOp::apply(const FinVector& x) const {
    if (x.dim() != domain_dim_) {
        throw DimensionError("LinOp::apply: dimension mismatch");
    }
    FinVector y(codomain_dim_);
    for (const auto& [rc, v] : matrix_) {
        if (!x[rc.second].is_zero()) {
            y[rc.first] += v * x[rc.second];
        }
    }
    return y;
}

MultiTensor LinOp::as_tensor() const {
    MultiTensor t({domain_dim_}, codomain_dim_);
    for (const auto& [rc, v] : matrix_) {
        t.set(rc.first, {rc.second}, v);
    }
    return t;
}

LinOp LinOp::from_tensor(const MultiTensor& t) {
    if (t.arity() != 1) {
        throw DimensionError("from_tensor: arity must be 1");
    }
    LinOp op(t.domain_dims()[0], t.codomain_dim());
    for (const auto& [key, v] : t.entries()) {
        op.set(key.out, key.idx[0], v);
    }
    return op;
}

LinOp order_adjoint(const LinOp& t) {
    LinOp a(t.codomain_dim(), t.domain_dim());
    for (const auto& [rc, v] : t.matrix()) {
        a.set(rc.second, rc.first, v);
    }
    return a;
}

LinOp second_adjoint(const LinOp& t) { return order_adjoint(order_adjoint(t)); }

DualVector apply_adjoint(const LinOp& t, const DualVector& f) { return {order_adjoint(t).apply(f.coords)}; }

BidualVector apply_second_adjoint(const LinOp& t, const BidualVector& x) {
    return {second_adjoint(t).apply(x.coords)};
}

LinOp slot_operator(const MultiTensor& a, std::size_t slot, std::span<const FinVector> fixed) {
    if (slot >= a.arity() || fixed.size() != a.arity()) {
        throw DimensionError("slot_operator: arity mismatch");
    }
    for (std::size_t s = 0; s < a.arity(); ++s) {
        if (s != slot && fixed[s].dim() != a.domain_dims()[s]) {
            throw DimensionError("slot_operator: fixed argument has wrong dimension");
        }
    }
    LinOp op(a.domain_dims()[slot], a.codomain_dim());
    std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
    for (const auto& [key, v] : a.entries()) {
        Rational term = v;
        for (std::size_t s = 0; s < a.arity() && !term.is_zero(); ++s) {
            if (s != slot) {
                term *= fixed[s][key.idx[s]];
            }
        }
        if (!term.is_zero()) {
            acc[{key.out, key.idx[slot]}] += term;
        }
    }
    for (const auto& [rc, v] : acc) {
        op.set(rc.first, rc.second, v);
    }
    return op;
}

}  // namespace riesz
