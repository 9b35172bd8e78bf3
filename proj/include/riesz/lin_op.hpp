#pragma once

#include "riesz/duality.hpp"
#include "riesz/multi_tensor.hpp"

#include <map>
#include <utility>
#include <vector>

namespace riesz {

/// Linear operator T: R^dom -> R^cod as a sparse matrix, (row, col) -> value.
class LinOp {
public:
    LinOp(std::size_t domain_dim, std::size_t codomain_dim);
    static LinOp from_rows(const std::vector<std::vector<Rational>>& rows);
    static LinOp identity(std::size_t dim);

    std::size_t domain_dim() const { return domain_dim_; }
    std::size_t codomain_dim() const { return codomain_dim_; }
    const std::map<std::pair<std::size_t, std::size_t>, Rational>& matrix() const { return matrix_; }

    Rational at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, const Rational& value);

    FinVector apply(const FinVector& x) const;
    FinVector operator()(const FinVector& x) const { return apply(x); }

    /// The m = 1 tensor with the same entries.
    MultiTensor as_tensor() const;
    static LinOp from_tensor(const MultiTensor& t);

    friend bool operator==(const LinOp&, const LinOp&) = default;

private:
    std::size_t domain_dim_;
    std::size_t codomain_dim_;
    std::map<std::pair<std::size_t, std::size_t>, Rational> matrix_;
};

/// T': F~ -> E~ with T'(f)(x) = f(T(x)). With the dual bases this is the transpose.
LinOp order_adjoint(const LinOp& t);

/// T'' = (T')'. On R^n with J onto, T'' = T.
LinOp second_adjoint(const LinOp& t);

/// T' acting on a dual vector.
DualVector apply_adjoint(const LinOp& t, const DualVector& f);

/// T'' acting on a bidual vector.
BidualVector apply_second_adjoint(const LinOp& t, const BidualVector& x);

/// The linear slice x_j ↦ A(x_1, ..., x_j, ..., x_m) with the other slots fixed.
/// `fixed[j]` is ignored.
LinOp slot_operator(const MultiTensor& a, std::size_t slot, std::span<const FinVector> fixed);

}  // namespace riesz
