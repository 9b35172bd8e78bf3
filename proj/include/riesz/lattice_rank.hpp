#pragma once

#include "riesz/multi_tensor.hpp"

namespace riesz {

/// Dimension of the Riesz subspace of R^n generated by the range of A.
///
/// A Riesz subspace of R^n is spanned by disjoint positive vectors, so it is
/// cut out by relations x_i = c·x_j (c > 0) and x_i = 0. The smallest one
/// containing span(range A) keeps exactly the relations satisfied by every
/// atom-tuple image; its dimension is the number of classes of nonzero output
/// slices under positive proportionality.
std::size_t lattice_rank(const MultiTensor& a);

}  // namespace riesz
