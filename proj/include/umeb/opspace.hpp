#pragma once

#include <vector>

#include "umeb/types.hpp"

namespace umeb {

// Hilbert-Schmidt-orthonormal basis of a subspace of d x d operator space.
struct OperatorSubspace {
  int dim = 0;  // operators are dim x dim
  std::vector<Mat> basis;

  int size() const { return static_cast<int>(basis.size()); }
};

// Tr(a^dag b). Throws std::invalid_argument on shape mismatch.
cplx hs_inner(const Mat& a, const Mat& b);

double hs_norm(const Mat& a);

// Modified (re-orthogonalized) Gram-Schmidt over the Hilbert-Schmidt
// inner product. Linearly dependent generators are dropped; output
// length is the numerical rank of the span.
OperatorSubspace gram_schmidt_hs(const std::vector<Mat>& generators);

// Singular values, non-increasing.
std::vector<double> singular_values(const Mat& m);

// Orthonormal basis of the Hilbert-Schmidt complement within d x d
// operator space; dim(sub) + dim(result) == d^2.
OperatorSubspace orthogonal_complement(const OperatorSubspace& sub);

// Largest |Gram - I| entry of a basis; diagnostic for subspace validity.
double gram_residual(const std::vector<Mat>& basis);

// Largest norm of (I - P_b) a_i over elements of a, where P_b projects
// onto span(b). Zero when span(a) is contained in span(b).
double projection_residual(const std::vector<Mat>& a, const std::vector<Mat>& b);

}  // namespace umeb
