#pragma once

#include <vector>

#include "umeb/opspace.hpp"
#include "umeb/types.hpp"

namespace umeb {

// Normalized vector in C^d (x) C^d; amplitude for |j,k> lives at index
// j*d + k, j labelling the first factor.
struct BipartiteState {
  int dim = 0;
  Vec amplitudes;

  cplx at(int j, int k) const { return amplitudes(j * dim + k); }
};

struct SchmidtData {
  std::vector<double> coefficients;  // non-increasing, sum of squares 1
  double entropy_bits = 0.0;
};

struct MaxEntWitness {
  bool maximally_entangled = false;
  double max_deviation = 0.0;  // max |c_i - 1/sqrt(d)|
};

// |Phi> = (1/sqrt d) sum_j |j,j>. Throws std::domain_error for d < 2.
BipartiteState max_entangled_reference(int d);

// |Psi> = (I (x) U)|Phi>: the operator acts on the second factor, so
// amplitude(j,k) = U(k,j)/sqrt(d). Requires Tr(U^dag U) = d.
BipartiteState embed_operator(const Mat& u);

// Inverse of embed_operator; result satisfies Tr(U^dag U) = d.
Mat extract_operator(const BipartiteState& s);

// Coefficient matrix C with C(j,k) = amplitude(j,k).
Mat coefficient_matrix(const BipartiteState& s);

SchmidtData schmidt(const BipartiteState& s);

MaxEntWitness is_maximally_entangled(const BipartiteState& s, double tol = 1e-8);

double entropy_bits_from_coefficients(const std::vector<double>& coeffs);

}  // namespace umeb
