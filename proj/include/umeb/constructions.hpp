#pragma once

#include <array>
#include <string>
#include <vector>

#include "umeb/duality.hpp"
#include "umeb/types.hpp"

namespace umeb {

// Ordered list of d x d operators claimed to form a (partial) basis of
// maximally entangled states under the embed_operator map. Each member
// must satisfy Tr(U^dag U) = d; unitarity is the verifier's business.
struct UmebCandidate {
  int dim = 0;
  std::vector<Mat> members;
  std::string label;

  int size() const { return static_cast<int>(members.size()); }
};

struct IcosahedronParams {
  double phi;        // golden ratio
  double norm;       // sqrt(1 + phi^2)
  double cos_theta;  // -7/8
  double sin_theta;  // +sqrt(15)/8
};

IcosahedronParams icosahedron_params();

Mat identity2();
Mat pauli_x();
Mat pauli_y();
Mat pauli_z();

// u^x sx + u^y sy + u^z sz; Hermitian and traceless.
Mat pauli_vector(const Eigen::Vector3d& u);

Mat kron(const Mat& a, const Mat& b);

// The six icosahedron diagonals as unit vectors in C^3 (real entries).
std::array<Eigen::Vector3d, 6> icosahedron_vectors();

// Six pairwise HS-orthogonal symmetric unitaries on C^3 built from
// U_j = I - (1 - e^{i theta}) |psi_j><psi_j| with cos theta = -7/8.
UmebCandidate icosahedron_umeb();

// Twelve pairwise HS-orthogonal unitaries on C^4: five Pauli-product
// operators from the TILES product vectors, then I(x)I, I(x)s_a, s_b(x)I.
UmebCandidate tiles_umeb();

// U4 = conj(beta) sx - conj(alpha) sy; completes {I, sz, a sx + b sy}
// to an orthogonal unitary quadruple. Requires |a|^2 + |b|^2 = 1.
Mat qubit_fourth_member(cplx alpha, cplx beta);

// Given d^2 - 1 orthonormal maximally entangled members, returns the
// unique remaining maximally entangled state (largest amplitude made
// real positive). Throws CertificationError when preconditions fail.
BipartiteState complete_deficit_one(const UmebCandidate& candidate);

// Generalized Bell family X^a Z^b, a full orthonormal maximally
// entangled operator basis; used as an oracle in tests.
UmebCandidate clock_shift_basis(int d);

}  // namespace umeb
