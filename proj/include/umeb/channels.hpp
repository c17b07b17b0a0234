#pragma once

#include <utility>

#include "umeb/verifier.hpp"

namespace umeb {

// Density matrix over C^d (x) C^d (D = d^2). Validated on construction.
struct DensityMatrix {
  int dim = 0;  // D
  Mat entries;
};

DensityMatrix make_density_matrix(const Mat& entries);

// rho_perp = (I - sum |Psi_a><Psi_a|) / (d^2 - n): normalized projector
// onto the candidate's complementary subspace.
DensityMatrix complement_state(const UmebCandidate& candidate);

// Partial traces over the first and second factor; (Tr_B rho, Tr_A rho)
// ordering: first element is the marginal on the FIRST factor.
std::pair<Mat, Mat> marginals(const DensityMatrix& rho);

double von_neumann_entropy_bits(const Mat& rho);

// min{S(rho_1), S(rho_2)} in bits: the regularized entanglement of
// assistance.
double asymptotic_eoa(const DensityMatrix& rho);

struct EoaBound {
  double bits = 0.0;
  CertTag tag = CertTag::Evidence;
};

// Upper bound on the 1-copy EoA of the candidate's complement state.
// Skew 3x3 complements give the exact proof value of 1 bit; otherwise the
// bound is the optimizer's entropy maximum over the complement.
EoaBound one_copy_eoa_upper_bound(const UmebCandidate& candidate,
                                  const OptimizerConfig& cfg);

// Channel reconstructed from a Choi-Jamiolkowski state:
// Lambda(X) = d * Tr_A[(X^T (x) I) rho_cj].
Mat channel_apply(const DensityMatrix& rho_cj, const Mat& x);

struct ChannelReport {
  double trace_preserving_residual = 0.0;  // ||Tr_B rho - I/d||
  double unital_residual = 0.0;            // ||Tr_A rho - I/d||
  int support_dim = 0;
  double support_max_entanglement = 0.0;
  bool mixture_of_unitaries_possible = true;
  CertTag tag = CertTag::Evidence;
};

ChannelReport channel_report(const DensityMatrix& rho_cj, const OptimizerConfig& cfg);

// True iff the state's range is exactly the antisymmetric subspace of
// C^3 (x) C^3. Rejects inputs that are not 9-dimensional.
bool landau_streater_equivalence(const DensityMatrix& rho);
bool landau_streater_equivalence();  // icosahedron default

}  // namespace umeb
