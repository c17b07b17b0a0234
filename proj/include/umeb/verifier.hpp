#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "umeb/constructions.hpp"
#include "umeb/opspace.hpp"

namespace umeb {

struct GramReport {
  int dim = 0;
  int n = 0;
  double max_offdiag = 0.0;           // largest |Tr(U_a^dag U_b)|, a != b
  double max_diag_dev = 0.0;          // largest |Tr(U_a^dag U_a) - d|
  double max_unitarity_defect = 0.0;  // largest ||U_a U_a^dag - I||_HS

  bool pass(double tol = 1e-8) const {
    return max_offdiag < tol && max_diag_dev < tol && max_unitarity_defect < tol;
  }
};

enum class StructuralCertificate { none, skew_odd, tiles_form };

inline const char* to_string(StructuralCertificate c) {
  switch (c) {
    case StructuralCertificate::skew_odd: return "skew_odd";
    case StructuralCertificate::tiles_form: return "tiles_form";
    default: return "none";
  }
}

struct UnextendibilityReport {
  int complement_dim = 0;
  double best_value = 0.0;  // max over complement of sqrt(d) * s_min
  BipartiteState best_state;
  double best_entropy_bits = 0.0;
  int restarts = 0;
  int converged_restarts = 0;
  StructuralCertificate structural_certificate = StructuralCertificate::none;
};

struct OptimizerConfig {
  int restarts = 100;
  int max_iters = 400;
  double tol = 1e-10;  // objective-improvement convergence threshold
  std::uint64_t seed = 0;
};

enum class ExecutionPolicy { serial, parallel };

// --- condition (i)-(ii) checks ---

GramReport gram_check(const UmebCandidate& candidate);

// HS complement of the members' span; requires gram_check to pass.
OperatorSubspace complement_of(const UmebCandidate& candidate);

// --- structural unextendibility certificates ---

struct SkewWitness {
  bool holds = false;
  bool odd_dimension = false;
  double max_symmetric_part = 0.0;  // max ||B + B^T|| over complement basis
};

// Proof-grade: odd d plus an entirely skew-symmetric complement means no
// complement operator can be unitary (zero determinant).
SkewWitness skew_certificate(const UmebCandidate& candidate);
SkewWitness skew_certificate(const OperatorSubspace& complement);

// Complement family of the TILES UMEB: U = sum A_ab s_a (x) s_b with
// A = [[a,a,b],[d,g,b],[d,c,c]], g = -2(a+b+c+d).
struct TilesComplementParams {
  cplx a, b, c, d;
  cplx g() const { return -2.0 * (a + b + c + d); }
};

Mat tiles_complement_operator(const TilesComplementParams& p);

struct TilesFormWitness {
  bool holds = false;
  double max_residual = 0.0;  // worst mutual projection residual
};

// True iff the candidate's 4-dim complement equals the span of the
// parametrized family at (a,b,c,d) in {e1..e4}.
TilesFormWitness tiles_form_check(const UmebCandidate& candidate);

// Regression test of the trace identities behind the TILES proof.
struct TilesProbeRecord {
  std::array<cplx, 4> targets;         // (g+a)conj(b), (g+b)conj(c), ...
  std::array<double, 4> aux_residuals; // |probe_m - kappa1 * Im(target_m)|
  double kappa1 = 0.0;
  double norm_residual = 0.0;          // Tr(U^dag U) vs norm identity
  double k_residual = 0.0;             // K-trace vs kappa2 * norm2 difference
  double kappa2 = 0.0;
};

TilesProbeRecord tiles_identity_probe(const TilesComplementParams& p);

// --- numerical unextendibility ---

// Multi-start ascent of sqrt(d) * s_min over unit coefficient vectors of
// the subspace (log-sum-of-singular-values surrogate). Deterministic for
// a given seed regardless of the execution policy.
UnextendibilityReport max_entanglement_in_subspace(
    const OperatorSubspace& sub, const OptimizerConfig& cfg,
    ExecutionPolicy policy = ExecutionPolicy::parallel);

// Same machinery with the entanglement-entropy objective; returns the
// largest entropy (bits) found and the achieving state.
struct EntropySearchResult {
  double best_entropy_bits = 0.0;
  BipartiteState best_state;
};

EntropySearchResult max_entropy_in_subspace(
    const OperatorSubspace& sub, const OptimizerConfig& cfg,
    ExecutionPolicy policy = ExecutionPolicy::parallel);

// --- d = 2 extendability and search ---

// Draws random dressed 3-member maximally entangled sets and checks each
// completes to a 4th maximally entangled state. True iff all trials pass.
bool qubit_extendability_property(int trials, std::uint64_t seed);

struct SearchConfig {
  std::uint64_t seed = 0;
  int max_rounds = 2000;
  double gram_tol = 1e-8;
  OptimizerConfig optimizer;
};

struct SearchResult {
  UmebCandidate candidate;
  UnextendibilityReport report;
  bool phase1_converged = false;
  double gram_residual = 0.0;
  int rounds = 0;
};

// Phase 1: alternating polar-factor updates driving the members' Gram
// matrix to d*I. Phase 2: entanglement maximization over the complement.
// Rejects n = d^2 - 1 (a completion always exists) and n outside [2, d^2-2].
SearchResult search_umeb(int d, int n, const SearchConfig& cfg);

}  // namespace umeb
