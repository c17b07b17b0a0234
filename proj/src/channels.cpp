#include "umeb/channels.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace umeb {

namespace {

constexpr double kSupportThreshold = 1e-10;

int bipartite_side(int big_dim) {
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(big_dim))));
  if (d * d != big_dim) {
    throw std::domain_error("channels: density matrix dimension is not a perfect square");
  }
  return d;
}

}  // namespace

DensityMatrix make_density_matrix(const Mat& entries) {
  if (entries.rows() != entries.cols()) {
    throw CertificationError("make_density_matrix: not square");
  }
  if ((entries - entries.adjoint()).norm() > 1e-12) {
    throw CertificationError("make_density_matrix: not Hermitian");
  }
  if (std::abs(entries.trace() - cplx(1.0)) > 1e-12) {
    throw CertificationError("make_density_matrix: trace != 1");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(entries, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw CertificationError("make_density_matrix: negative eigenvalue");
  }
  DensityMatrix rho;
  rho.dim = static_cast<int>(entries.rows());
  rho.entries = entries;
  return rho;
}

DensityMatrix complement_state(const UmebCandidate& candidate) {
  const GramReport rep = gram_check(candidate);
  if (!rep.pass()) {
    throw CertificationError("complement_state: Gram check failed");
  }
  const int d = candidate.dim;
  const int n = candidate.size();
  if (n == d * d) {
    throw std::domain_error("complement_state: full basis, complement is the zero operator");
  }
  const int D = d * d;
  Mat proj = Mat::Identity(D, D);
  for (const auto& u : candidate.members) {
    const BipartiteState s = embed_operator(u);
    proj -= s.amplitudes * s.amplitudes.adjoint();
  }
  return make_density_matrix(proj / static_cast<double>(D - n));
}

std::pair<Mat, Mat> marginals(const DensityMatrix& rho) {
  const int d = bipartite_side(rho.dim);
  Mat first = Mat::Zero(d, d);   // Tr_B
  Mat second = Mat::Zero(d, d);  // Tr_A
  for (int j = 0; j < d; ++j) {
    for (int jp = 0; jp < d; ++jp) {
      for (int k = 0; k < d; ++k) {
        first(j, jp) += rho.entries(j * d + k, jp * d + k);
        second(j, jp) += rho.entries(k * d + j, k * d + jp);
      }
    }
  }
  return {first, second};
}

double von_neumann_entropy_bits(const Mat& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()(i);
    if (p > 1e-15) h -= p * std::log2(p);
  }
  return h;
}

double asymptotic_eoa(const DensityMatrix& rho) {
  const auto [first, second] = marginals(rho);
  return std::min(von_neumann_entropy_bits(first), von_neumann_entropy_bits(second));
}

EoaBound one_copy_eoa_upper_bound(const UmebCandidate& candidate,
                                  const OptimizerConfig& cfg) {
  const OperatorSubspace complement = complement_of(candidate);
  EoaBound bound;
  if (complement.basis.empty()) {
    bound.bits = 0.0;
    bound.tag = CertTag::Proof;
    return bound;
  }
  const SkewWitness skew = skew_certificate(complement);
  if (skew.holds && candidate.dim == 3) {
    // every nonzero 3x3 skew matrix has singular values (s, s, 0):
    // Schmidt rank 2 with equal weights, exactly 1 bit
    bound.bits = 1.0;
    bound.tag = CertTag::Proof;
    return bound;
  }
  bound.bits = max_entropy_in_subspace(complement, cfg).best_entropy_bits;
  bound.tag = CertTag::Evidence;
  return bound;
}

Mat channel_apply(const DensityMatrix& rho_cj, const Mat& x) {
  const int d = bipartite_side(rho_cj.dim);
  if (x.rows() != d || x.cols() != d) {
    throw std::domain_error("channel_apply: operator dimension mismatch");
  }
  const Mat m = kron(x.transpose(), Mat::Identity(d, d)) * rho_cj.entries;
  Mat out = Mat::Zero(d, d);
  for (int k = 0; k < d; ++k)
    for (int kp = 0; kp < d; ++kp)
      for (int j = 0; j < d; ++j) out(k, kp) += m(j * d + k, j * d + kp);
  return static_cast<double>(d) * out;
}

ChannelReport channel_report(const DensityMatrix& rho_cj, const OptimizerConfig& cfg) {
  const int d = bipartite_side(rho_cj.dim);
  const Mat maximally_mixed = Mat::Identity(d, d) / static_cast<double>(d);
  const auto [first, second] = marginals(rho_cj);

  ChannelReport rep;
  rep.trace_preserving_residual = (first - maximally_mixed).norm();
  rep.unital_residual = (second - maximally_mixed).norm();

  Eigen::SelfAdjointEigenSolver<Mat> es(rho_cj.entries);
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  OperatorSubspace support;
  support.dim = d;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) > kSupportThreshold) {
      BipartiteState s;
      s.dim = d;
      s.amplitudes = es.eigenvectors().col(i);
      support.basis.push_back(extract_operator(s) * inv_sqrt_d);
    }
  }
  rep.support_dim = support.size();
  if (support.basis.empty()) {
    throw CertificationError("channel_report: empty support");
  }
  rep.support_max_entanglement = max_entanglement_in_subspace(support, cfg).best_value;
  rep.mixture_of_unitaries_possible = rep.support_max_entanglement >= 1.0 - 1e-6;
  rep.tag = skew_certificate(support).holds ? CertTag::Proof : CertTag::Evidence;
  return rep;
}

bool landau_streater_equivalence(const DensityMatrix& rho) {
  if (rho.dim != 9) {
    throw std::domain_error("landau_streater_equivalence: defined for two qutrits only");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.entries);
  std::vector<Vec> support;
  for (Eigen::Index i = 0; i < 9; ++i) {
    if (es.eigenvalues()(i) > kSupportThreshold) support.push_back(es.eigenvectors().col(i));
  }
  std::vector<Vec> antisym;
  for (int j = 0; j < 3; ++j) {
    for (int k = j + 1; k < 3; ++k) {
      Vec v = Vec::Zero(9);
      v(j * 3 + k) = 1.0 / std::sqrt(2.0);
      v(k * 3 + j) = -1.0 / std::sqrt(2.0);
      antisym.push_back(v);
    }
  }
  if (support.size() != antisym.size()) return false;
  double worst = 0.0;
  for (const auto& v : support) {
    Vec r = v;
    for (const auto& w : antisym) r -= w.dot(v) * w;
    worst = std::max(worst, r.norm());
  }
  for (const auto& w : antisym) {
    Vec r = w;
    for (const auto& v : support) r -= v.dot(w) * v;
    worst = std::max(worst, r.norm());
  }
  return worst < 1e-9;
}

bool landau_streater_equivalence() {
  return landau_streater_equivalence(complement_state(icosahedron_umeb()));
}

}  // namespace umeb
