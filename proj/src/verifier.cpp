#include "umeb/verifier.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>

#include "umeb/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace umeb {

GramReport gram_check(const UmebCandidate& candidate) {
  GramReport rep;
  rep.dim = candidate.dim;
  rep.n = candidate.size();
  const double d = candidate.dim;
  const Mat id = Mat::Identity(candidate.dim, candidate.dim);
  for (int a = 0; a < rep.n; ++a) {
    const Mat& ua = candidate.members[a];
    rep.max_diag_dev = std::max(rep.max_diag_dev, std::abs(ua.squaredNorm() - d));
    rep.max_unitarity_defect =
        std::max(rep.max_unitarity_defect, (ua * ua.adjoint() - id).norm());
    for (int b = a + 1; b < rep.n; ++b) {
      rep.max_offdiag =
          std::max(rep.max_offdiag, std::abs(hs_inner(ua, candidate.members[b])));
    }
  }
  return rep;
}

OperatorSubspace complement_of(const UmebCandidate& candidate) {
  const GramReport rep = gram_check(candidate);
  if (!rep.pass()) {
    std::ostringstream msg;
    msg << "complement_of: Gram check failed (offdiag " << rep.max_offdiag
        << ", diag dev " << rep.max_diag_dev << ", unitarity defect "
        << rep.max_unitarity_defect << ")";
    throw CertificationError(msg.str());
  }
  const double inv = 1.0 / std::sqrt(static_cast<double>(candidate.dim));
  std::vector<Mat> normalized;
  normalized.reserve(candidate.members.size());
  for (const auto& u : candidate.members) normalized.push_back(u * inv);
  return orthogonal_complement(gram_schmidt_hs(normalized));
}

SkewWitness skew_certificate(const OperatorSubspace& complement) {
  SkewWitness w;
  w.odd_dimension = (complement.dim % 2) == 1;
  for (const auto& b : complement.basis) {
    w.max_symmetric_part = std::max(w.max_symmetric_part, (b + b.transpose()).norm());
  }
  w.holds = w.odd_dimension && w.max_symmetric_part < kStructuralTol;
  return w;
}

SkewWitness skew_certificate(const UmebCandidate& candidate) {
  return skew_certificate(complement_of(candidate));
}

// --- TILES complement family ---

Mat tiles_complement_operator(const TilesComplementParams& p) {
  const cplx g = p.g();
  const Mat paulis[3] = {pauli_x(), pauli_y(), pauli_z()};
  const cplx coeff[3][3] = {
      {p.a, p.a, p.b},
      {p.d, g, p.b},
      {p.d, p.c, p.c},
  };
  Mat u = Mat::Zero(4, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) u += coeff[i][j] * kron(paulis[i], paulis[j]);
  return u;
}

TilesFormWitness tiles_form_check(const UmebCandidate& candidate) {
  if (candidate.dim != 4 || candidate.size() != 12) {
    throw std::invalid_argument("tiles_form_check: expects d=4, n=12");
  }
  const OperatorSubspace complement = complement_of(candidate);
  if (complement.size() != 4) {
    std::ostringstream msg;
    msg << "tiles_form_check: complement dimension " << complement.size()
        << ", expected 4";
    throw CertificationError(msg.str());
  }
  std::vector<Mat> family;
  for (int k = 0; k < 4; ++k) {
    TilesComplementParams p{0, 0, 0, 0};
    (k == 0 ? p.a : k == 1 ? p.b : k == 2 ? p.c : p.d) = 1.0;
    family.push_back(tiles_complement_operator(p));
  }
  const OperatorSubspace span = gram_schmidt_hs(family);
  TilesFormWitness w;
  w.max_residual = std::max(projection_residual(span.basis, complement.basis),
                            projection_residual(complement.basis, span.basis));
  w.holds = span.size() == 4 && w.max_residual < 1e-9;
  return w;
}

namespace {

double pauli_trace_probe(const Mat& uud, const Mat& a, const Mat& b) {
  return (uud * kron(a, b)).trace().real();
}

std::array<double, 4> aux_probes(const Mat& uud) {
  const Mat id = identity2(), sx = pauli_x(), sz = pauli_z();
  return {pauli_trace_probe(uud, id, sx), pauli_trace_probe(uud, sx, id),
          -pauli_trace_probe(uud, id, sz), -pauli_trace_probe(uud, sz, id)};
}

std::array<cplx, 4> aux_targets(const TilesComplementParams& p) {
  const cplx g = p.g();
  return {(g + p.a) * std::conj(p.b), (g + p.b) * std::conj(p.c),
          (g + p.c) * std::conj(p.d), (g + p.d) * std::conj(p.a)};
}

// Pauli combination whose UU^dag trace equals 24 (|a+b+c+d|^2 - sum |.|^2)
// on the Eq.(U)/(A) family; unique solution of the corresponding rank-16
// linear system over the 16 Pauli pairs.
Mat norm2_probe_operator() {
  const Mat id = identity2(), sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  return -2.0 * kron(id, id) + 3.0 * kron(sx, sx) - kron(sx, sy) -
         3.0 * kron(sx, sz) + kron(sy, sx) + kron(sy, sz) - 3.0 * kron(sz, sx) -
         kron(sz, sy) + 3.0 * kron(sz, sz);
}

double norm2_difference(const TilesComplementParams& p) {
  const cplx s = p.a + p.b + p.c + p.d;
  return std::norm(s) -
         (std::norm(p.a) + std::norm(p.b) + std::norm(p.c) + std::norm(p.d));
}

}  // namespace

TilesProbeRecord tiles_identity_probe(const TilesComplementParams& p) {
  TilesProbeRecord rec;
  rec.targets = aux_targets(p);

  // one-point constant fit; reference chosen where Im(target_1) != 0
  const TilesComplementParams ref1{1.0, cplx(0, 1), 0.0, 0.0};
  {
    const Mat u = tiles_complement_operator(ref1);
    const auto q = aux_probes(u * u.adjoint());
    rec.kappa1 = q[0] / aux_targets(ref1)[0].imag();
  }
  const Mat u = tiles_complement_operator(p);
  const Mat uud = u * u.adjoint();
  const auto q = aux_probes(uud);
  for (int m = 0; m < 4; ++m) {
    rec.aux_residuals[m] = std::abs(q[m] - rec.kappa1 * rec.targets[m].imag());
  }

  const double sumsq = std::norm(p.a) + std::norm(p.b) + std::norm(p.c) + std::norm(p.d);
  rec.norm_residual =
      std::abs(u.squaredNorm() - 8.0 * (sumsq + std::norm(p.g()) / 2.0));

  const Mat k24 = norm2_probe_operator();
  const TilesComplementParams ref2{1.0, 1.0, 0.0, 0.0};
  {
    const Mat ur = tiles_complement_operator(ref2);
    rec.kappa2 = (ur * ur.adjoint() * k24).trace().real() / norm2_difference(ref2);
  }
  rec.k_residual =
      std::abs((uud * k24).trace().real() - rec.kappa2 * norm2_difference(p));
  return rec;
}

// --- multi-start optimizer ---

namespace {

constexpr double kSigmaFloor = 1e-12;

enum class ObjectiveKind { log_smin, entropy };

double surrogate_value(ObjectiveKind kind, const Eigen::VectorXd& s) {
  double v = 0.0;
  if (kind == ObjectiveKind::log_smin) {
    for (Eigen::Index i = 0; i < s.size(); ++i)
      v += std::log(std::max(s(i), kSigmaFloor));
  } else {
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      const double p = s(i) * s(i);
      if (p > 0) v -= p * std::log2(p);
    }
  }
  return v;
}

Eigen::VectorXd surrogate_weights(ObjectiveKind kind, const Eigen::VectorXd& s) {
  Eigen::VectorXd w(s.size());
  if (kind == ObjectiveKind::log_smin) {
    for (Eigen::Index i = 0; i < s.size(); ++i) w(i) = 1.0 / std::max(s(i), kSigmaFloor);
  } else {
    constexpr double inv_ln2 = 1.4426950408889634;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      const double si = std::max(s(i), kSigmaFloor);
      w(i) = -2.0 * si * inv_ln2 * (2.0 * std::log(si) + 1.0);
    }
  }
  return w;
}

struct AscentResult {
  Vec x;
  Eigen::VectorXd sigma;
  bool converged = false;
};

Mat combine(const std::vector<Mat>& basis, const Vec& x) {
  Mat m = Mat::Zero(basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i) m += x(static_cast<Eigen::Index>(i)) * basis[i];
  return m;
}

AscentResult ascend(const std::vector<Mat>& basis, Vec x, ObjectiveKind kind,
                    int max_iters, double tol) {
  const auto k = static_cast<Eigen::Index>(basis.size());
  Eigen::JacobiSVD<Mat> svd(combine(basis, x),
                            Eigen::ComputeFullU | Eigen::ComputeFullV);
  double f = surrogate_value(kind, svd.singularValues());
  double eta = 0.1;
  AscentResult out;
  for (int iter = 0; iter < max_iters; ++iter) {
    const Eigen::VectorXd w = surrogate_weights(kind, svd.singularValues());
    const Mat grad_m =
        svd.matrixU() * w.asDiagonal() * svd.matrixV().adjoint();
    Vec g(k);
    for (Eigen::Index i = 0; i < k; ++i) g(i) = hs_inner(basis[i], grad_m);
    const Vec g_t = g - x * x.dot(g);
    if (g_t.norm() < 1e-10) {
      out.converged = true;
      break;
    }
    bool accepted = false;
    while (eta > 1e-16) {
      Vec xn = x + eta * g_t;
      xn /= xn.norm();
      Eigen::JacobiSVD<Mat> svd_n(combine(basis, xn),
                                  Eigen::ComputeFullU | Eigen::ComputeFullV);
      const double fn = surrogate_value(kind, svd_n.singularValues());
      if (fn > f) {
        const double gain = fn - f;
        x = std::move(xn);
        svd = std::move(svd_n);
        f = fn;
        eta *= 1.3;
        accepted = true;
        if (gain < tol) out.converged = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) {
      out.converged = true;
      break;
    }
    if (out.converged) break;
  }
  out.x = std::move(x);
  out.sigma = svd.singularValues();
  return out;
}

struct RestartOutcome {
  double metric = -1.0;
  Vec x;
  Eigen::VectorXd sigma;
  bool converged = false;
};

template <typename MetricFn>
std::vector<RestartOutcome> run_restarts(const std::vector<Mat>& basis,
                                         const OptimizerConfig& cfg,
                                         ObjectiveKind kind, MetricFn metric,
                                         ExecutionPolicy policy) {
  Rng rng(cfg.seed);
  std::vector<Vec> starts;
  starts.reserve(cfg.restarts);
  const auto k = static_cast<Eigen::Index>(basis.size());
  for (int r = 0; r < cfg.restarts; ++r) starts.push_back(rng.unit_vector(k));

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  const bool parallel = policy == ExecutionPolicy::parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int r = 0; r < cfg.restarts; ++r) {
    AscentResult res = ascend(basis, starts[r], kind, cfg.max_iters, cfg.tol);
    outcomes[r].metric = metric(res.sigma);
    outcomes[r].x = std::move(res.x);
    outcomes[r].sigma = std::move(res.sigma);
    outcomes[r].converged = res.converged;
  }
  (void)parallel;
  return outcomes;
}

// deterministic reduction: best metric, ties broken by lowest index
const RestartOutcome& pick_best(const std::vector<RestartOutcome>& outcomes) {
  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].metric > outcomes[best].metric) best = r;
  }
  return outcomes[best];
}

}  // namespace

UnextendibilityReport max_entanglement_in_subspace(const OperatorSubspace& sub,
                                                   const OptimizerConfig& cfg,
                                                   ExecutionPolicy policy) {
  if (sub.basis.empty()) {
    throw std::domain_error("max_entanglement_in_subspace: empty subspace");
  }
  const double sqrt_d = std::sqrt(static_cast<double>(sub.dim));
  const auto metric = [sqrt_d](const Eigen::VectorXd& s) {
    return sqrt_d * s(s.size() - 1);
  };
  const auto outcomes =
      run_restarts(sub.basis, cfg, ObjectiveKind::log_smin, metric, policy);

  UnextendibilityReport rep;
  rep.complement_dim = sub.size();
  rep.restarts = cfg.restarts;
  for (const auto& o : outcomes) rep.converged_restarts += o.converged ? 1 : 0;
  const auto& best = pick_best(outcomes);
  rep.best_value = best.metric;
  rep.best_state = embed_operator(sqrt_d * combine(sub.basis, best.x));
  std::vector<double> coeffs(best.sigma.data(), best.sigma.data() + best.sigma.size());
  rep.best_entropy_bits = entropy_bits_from_coefficients(coeffs);
  return rep;
}

EntropySearchResult max_entropy_in_subspace(const OperatorSubspace& sub,
                                            const OptimizerConfig& cfg,
                                            ExecutionPolicy policy) {
  if (sub.basis.empty()) {
    throw std::domain_error("max_entropy_in_subspace: empty subspace");
  }
  const auto metric = [](const Eigen::VectorXd& s) {
    std::vector<double> coeffs(s.data(), s.data() + s.size());
    return entropy_bits_from_coefficients(coeffs);
  };
  const auto outcomes =
      run_restarts(sub.basis, cfg, ObjectiveKind::entropy, metric, policy);
  const auto& best = pick_best(outcomes);
  EntropySearchResult out;
  out.best_entropy_bits = best.metric;
  const double sqrt_d = std::sqrt(static_cast<double>(sub.dim));
  out.best_state = embed_operator(sqrt_d * combine(sub.basis, best.x));
  return out;
}

bool qubit_extendability_property(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::domain_error("qubit_extendability_property: trials >= 1");
  Rng rng(seed);
  const Mat sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  for (int t = 0; t < trials; ++t) {
    const Mat v = haar_unitary(2, rng);
    const Mat w = haar_unitary(2, rng);
    // alpha sx + beta sy is unitary iff (alpha, beta) is a common phase
    // times a real direction
    const double delta = 2.0 * M_PI * rng.uniform();
    const cplx phase = std::polar(1.0, 2.0 * M_PI * rng.uniform());
    const cplx alpha = phase * std::cos(delta);
    const cplx beta = phase * std::sin(delta);

    UmebCandidate cand;
    cand.dim = 2;
    cand.label = "qubit_triple";
    cand.members = {v * w, v * sz * w, v * (alpha * sx + beta * sy) * w};

    BipartiteState completion;
    try {
      completion = complete_deficit_one(cand);
    } catch (const CertificationError&) {
      return false;
    }
    const Mat numeric = extract_operator(completion);
    const Mat analytic = v * qubit_fourth_member(alpha, beta) * w;
    if (std::abs(std::abs(hs_inner(analytic, numeric)) - 2.0) > 1e-8) return false;
  }
  return true;
}

SearchResult search_umeb(int d, int n, const SearchConfig& cfg) {
  if (n < 2 || n > d * d - 1) {
    throw std::domain_error("search_umeb: require 2 <= n <= d^2 - 1");
  }

  Rng rng(cfg.seed);
  SearchResult out;
  const double dd = d;
  constexpr int kAttempts = 12;
  constexpr int kStallWindow = 100;

  std::vector<Mat> members;
  double residual = std::numeric_limits<double>::infinity();
  int total_rounds = 0;
  for (int attempt = 0; attempt < kAttempts && !(residual < cfg.gram_tol); ++attempt) {
    members.clear();
    members.reserve(n);
    for (int a = 0; a < n; ++a) members.push_back(haar_unitary(d, rng));
    double window_residual = std::numeric_limits<double>::infinity();
    for (int round = 0; round < cfg.max_rounds; ++round) {
      for (int a = 0; a < n; ++a) {
        Mat w = members[a];
        for (int b = 0; b < n; ++b) {
          if (b == a) continue;
          w -= (hs_inner(members[b], members[a]) / dd) * members[b];
        }
        if (w.norm() < 1e-8) {
          w = haar_unitary(d, rng);  // degenerate update; re-draw
        }
        Eigen::JacobiSVD<Mat> svd(w, Eigen::ComputeFullU | Eigen::ComputeFullV);
        members[a] = svd.matrixU() * svd.matrixV().adjoint();
      }
      residual = 0.0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          residual = std::max(residual, std::abs(hs_inner(members[a], members[b])));
      ++total_rounds;
      if (residual < cfg.gram_tol) break;
      if ((round + 1) % kStallWindow == 0) {
        // spurious fixed points (e.g. two members collapsing onto each
        // other) stop making progress; abandon the attempt and re-draw
        if (residual > 0.9 * window_residual) break;
        window_residual = residual;
      }
    }
  }

  out.candidate.dim = d;
  out.candidate.members = std::move(members);
  {
    std::ostringstream label;
    label << "search_d" << d << "_n" << n << "_seed" << cfg.seed;
    out.candidate.label = label.str();
  }
  out.gram_residual = residual;
  out.rounds = total_rounds;
  out.phase1_converged = residual < cfg.gram_tol;
  if (out.phase1_converged) {
    const OperatorSubspace complement = complement_of(out.candidate);
    out.report = max_entanglement_in_subspace(complement, cfg.optimizer);
    const SkewWitness skew = skew_certificate(complement);
    if (skew.holds) out.report.structural_certificate = StructuralCertificate::skew_odd;
  }
  return out;
}

}  // namespace umeb
