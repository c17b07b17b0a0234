#include "umeb/constructions.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace umeb {

IcosahedronParams icosahedron_params() {
  IcosahedronParams p;
  p.phi = (1.0 + std::sqrt(5.0)) / 2.0;
  p.norm = std::sqrt(1.0 + p.phi * p.phi);
  p.cos_theta = -7.0 / 8.0;
  p.sin_theta = std::sqrt(15.0) / 8.0;
  return p;
}

Mat identity2() { return Mat::Identity(2, 2); }

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_y() {
  Mat m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Mat pauli_vector(const Eigen::Vector3d& u) {
  return u.x() * pauli_x() + u.y() * pauli_y() + u.z() * pauli_z();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::array<Eigen::Vector3d, 6> icosahedron_vectors() {
  const auto p = icosahedron_params();
  const double inv = 1.0 / p.norm;
  std::array<Eigen::Vector3d, 6> psis;
  psis[0] = inv * Eigen::Vector3d(1, p.phi, 0);
  psis[1] = inv * Eigen::Vector3d(1, -p.phi, 0);
  psis[2] = inv * Eigen::Vector3d(0, 1, p.phi);
  psis[3] = inv * Eigen::Vector3d(0, 1, -p.phi);
  psis[4] = inv * Eigen::Vector3d(p.phi, 0, 1);
  psis[5] = inv * Eigen::Vector3d(-p.phi, 0, 1);
  return psis;
}

UmebCandidate icosahedron_umeb() {
  const auto p = icosahedron_params();
  const cplx eith(p.cos_theta, p.sin_theta);
  UmebCandidate c;
  c.dim = 3;
  c.label = "icosahedron";
  for (const auto& psi : icosahedron_vectors()) {
    const Vec v = psi.cast<cplx>();
    c.members.push_back(Mat::Identity(3, 3) - (1.0 - eith) * (v * v.adjoint()));
  }
  return c;
}

UmebCandidate tiles_umeb() {
  const Mat sx = pauli_x(), sy = pauli_y(), sz = pauli_z(), id = identity2();
  const double r2 = std::sqrt(2.0);
  UmebCandidate c;
  c.dim = 4;
  c.label = "tiles";
  c.members.push_back(kron(sx, sx - sy) / r2);
  c.members.push_back(kron(sx - sy, sz) / r2);
  c.members.push_back(kron(sz, -sy + sz) / r2);
  c.members.push_back(kron(-sy + sz, sx) / r2);
  c.members.push_back(kron(sx + sy + sz, sx + sy + sz) / 3.0);
  c.members.push_back(kron(id, id));
  c.members.push_back(kron(id, sx));
  c.members.push_back(kron(id, sy));
  c.members.push_back(kron(id, sz));
  c.members.push_back(kron(sx, id));
  c.members.push_back(kron(sy, id));
  c.members.push_back(kron(sz, id));
  return c;
}

Mat qubit_fourth_member(cplx alpha, cplx beta) {
  const double n = std::norm(alpha) + std::norm(beta);
  if (std::abs(n - 1.0) > kStructuralTol) {
    throw std::domain_error("qubit_fourth_member: |alpha|^2 + |beta|^2 != 1");
  }
  return std::conj(beta) * pauli_x() - std::conj(alpha) * pauli_y();
}

BipartiteState complete_deficit_one(const UmebCandidate& candidate) {
  const int d = candidate.dim;
  const int n = candidate.size();
  if (n != d * d - 1) {
    throw std::invalid_argument("complete_deficit_one: need exactly d^2 - 1 members");
  }
  std::vector<BipartiteState> states;
  states.reserve(n);
  for (int a = 0; a < n; ++a) {
    const auto s = embed_operator(candidate.members[a]);
    const auto w = is_maximally_entangled(s, 1e-8);
    if (!w.maximally_entangled) {
      std::ostringstream msg;
      msg << "complete_deficit_one: member " << a
          << " not maximally entangled (deviation " << w.max_deviation << ")";
      throw CertificationError(msg.str());
    }
    states.push_back(s);
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const cplx ov = states[a].amplitudes.dot(states[b].amplitudes);
      if (std::abs(ov) > 1e-8) {
        std::ostringstream msg;
        msg << "complete_deficit_one: members " << a << "," << b
            << " not orthogonal (|overlap| " << std::abs(ov) << ")";
        throw CertificationError(msg.str());
      }
    }
  }

  const int D = d * d;
  Mat residual = Mat::Identity(D, D);
  for (const auto& s : states) residual -= s.amplitudes * s.amplitudes.adjoint();

  Eigen::SelfAdjointEigenSolver<Mat> es(residual);
  const auto& vals = es.eigenvalues();  // ascending
  if (std::abs(vals(D - 1) - 1.0) > 1e-6 || (D >= 2 && std::abs(vals(D - 2)) > 1e-6)) {
    throw CertificationError("complete_deficit_one: residual projector is not rank 1");
  }

  BipartiteState out;
  out.dim = d;
  out.amplitudes = es.eigenvectors().col(D - 1);
  // fix phase: largest-magnitude amplitude real positive
  Eigen::Index imax = 0;
  out.amplitudes.cwiseAbs().maxCoeff(&imax);
  const cplx pivot = out.amplitudes(imax);
  out.amplitudes *= std::conj(pivot) / std::abs(pivot);
  out.amplitudes /= out.amplitudes.norm();

  const auto w = is_maximally_entangled(out, 1e-8);
  if (!w.maximally_entangled) {
    throw CertificationError("complete_deficit_one: completion is not maximally entangled");
  }
  return out;
}

UmebCandidate clock_shift_basis(int d) {
  if (d < 2) throw std::domain_error("clock_shift_basis: d must be >= 2");
  Mat shift = Mat::Zero(d, d);
  for (int j = 0; j < d; ++j) shift((j + 1) % d, j) = 1.0;
  Mat clock = Mat::Zero(d, d);
  const double w = 2.0 * M_PI / d;
  for (int j = 0; j < d; ++j) clock(j, j) = std::polar(1.0, w * j);

  UmebCandidate c;
  c.dim = d;
  c.label = "clock_shift";
  Mat xa = Mat::Identity(d, d);
  for (int a = 0; a < d; ++a) {
    Mat m = xa;
    for (int b = 0; b < d; ++b) {
      c.members.push_back(m);
      m = m * clock;
    }
    xa = shift * xa;
  }
  return c;
}

}  // namespace umeb
