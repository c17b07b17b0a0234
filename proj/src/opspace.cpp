#include "umeb/opspace.hpp"

#include <Eigen/SVD>
#include <algorithm>

namespace umeb {

cplx hs_inner(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("hs_inner: shape mismatch");
  }
  return (a.adjoint() * b).trace();
}

double hs_norm(const Mat& a) { return a.norm(); }

OperatorSubspace gram_schmidt_hs(const std::vector<Mat>& generators) {
  OperatorSubspace out;
  if (generators.empty()) return out;
  const auto rows = generators.front().rows();
  const auto cols = generators.front().cols();
  for (const auto& g : generators) {
    if (g.rows() != rows || g.cols() != cols) {
      throw std::invalid_argument("gram_schmidt_hs: mixed shapes");
    }
  }
  out.dim = static_cast<int>(rows);
  for (const auto& g : generators) {
    Mat v = g;
    // two projection sweeps: classical MGS with re-orthogonalization
    for (int sweep = 0; sweep < 2; ++sweep) {
      for (const auto& b : out.basis) v -= hs_inner(b, v) * b;
    }
    const double norm = v.norm();
    if (norm > kRankDropTol * std::max(1.0, g.norm())) {
      out.basis.push_back(v / norm);
    }
  }
  return out;
}

std::vector<double> singular_values(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  std::vector<double> out(sv.data(), sv.data() + sv.size());
  return out;
}

OperatorSubspace orthogonal_complement(const OperatorSubspace& sub) {
  const int d = sub.dim;
  std::vector<Mat> gens = sub.basis;
  gens.reserve(static_cast<std::size_t>(d) * d + gens.size());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Mat e = Mat::Zero(d, d);
      e(i, j) = 1.0;
      gens.push_back(std::move(e));
    }
  }
  OperatorSubspace full = gram_schmidt_hs(gens);
  OperatorSubspace out;
  out.dim = d;
  out.basis.assign(full.basis.begin() + sub.size(), full.basis.end());
  return out;
}

double gram_residual(const std::vector<Mat>& basis) {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const cplx g = hs_inner(basis[i], basis[j]);
      const double dev = std::abs(g - (i == j ? cplx(1.0) : cplx(0.0)));
      worst = std::max(worst, dev);
    }
  }
  return worst;
}

double projection_residual(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  double worst = 0.0;
  for (const auto& x : a) {
    Mat r = x;
    for (const auto& y : b) r -= hs_inner(y, x) * y;
    worst = std::max(worst, r.norm());
  }
  return worst;
}

}  // namespace umeb
