#include "umeb/rng.hpp"

#include <Eigen/QR>

namespace umeb {

Mat haar_unitary(int d, Rng& rng) {
  const Mat g = rng.ginibre(d, d);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const cplx rjj = r(j, j);
    const double a = std::abs(rjj);
    q.col(j) *= (a > 0 ? rjj / a : cplx(1.0));
  }
  return q;
}

}  // namespace umeb
