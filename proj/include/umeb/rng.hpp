#pragma once

#include <cstdint>
#include <random>

#include "umeb/types.hpp"

namespace umeb {

// Deterministic random source. Gaussians are produced by an explicit
// Box-Muller transform on mt19937_64 uniforms so that streams do not
// depend on the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {
    // in (0, 1]
    return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  cplx complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  // Uniform on the complex unit sphere in C^n.
  Vec unit_vector(Eigen::Index n) {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = complex_gaussian();
    const double norm = v.norm();
    return norm > 0 ? Vec(v / norm) : unit_vector(n);
  }

  Mat ginibre(Eigen::Index rows, Eigen::Index cols) {
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex_gaussian();
    return m;
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Haar-distributed d x d unitary: QR of a Ginibre matrix with the
// standard phase correction on R's diagonal.
Mat haar_unitary(int d, Rng& rng);

}  // namespace umeb
