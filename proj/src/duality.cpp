#include "umeb/duality.hpp"

#include <cmath>
#include <sstream>

namespace umeb {

BipartiteState max_entangled_reference(int d) {
  if (d < 2) throw std::domain_error("max_entangled_reference: d must be >= 2");
  BipartiteState s;
  s.dim = d;
  s.amplitudes = Vec::Zero(d * d);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) s.amplitudes(j * d + j) = a;
  return s;
}

BipartiteState embed_operator(const Mat& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("embed_operator: not square");
  const int d = static_cast<int>(u.rows());
  const double n2 = u.squaredNorm();
  if (std::abs(n2 - d) > 1e-8) {
    std::ostringstream msg;
    msg << "embed_operator: Tr(U^dag U) = " << n2 << ", expected " << d;
    throw std::invalid_argument(msg.str());
  }
  BipartiteState s;
  s.dim = d;
  s.amplitudes = Vec::Zero(d * d);
  const double inv = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) s.amplitudes(j * d + k) = u(k, j) * inv;
  return s;
}

Mat extract_operator(const BipartiteState& s) {
  const int d = s.dim;
  Mat u(d, d);
  const double scale = std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) u(k, j) = s.amplitudes(j * d + k) * scale;
  return u;
}

Mat coefficient_matrix(const BipartiteState& s) {
  const int d = s.dim;
  Mat c(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) c(j, k) = s.amplitudes(j * d + k);
  return c;
}

double entropy_bits_from_coefficients(const std::vector<double>& coeffs) {
  double h = 0.0;
  for (double c : coeffs) {
    const double p = c * c;
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

SchmidtData schmidt(const BipartiteState& s) {
  SchmidtData out;
  out.coefficients = singular_values(coefficient_matrix(s));
  out.entropy_bits = entropy_bits_from_coefficients(out.coefficients);
  return out;
}

MaxEntWitness is_maximally_entangled(const BipartiteState& s, double tol) {
  const auto data = schmidt(s);
  const double target = 1.0 / std::sqrt(static_cast<double>(s.dim));
  MaxEntWitness w;
  for (double c : data.coefficients) {
    w.max_deviation = std::max(w.max_deviation, std::abs(c - target));
  }
  w.maximally_entangled = w.max_deviation <= tol;
  return w;
}

}  // namespace umeb
