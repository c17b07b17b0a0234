#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace umeb {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Exactness tolerance for closed-form constructions; residuals above this
// indicate a real defect, not floating-point noise.
inline constexpr double kStructuralTol = 1e-10;

// Rank-drop tolerance for modified Gram-Schmidt.
inline constexpr double kRankDropTol = 1e-8;

// Structural certificates are proofs; optimizer outcomes are evidence only.
enum class CertTag { Proof, Evidence };

inline const char* to_string(CertTag t) {
  return t == CertTag::Proof ? "PROOF" : "EVIDENCE";
}

// Thrown when a precondition that certifies correctness of downstream
// results fails (e.g. Gram check before complement extraction).
class CertificationError : public std::runtime_error {
 public:
  explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace umeb
