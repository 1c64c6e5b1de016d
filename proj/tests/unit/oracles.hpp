#pragma once

// Test-only oracles: straightforward, slow reference computations the tests
// compare the production kernels against.

#include <unsupported/Eigen/MatrixFunctions>

#include <complex>

// |<e1| exp(-i t H) |e1>|^2 by dense matrix exponential.
inline double survival_expm(const Eigen::MatrixXd& h, double t) {
  const Eigen::MatrixXcd m =
      h.cast<std::complex<double>>() * std::complex<double>(0.0, -t);
  return std::norm(Eigen::MatrixXcd(m.exp())(0, 0));
}

inline double survival_expm(const Eigen::MatrixXcd& h, double t) {
  const Eigen::MatrixXcd m = h * std::complex<double>(0.0, -t);
  return std::norm(Eigen::MatrixXcd(m.exp())(0, 0));
}
