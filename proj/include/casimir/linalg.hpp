#pragma once

#include <vector>

namespace casimir {

// Minimal dense row-major matrix, sized for the desk-scale point-cloud
// scattering operators (n <= a few thousand).
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

 private:
  int n_ = 0;
  std::vector<double> a_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
double trace(const Matrix& a);

// log det(I + m) via LU with partial pivoting. Throws ConditioningError if
// the factorization encounters a negligible pivot or a non-positive
// determinant.
double log_det_identity_plus(const Matrix& m);

}  // namespace casimir
