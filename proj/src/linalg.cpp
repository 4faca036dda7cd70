#include "casimir/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/errors.hpp"

namespace casimir {

Matrix multiply(const Matrix& a, const Matrix& b) {
  const int n = a.size();
  if (n != b.size()) throw std::invalid_argument("multiply: size mismatch");
  Matrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return c;
}

double trace(const Matrix& a) {
  double t = 0.0;
  for (int i = 0; i < a.size(); ++i) t += a.at(i, i);
  return t;
}

double log_det_identity_plus(const Matrix& m) {
  const int n = m.size();
  Matrix lu = m;
  for (int i = 0; i < n; ++i) lu.at(i, i) += 1.0;

  double log_det = 0.0;
  double sign = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(lu.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(lu.at(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (!(best > 1e-280)) {
      throw ConditioningError("log_det: scattering operator is numerically singular");
    }
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(lu.at(col, j), lu.at(pivot, j));
      sign = -sign;
    }
    const double d = lu.at(col, col);
    if (d < 0.0) sign = -sign;
    log_det += std::log(std::abs(d));
    const double inv = 1.0 / d;
    for (int r = col + 1; r < n; ++r) {
      const double factor = lu.at(r, col) * inv;
      if (factor == 0.0) continue;
      lu.at(r, col) = factor;
      for (int j = col + 1; j < n; ++j) {
        lu.at(r, j) -= factor * lu.at(col, j);
      }
    }
  }
  if (sign < 0.0) {
    throw ConditioningError("log_det: det(I + G0 X) is not positive");
  }
  return log_det;
}

}  // namespace casimir
