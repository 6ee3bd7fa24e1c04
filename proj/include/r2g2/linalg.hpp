#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace r2g2 {

using Vec = std::vector<double>;

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, Vec data);

  static Matrix identity(std::size_t n);

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Vec& data() { return data_; }
  const Vec& data() const { return data_; }

  std::string shape_str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

// -- error types ------------------------------------------------------------

/// Iterative solver stalled: the curvature term vanished while the residual
/// was still above tolerance (right-hand side not in the operator's range).
class CgBreakdownError : public std::runtime_error {
 public:
  CgBreakdownError(double residual_norm, std::size_t iters);
  double residual_norm;
  std::size_t iters;
};

/// Iteration cap reached with the residual still above tolerance.
class CgNonConvergenceError : public std::runtime_error {
 public:
  CgNonConvergenceError(double residual_norm, std::size_t iters);
  double residual_norm;
  std::size_t iters;
};

// -- vector kernels ----------------------------------------------------------

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& x);
void axpy(Vec& y, double alpha, const Vec& x);  // y += alpha * x
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& x, double alpha);
bool all_finite(const Vec& x);

// -- matrix kernels ----------------------------------------------------------

Vec matvec(const Matrix& a, const Vec& x);             // A x
Vec matvec_transposed(const Matrix& a, const Vec& y);  // A' y
/// A (A' y) without materialising the Gram matrix; O(cols) extra storage.
Vec gram_matvec(const Matrix& a, const Vec& y);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

// -- conjugate gradient on the normal equation A A' beta = z ------------------

struct CgConfig {
  std::optional<std::size_t> max_iters;  // default: A.rows() + 5
  double residual_tol = 1e-10;           // relative to max(1, ||z||)
  std::optional<Vec> initial_guess;      // default: zero vector
};

struct CgResult {
  Vec beta;
  std::size_t iters = 0;
  double residual_norm = 0.0;
};

/// Solves A A' beta = z iteratively, touching A only through matrix-vector
/// products. Requires z in the range of A up to floating-point noise; with a
/// zero initial guess the returned beta has no component in ker(A A').
CgResult conjugate_gradient(const Matrix& a, const Vec& z, const CgConfig& cfg = {});

}  // namespace r2g2
