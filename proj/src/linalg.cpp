#include "r2g2/linalg.hpp"

#include <cmath>
#include <limits>

namespace r2g2 {

namespace {

std::string len_str(const Vec& v) { return "len " + std::to_string(v.size()); }

[[noreturn]] void dimension_error(const std::string& op, const std::string& lhs,
                                  const std::string& rhs) {
  throw std::invalid_argument(op + ": dimension mismatch, " + lhs + " vs " + rhs);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Vec data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    dimension_error("Matrix", std::to_string(rows_) + "x" + std::to_string(cols_),
                    len_str(data_));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::string Matrix::shape_str() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

CgBreakdownError::CgBreakdownError(double residual, std::size_t k)
    : std::runtime_error("CG breakdown: residual " + std::to_string(residual) +
                         " after " + std::to_string(k) + " iterations"),
      residual_norm(residual),
      iters(k) {}

CgNonConvergenceError::CgNonConvergenceError(double residual, std::size_t k)
    : std::runtime_error("CG non-convergence: residual " + std::to_string(residual) +
                         " after " + std::to_string(k) + " iterations"),
      residual_norm(residual),
      iters(k) {}

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) dimension_error("dot", len_str(a), len_str(b));
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double norm2(const Vec& x) { return std::sqrt(dot(x, x)); }

void axpy(Vec& y, double alpha, const Vec& x) {
  if (y.size() != x.size()) dimension_error("axpy", len_str(y), len_str(x));
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) dimension_error("add", len_str(a), len_str(b));
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) dimension_error("sub", len_str(a), len_str(b));
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scaled(const Vec& x, double alpha) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i];
  return out;
}

bool all_finite(const Vec& x) {
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

Vec matvec(const Matrix& a, const Vec& x) {
  if (a.cols() != x.size()) dimension_error("matvec", a.shape_str(), len_str(x));
  Vec out(a.rows(), 0.0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) sum += a(r, c) * x[c];
    out[r] = sum;
  }
  return out;
}

Vec matvec_transposed(const Matrix& a, const Vec& y) {
  if (a.rows() != y.size()) dimension_error("matvec_transposed", a.shape_str(), len_str(y));
  Vec out(a.cols(), 0.0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const double yr = y[r];
    for (std::size_t c = 0; c < a.cols(); ++c) out[c] += a(r, c) * yr;
  }
  return out;
}

Vec gram_matvec(const Matrix& a, const Vec& y) {
  if (a.rows() != y.size()) dimension_error("gram_matvec", a.shape_str(), len_str(y));
  return matvec(a, matvec_transposed(a, y));
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) dimension_error("matmul", a.shape_str(), b.shape_str());
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double ark = a(r, k);
      if (ark == 0.0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  }
  return out;
}

CgResult conjugate_gradient(const Matrix& a, const Vec& z, const CgConfig& cfg) {
  if (a.rows() != z.size()) {
    dimension_error("conjugate_gradient", a.shape_str(), len_str(z));
  }
  const std::size_t m = a.rows();
  const std::size_t max_iters = cfg.max_iters.value_or(m + 5);
  if (max_iters < 1) throw std::invalid_argument("conjugate_gradient: max_iters must be >= 1");

  Vec x(m, 0.0);
  if (cfg.initial_guess) {
    if (cfg.initial_guess->size() != m) {
      dimension_error("conjugate_gradient initial guess", a.shape_str(),
                      len_str(*cfg.initial_guess));
    }
    x = *cfg.initial_guess;
  }

  const double tol = cfg.residual_tol * std::max(1.0, norm2(z));

  // r = A A' x - z
  Vec r = gram_matvec(a, x);
  axpy(r, -1.0, z);
  Vec p = scaled(r, -1.0);

  double rr = dot(r, r);
  if (std::sqrt(rr) <= tol) {
    return {x, 0, std::sqrt(rr)};
  }

  constexpr double kEps = std::numeric_limits<double>::epsilon();
  for (std::size_t k = 0; k < max_iters; ++k) {
    const Vec q = gram_matvec(a, p);
    const double pq = dot(p, q);
    if (pq <= kEps * dot(p, p)) {
      throw CgBreakdownError(std::sqrt(rr), k);
    }
    const double alpha = rr / pq;
    axpy(x, alpha, p);
    axpy(r, alpha, q);
    const double rr_next = dot(r, r);
    if (std::sqrt(rr_next) <= tol) {
      return {x, k + 1, std::sqrt(rr_next)};
    }
    const double beta = rr_next / rr;
    for (std::size_t i = 0; i < m; ++i) p[i] = -r[i] + beta * p[i];
    rr = rr_next;
  }
  throw CgNonConvergenceError(std::sqrt(rr), max_iters);
}

}  // namespace r2g2
