#ifndef UDAT_KERNELS_HPP
#define UDAT_KERNELS_HPP

#include <cstddef>
#include <vector>

namespace udat {

// Row-major dense matrix of doubles. All model math runs in double so the
// finite-difference gradient checks have headroom.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
  double* row(int i) { return a.data() + static_cast<size_t>(i) * cols; }
  const double* row(int i) const { return a.data() + static_cast<size_t>(i) * cols; }
  double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  void zero() { std::fill(a.begin(), a.end(), 0.0); }
  size_t size() const { return a.size(); }
};

using Vec = std::vector<double>;

// Data-parallel kernels. Each output element is owned by exactly one
// iteration, so results are bit-identical for any thread count; the serial
// reference implementations in kernels::ref back the equivalence tests and
// the benchmark.
namespace kernels {

// y += W x
void matvec_acc(const Matrix& W, const double* x, double* y);
// x_grad += W^T dy
void matvec_t_acc(const Matrix& W, const double* dy, double* x_grad);
// dW += dy * x^T
void outer_acc(Matrix& dW, const double* dy, const double* x);

void axpy(size_t n, double alpha, const double* x, double* y);

double dot(size_t n, const double* x, const double* y);

namespace ref {
void matvec_acc(const Matrix& W, const double* x, double* y);
void matvec_t_acc(const Matrix& W, const double* dy, double* x_grad);
void outer_acc(Matrix& dW, const double* dy, const double* x);
}  // namespace ref

}  // namespace kernels
}  // namespace udat

#endif
