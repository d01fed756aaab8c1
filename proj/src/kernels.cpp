#include "udat/kernels.hpp"

namespace udat::kernels {

// Below this many multiply-adds the OpenMP fork/join overhead dominates.
static constexpr long kParallelCutoff = 16384;

void matvec_acc(const Matrix& W, const double* x, double* y) {
  const long work = static_cast<long>(W.rows) * W.cols;
#pragma omp parallel for schedule(static) if (work >= kParallelCutoff)
  for (int i = 0; i < W.rows; ++i) {
    const double* wrow = W.row(i);
    double acc = 0.0;
    for (int j = 0; j < W.cols; ++j) acc += wrow[j] * x[j];
    y[i] += acc;
  }
}

void matvec_t_acc(const Matrix& W, const double* dy, double* x_grad) {
  const long work = static_cast<long>(W.rows) * W.cols;
#pragma omp parallel for schedule(static) if (work >= kParallelCutoff)
  for (int j = 0; j < W.cols; ++j) {
    double acc = 0.0;
    for (int i = 0; i < W.rows; ++i) acc += W.at(i, j) * dy[i];
    x_grad[j] += acc;
  }
}

void outer_acc(Matrix& dW, const double* dy, const double* x) {
  const long work = static_cast<long>(dW.rows) * dW.cols;
#pragma omp parallel for schedule(static) if (work >= kParallelCutoff)
  for (int i = 0; i < dW.rows; ++i) {
    double* drow = dW.row(i);
    const double d = dy[i];
    for (int j = 0; j < dW.cols; ++j) drow[j] += d * x[j];
  }
}

void axpy(size_t n, double alpha, const double* x, double* y) {
  for (size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double dot(size_t n, const double* x, const double* y) {
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

namespace ref {

void matvec_acc(const Matrix& W, const double* x, double* y) {
  for (int i = 0; i < W.rows; ++i) {
    const double* wrow = W.row(i);
    double acc = 0.0;
    for (int j = 0; j < W.cols; ++j) acc += wrow[j] * x[j];
    y[i] += acc;
  }
}

void matvec_t_acc(const Matrix& W, const double* dy, double* x_grad) {
  for (int j = 0; j < W.cols; ++j) {
    double acc = 0.0;
    for (int i = 0; i < W.rows; ++i) acc += W.at(i, j) * dy[i];
    x_grad[j] += acc;
  }
}

void outer_acc(Matrix& dW, const double* dy, const double* x) {
  for (int i = 0; i < dW.rows; ++i) {
    double* drow = dW.row(i);
    for (int j = 0; j < dW.cols; ++j) drow[j] += dy[i] * x[j];
  }
}

}  // namespace ref
}  // namespace udat::kernels
