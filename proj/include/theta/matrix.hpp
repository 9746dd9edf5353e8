#pragma once

#include <stdexcept>
#include <vector>

namespace theta {

// Dense matrix over an algebra element type (Poly or Tensor).
template <class T>
struct AlgMatrix {
  int rows = 0, cols = 0;
  std::vector<T> a;

  AlgMatrix() = default;
  AlgMatrix(int r, int c, const T& fill) : rows(r), cols(c), a(r * c, fill) {}

  T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

template <class T>
AlgMatrix<T> mat_mul(const AlgMatrix<T>& A, const AlgMatrix<T>& B, const T& zero) {
  if (A.cols != B.rows) throw std::invalid_argument("matrix shape mismatch");
  AlgMatrix<T> C(A.rows, B.cols, zero);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k)
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += A.at(i, k) * B.at(k, j);
  return C;
}

template <class T>
AlgMatrix<T> mat_adjoint(const AlgMatrix<T>& A, const T& zero) {
  AlgMatrix<T> C(A.cols, A.rows, zero);
  for (int i = 0; i < A.cols; ++i)
    for (int j = 0; j < A.rows; ++j) C.at(i, j) = A.at(j, i).star();
  return C;
}

template <class T>
T mat_trace(const AlgMatrix<T>& A, const T& zero) {
  T s = zero;
  for (int i = 0; i < A.rows && i < A.cols; ++i) s += A.at(i, i);
  return s;
}

} // namespace theta
