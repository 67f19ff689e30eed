#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

// Fixed-size dense matrices for the box filter. All shapes are known at
// compile time (7x7 state, 4x7 observation, 4x4 innovation), so this stays
// allocation-free and needs no external linear-algebra dependency.

namespace motkit {

template <std::size_t R, std::size_t C>
struct Mat {
  std::array<double, R * C> a{};

  double& operator()(std::size_t i, std::size_t j) { return a[i * C + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * C + j]; }

  static constexpr std::size_t rows() { return R; }
  static constexpr std::size_t cols() { return C; }

  static Mat identity()
    requires(R == C)
  {
    Mat m;
    for (std::size_t i = 0; i < R; ++i) m(i, i) = 1.0;
    return m;
  }

  Mat<C, R> transposed() const {
    Mat<C, R> t;
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  double trace() const
    requires(R == C)
  {
    double s = 0.0;
    for (std::size_t i = 0; i < R; ++i) s += (*this)(i, i);
    return s;
  }

  Mat& operator+=(const Mat& o) {
    for (std::size_t k = 0; k < R * C; ++k) a[k] += o.a[k];
    return *this;
  }

  friend Mat operator+(Mat x, const Mat& y) { return x += y; }

  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat d;
    for (std::size_t k = 0; k < R * C; ++k) d.a[k] = x.a[k] - y.a[k];
    return d;
  }
};

template <std::size_t R, std::size_t C, std::size_t K>
Mat<R, K> operator*(const Mat<R, C>& x, const Mat<C, K>& y) {
  Mat<R, K> p;
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t c = 0; c < C; ++c) {
      const double xv = x(i, c);
      if (xv == 0.0) continue;
      for (std::size_t j = 0; j < K; ++j) p(i, j) += xv * y(c, j);
    }
  }
  return p;
}

/// Cholesky factor (lower triangular) of a symmetric positive-definite
/// matrix. Throws std::runtime_error when the matrix is not PD.
template <std::size_t N>
Mat<N, N> cholesky(const Mat<N, N>& s) {
  Mat<N, N> l;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = s(i, j);
      for (std::size_t k = 0; k < j; ++k) sum -= l(i, k) * l(j, k);
      if (i == j) {
        if (sum <= 0.0) {
          throw std::runtime_error("cholesky: matrix is not positive definite");
        }
        l(i, i) = std::sqrt(sum);
      } else {
        l(i, j) = sum / l(j, j);
      }
    }
  }
  return l;
}

/// Solve L * L^T * x = b given the Cholesky factor L.
template <std::size_t N>
Mat<N, 1> cholesky_solve(const Mat<N, N>& l, Mat<N, 1> b) {
  for (std::size_t i = 0; i < N; ++i) {
    double sum = b(i, 0);
    for (std::size_t k = 0; k < i; ++k) sum -= l(i, k) * b(k, 0);
    b(i, 0) = sum / l(i, i);
  }
  for (std::size_t ii = N; ii-- > 0;) {
    double sum = b(ii, 0);
    for (std::size_t k = ii + 1; k < N; ++k) sum -= l(k, ii) * b(k, 0);
    b(ii, 0) = sum / l(ii, ii);
  }
  return b;
}

}  // namespace motkit
