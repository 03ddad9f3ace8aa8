#include "fss/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fss {

CMat CMat::identity(int n) {
  CMat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1.0;
  return I;
}

CMat CMat::operator+(const CMat& o) const {
  CMat r(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

CMat CMat::operator-(const CMat& o) const {
  CMat r(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

CMat CMat::operator*(double s) const {
  CMat r(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

CMat CMat::operator*(cplx s) const {
  CMat r(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

cplx CMat::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < std::min(r_, c_); ++i) t += at(i, i);
  return t;
}

namespace {
inline void matmul_row(const CMat& A, const CMat& B, CMat& C, int i) {
  const int n = A.cols(), m = B.cols();
  for (int k = 0; k < n; ++k) {
    const cplx a = A.at(i, k);
    if (a == cplx(0.0)) continue;
    const cplx* brow = &B.at(k, 0);
    cplx* crow = &C.at(i, 0);
    for (int j = 0; j < m; ++j) crow[j] += a * brow[j];
  }
}
}  // namespace

CMat matmul_serial(const CMat& A, const CMat& B) {
  if (A.cols() != B.rows()) throw std::invalid_argument("matmul shape");
  CMat C(A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i) matmul_row(A, B, C, i);
  return C;
}

CMat matmul(const CMat& A, const CMat& B) {
  if (A.cols() != B.rows()) throw std::invalid_argument("matmul shape");
  CMat C(A.rows(), B.cols());
  const int nr = A.rows();
#pragma omp parallel for schedule(static) if (nr > 63)
  for (int i = 0; i < nr; ++i) matmul_row(A, B, C, i);
  return C;
}

CMat kron(const CMat& A, const CMat& B) {
  CMat C(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      const cplx a = A.at(i, j);
      if (a == cplx(0.0)) continue;
      for (int p = 0; p < B.rows(); ++p)
        for (int q = 0; q < B.cols(); ++q)
          C.at(i * B.rows() + p, j * B.cols() + q) = a * B.at(p, q);
    }
  return C;
}

double max_abs(const CMat& A) {
  double m = 0.0;
  for (const cplx& v : A.data()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const CMat& A, const CMat& B) {
  double m = 0.0;
  for (size_t i = 0; i < A.data().size(); ++i)
    m = std::max(m, std::abs(A.data()[i] - B.data()[i]));
  return m;
}

double det_real(std::vector<double> a, int k) {
  double det = 1.0;
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int i = col + 1; i < k; ++i)
      if (std::fabs(a[i * k + col]) > std::fabs(a[piv * k + col])) piv = i;
    if (a[piv * k + col] == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < k; ++j) std::swap(a[piv * k + j], a[col * k + j]);
      det = -det;
    }
    det *= a[col * k + col];
    for (int i = col + 1; i < k; ++i) {
      double f = a[i * k + col] / a[col * k + col];
      for (int j = col; j < k; ++j) a[i * k + j] -= f * a[col * k + j];
    }
  }
  return det;
}

LsqResult least_squares(const std::vector<double>& A0, int rows, int cols,
                        const std::vector<double>& b0) {
  if (rows < cols) throw std::invalid_argument("least_squares: rows < cols");
  std::vector<double> A = A0, b = b0;
  // Householder QR, applied to b as we go.
  for (int col = 0; col < cols; ++col) {
    double norm = 0.0;
    for (int i = col; i < rows; ++i) norm += A[i * cols + col] * A[i * cols + col];
    norm = std::sqrt(norm);
    if (norm == 0.0) throw std::runtime_error("least_squares: rank deficient");
    double alpha = A[col * cols + col] > 0 ? -norm : norm;
    std::vector<double> v(rows, 0.0);
    v[col] = A[col * cols + col] - alpha;
    for (int i = col + 1; i < rows; ++i) v[i] = A[i * cols + col];
    double vtv = 0.0;
    for (int i = col; i < rows; ++i) vtv += v[i] * v[i];
    if (vtv == 0.0) continue;
    for (int j = col; j < cols; ++j) {
      double dot = 0.0;
      for (int i = col; i < rows; ++i) dot += v[i] * A[i * cols + j];
      double f = 2.0 * dot / vtv;
      for (int i = col; i < rows; ++i) A[i * cols + j] -= f * v[i];
    }
    double dot = 0.0;
    for (int i = col; i < rows; ++i) dot += v[i] * b[i];
    double f = 2.0 * dot / vtv;
    for (int i = col; i < rows; ++i) b[i] -= f * v[i];
  }
  // back substitution on the upper-triangular cols x cols block
  LsqResult res;
  res.x.assign(cols, 0.0);
  for (int i = cols - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < cols; ++j) s -= A[i * cols + j] * res.x[j];
    if (A[i * cols + i] == 0.0)
      throw std::runtime_error("least_squares: singular R");
    res.x[i] = s / A[i * cols + i];
  }
  res.residual = 0.0;
  for (int i = 0; i < rows; ++i) {
    double s = -b0[i];
    for (int j = 0; j < cols; ++j) s += A0[i * cols + j] * res.x[j];
    res.residual = std::max(res.residual, std::fabs(s));
  }
  return res;
}

int span_rank(const std::vector<std::vector<cplx>>& vecs, double cutoff) {
  std::vector<std::vector<cplx>> basis;
  for (const auto& v0 : vecs) {
    std::vector<cplx> v = v0;
    double n0 = 0.0;
    for (const cplx& x : v) n0 += std::norm(x);
    n0 = std::sqrt(n0);
    if (n0 == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {  // re-orthogonalize once
      for (const auto& bvec : basis) {
        cplx dot = 0.0;
        for (size_t i = 0; i < v.size(); ++i) dot += std::conj(bvec[i]) * v[i];
        for (size_t i = 0; i < v.size(); ++i) v[i] -= dot * bvec[i];
      }
    }
    double n = 0.0;
    for (const cplx& x : v) n += std::norm(x);
    n = std::sqrt(n);
    if (n > cutoff * std::max(1.0, n0)) {
      for (cplx& x : v) x /= n;
      basis.push_back(std::move(v));
    }
  }
  return static_cast<int>(basis.size());
}

}  // namespace fss
