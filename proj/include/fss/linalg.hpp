#pragma once

#include <complex>
#include <vector>

namespace fss {

using cplx = std::complex<double>;

// Dense row-major complex matrix, sized for tensor-space verification runs.
class CMat {
 public:
  CMat() = default;
  CMat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}
  static CMat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  cplx& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const cplx& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }
  const std::vector<cplx>& data() const { return a_; }
  std::vector<cplx>& data() { return a_; }

  CMat operator+(const CMat& o) const;
  CMat operator-(const CMat& o) const;
  CMat operator*(double s) const;
  CMat operator*(cplx s) const;
  cplx trace() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<cplx> a_;
};

// OpenMP-parallel product, and the serial reference kept for testing.
CMat matmul(const CMat& A, const CMat& B);
CMat matmul_serial(const CMat& A, const CMat& B);

CMat kron(const CMat& A, const CMat& B);

double max_abs(const CMat& A);
double max_abs_diff(const CMat& A, const CMat& B);

// Determinant of a small dense real matrix (LU with partial pivoting).
double det_real(std::vector<double> a, int k);

struct LsqResult {
  std::vector<double> x;
  double residual;  // max-norm of A*x - b
};

// Least squares by Householder QR; rows >= cols required.
LsqResult least_squares(const std::vector<double>& A, int rows, int cols,
                        const std::vector<double>& b);

// Dimension of the span of a family of complex vectors, Gram-based with
// the given singular-value cutoff.
int span_rank(const std::vector<std::vector<cplx>>& vecs, double cutoff);

}  // namespace fss
