#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "blaschke_lab/config.hpp"

namespace blaschke_lab {

/// Dense square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t n);
  CMatrix(std::size_t n, std::vector<cplx> entries);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix jordan(std::size_t n);  // ones on the superdiagonal
  static CMatrix diagonal(std::span<const cplx> d);

  std::size_t size() const { return n_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  std::span<const cplx> data() const { return a_; }

  CMatrix adjoint() const;
  double max_abs() const;        // max-entry norm
  double frobenius() const;
  bool is_upper_triangular(double tol = 0.0) const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  std::vector<cplx> apply(std::span<const cplx> x) const;

 private:
  void check_finite() const;

  std::size_t n_ = 0;
  std::vector<cplx> a_;
};

/// Raised by herm_eig_max when |H(i,j) - conj(H(j,i))| exceeds tolerance.
class NotHermitianError : public std::invalid_argument {
 public:
  NotHermitianError(std::size_t row, std::size_t col, double defect);
  std::size_t row;
  std::size_t col;
  double defect;
};

/// Raised by solve when elimination meets a pivot below threshold.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(std::size_t stage, double pivot);
  std::size_t stage;
  double pivot;
};

struct EigPair {
  double value = 0.0;
  std::vector<cplx> vector;
};

/// Largest eigenvalue and a unit eigenvector of a Hermitian matrix (cyclic Jacobi).
EigPair herm_eig_max(const CMatrix& h, const Tolerances& tol = {});

/// Same, but the Jacobi sweeps start from the basis `warm` (columns of a
/// unitary matrix, e.g. the eigenvectors of a nearby matrix). `warm` is
/// updated in place with the new eigenbasis.
EigPair herm_eig_max_warm(const CMatrix& h, CMatrix& warm, const Tolerances& tol = {});

/// Spectral norm, sqrt(lambda_max(M* M)).
double op2norm(const CMatrix& m, const Tolerances& tol = {});

/// Solves M X = B by partial-pivot LU.
CMatrix solve(const CMatrix& m, const CMatrix& b, const Tolerances& tol = {});

CMatrix inverse(const CMatrix& m, const Tolerances& tol = {});

/// Quadratic form conj(v)^T A v.
cplx rayleigh(const CMatrix& a, std::span<const cplx> v);

double vec_norm(std::span<const cplx> v);

}  // namespace blaschke_lab
