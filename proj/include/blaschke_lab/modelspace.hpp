#pragma once

#include "blaschke_lab/blaschke.hpp"
#include "blaschke_lab/matcore.hpp"
#include "blaschke_lab/poly.hpp"

namespace blaschke_lab {

/// The compressed shift S_Theta as an upper-triangular matrix in the
/// Takenaka-Malmquist-Walsh basis. The diagonal holds the zeros of Theta in
/// storage order; the prefactor of Theta plays no role.
struct CompressedShift {
  BlaschkeProduct theta;
  CMatrix matrix;
};

/// Entry (j,k), j < k: sqrt(1-|a_j|^2) sqrt(1-|a_k|^2) prod_{j<l<k} (-conj(a_l)).
CompressedShift tmw_matrix(const BlaschkeProduct& theta);

/// B(M) = lambda prod (M - a_j I)(I - conj(a_j) M)^{-1}.
CMatrix apply_blaschke(const BlaschkeProduct& b, const CMatrix& m, const Tolerances& tol = {});
inline CMatrix apply_blaschke(const BlaschkeProduct& b, const CompressedShift& s, const Tolerances& tol = {}) {
  return apply_blaschke(b, s.matrix, tol);
}

/// p(M) by Horner's rule.
CMatrix apply_poly(const CPoly& p, const CMatrix& m);

/// ||B(S_Theta)||; requires deg B < deg Theta.
double norm_B_of_S(const BlaschkeProduct& b, const BlaschkeProduct& theta, const Tolerances& tol = {});

}  // namespace blaschke_lab
