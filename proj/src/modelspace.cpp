#include "blaschke_lab/modelspace.hpp"

#include <cmath>
#include <stdexcept>

namespace blaschke_lab {

CompressedShift tmw_matrix(const BlaschkeProduct& theta) {
  const auto& a = theta.zeros();
  const std::size_t n = a.size();
  CMatrix m(n);
  std::vector<double> defect(n);
  for (std::size_t j = 0; j < n; ++j) defect[j] = std::sqrt(1.0 - std::norm(a[j]));
  for (std::size_t j = 0; j < n; ++j) {
    m(j, j) = a[j];
    cplx chain = 1.0;
    for (std::size_t k = j + 1; k < n; ++k) {
      m(j, k) = defect[j] * defect[k] * chain;
      chain *= -std::conj(a[k]);
    }
  }
  return {theta, std::move(m)};
}

CMatrix apply_blaschke(const BlaschkeProduct& b, const CMatrix& m, const Tolerances& tol) {
  const std::size_t n = m.size();
  const CMatrix id = CMatrix::identity(n);
  CMatrix out = id * b.lambda();
  for (const cplx& a : b.zeros()) {
    const CMatrix num = m - a * id;
    const CMatrix den = id - std::conj(a) * m;
    // (M - aI)(I - conj(a) M)^{-1}; the two factors commute, so solve on the left.
    out = out * solve(den, num, tol);
  }
  return out;
}

CMatrix apply_poly(const CPoly& p, const CMatrix& m) {
  const std::size_t n = m.size();
  const auto c = p.coeffs();
  CMatrix acc = CMatrix::identity(n) * c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * m + CMatrix::identity(n) * c[k];
  return acc;
}

double norm_B_of_S(const BlaschkeProduct& b, const BlaschkeProduct& theta, const Tolerances& tol) {
  if (b.degree() >= theta.degree())
    throw std::invalid_argument("norm_B_of_S: requires deg B < deg Theta");
  return op2norm(apply_blaschke(b, tmw_matrix(theta), tol), tol);
}

}  // namespace blaschke_lab
