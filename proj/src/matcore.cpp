#include "blaschke_lab/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace blaschke_lab {

CMatrix::CMatrix(std::size_t n) : n_(n), a_(n * n, cplx{0.0, 0.0}) {
  if (n == 0) throw std::invalid_argument("CMatrix: dimension must be positive");
}

CMatrix::CMatrix(std::size_t n, std::vector<cplx> entries) : n_(n), a_(std::move(entries)) {
  if (n == 0) throw std::invalid_argument("CMatrix: dimension must be positive");
  if (a_.size() != n * n) throw std::invalid_argument("CMatrix: entry count is not n*n");
  check_finite();
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : n_(rows.size()) {
  if (n_ == 0) throw std::invalid_argument("CMatrix: dimension must be positive");
  a_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("CMatrix: matrix must be square");
    a_.insert(a_.end(), row.begin(), row.end());
  }
  check_finite();
}

void CMatrix::check_finite() const {
  for (std::size_t k = 0; k < a_.size(); ++k) {
    if (!std::isfinite(a_[k].real()) || !std::isfinite(a_[k].imag())) {
      std::ostringstream os;
      os << "CMatrix: non-finite entry at (" << k / n_ << ", " << k % n_ << ")";
      throw std::invalid_argument(os.str());
    }
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::jordan(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> d) {
  CMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::max(m, std::abs(x));
  return m;
}

double CMatrix::frobenius() const {
  double s = 0.0;
  for (const auto& x : a_) s += std::norm(x);
  return std::sqrt(s);
}

bool CMatrix::is_upper_triangular(double tol) const {
  for (std::size_t i = 1; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs((*this)(i, j)) > tol) return false;
  return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("CMatrix: dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("CMatrix: dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& x : a_) x *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("CMatrix: dimension mismatch");
  CMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

std::vector<cplx> CMatrix::apply(std::span<const cplx> x) const {
  if (x.size() != n_) throw std::invalid_argument("CMatrix::apply: dimension mismatch");
  std::vector<cplx> y(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    cplx s{};
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

NotHermitianError::NotHermitianError(std::size_t r, std::size_t c, double d)
    : std::invalid_argument("herm_eig_max: matrix is not Hermitian at (" + std::to_string(r) +
                            ", " + std::to_string(c) + "), defect " + std::to_string(d)),
      row(r),
      col(c),
      defect(d) {}

SingularMatrixError::SingularMatrixError(std::size_t s, double p)
    : std::runtime_error("solve: singular to tolerance at pivot stage " + std::to_string(s) +
                         " (pivot magnitude " + std::to_string(p) + ")"),
      stage(s),
      pivot(p) {}

namespace {

void check_hermitian(const CMatrix& h, double tol) {
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double d = std::abs(h(i, j) - std::conj(h(j, i)));
      if (d > tol) throw NotHermitianError(i, j, d);
    }
}

double offdiag_frobenius(const CMatrix& h) {
  double s = 0.0;
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

// Cyclic complex Jacobi. On return `h` is diagonal to tolerance and the
// columns of `v` (accumulated on the right) are the eigenvectors.
void jacobi_diagonalize(CMatrix& h, CMatrix& v, double stop) {
  const std::size_t n = h.size();
  constexpr int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (offdiag_frobenius(h) < stop) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx b = h(p, q);
        const double ab = std::abs(b);
        if (ab < 1e-300) continue;
        const double a = h(p, p).real();
        const double d = h(q, q).real();
        const double tau = (d - a) / (2.0 * ab);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx ph = std::conj(b) / ab;  // e^{-i arg b}
        // U = [[c, s], [-s ph, c ph]]
        const cplx u00 = c, u01 = s, u10 = -s * ph, u11 = c * ph;
        for (std::size_t k = 0; k < n; ++k) {
          const cplx hp = h(k, p), hq = h(k, q);
          h(k, p) = hp * u00 + hq * u10;
          h(k, q) = hp * u01 + hq * u11;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx hp = h(p, k), hq = h(q, k);
          h(p, k) = std::conj(u00) * hp + std::conj(u10) * hq;
          h(q, k) = std::conj(u01) * hp + std::conj(u11) * hq;
        }
        h(p, q) = 0.0;
        h(q, p) = 0.0;
        h(p, p) = h(p, p).real();
        h(q, q) = h(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vp = v(k, p), vq = v(k, q);
          v(k, p) = vp * u00 + vq * u10;
          v(k, q) = vp * u01 + vq * u11;
        }
      }
    }
  }
  throw std::runtime_error("herm_eig_max: Jacobi iteration did not converge");
}

EigPair top_pair(const CMatrix& d, const CMatrix& v) {
  const std::size_t n = d.size();
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (d(i, i).real() > d(best, best).real()) best = i;
  EigPair r;
  r.value = d(best, best).real();
  r.vector.resize(n);
  for (std::size_t k = 0; k < n; ++k) r.vector[k] = v(k, best);
  const double nv = vec_norm(r.vector);
  for (auto& x : r.vector) x /= nv;
  return r;
}

}  // namespace

EigPair herm_eig_max(const CMatrix& h, const Tolerances& tol) {
  check_hermitian(h, tol.hermitian);
  CMatrix work = h;
  CMatrix v = CMatrix::identity(h.size());
  jacobi_diagonalize(work, v, tol.jacobi_offdiag * std::max(1.0, h.frobenius()));
  return top_pair(work, v);
}

EigPair herm_eig_max_warm(const CMatrix& h, CMatrix& warm, const Tolerances& tol) {
  check_hermitian(h, tol.hermitian);
  if (warm.size() != h.size()) warm = CMatrix::identity(h.size());
  CMatrix work = warm.adjoint() * h * warm;
  // Re-Hermitize the rotated matrix; the product is Hermitian only up to rounding.
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i) {
    work(i, i) = work(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx m = 0.5 * (work(i, j) + std::conj(work(j, i)));
      work(i, j) = m;
      work(j, i) = std::conj(m);
    }
  }
  CMatrix v = CMatrix::identity(n);
  jacobi_diagonalize(work, v, tol.jacobi_offdiag * std::max(1.0, h.frobenius()));
  warm = warm * v;
  return top_pair(work, warm);
}

double op2norm(const CMatrix& m, const Tolerances& tol) {
  CMatrix g = m.adjoint() * m;
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = g(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) g(j, i) = std::conj(g(i, j));
  }
  return std::sqrt(std::max(0.0, herm_eig_max(g, tol).value));
}

CMatrix solve(const CMatrix& m, const CMatrix& b, const Tolerances& tol) {
  const std::size_t n = m.size();
  if (b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
  CMatrix lu = m;
  CMatrix x = b;
  const double scale = std::max(m.max_abs(), 1e-300);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= tol.pivot * scale) throw SingularMatrixError(k, best);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(lu(k, j), lu(piv, j));
        std::swap(x(k, j), x(piv, j));
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx f = lu(i, k) / lu(k, k);
      if (f == cplx{}) continue;
      lu(i, k) = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      for (std::size_t j = 0; j < n; ++j) x(i, j) -= f * x(k, j);
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = x(kk, j);
      for (std::size_t c = kk + 1; c < n; ++c) s -= lu(kk, c) * x(c, j);
      x(kk, j) = s / lu(kk, kk);
    }
  }
  return x;
}

CMatrix inverse(const CMatrix& m, const Tolerances& tol) {
  return solve(m, CMatrix::identity(m.size()), tol);
}

cplx rayleigh(const CMatrix& a, std::span<const cplx> v) {
  const auto av = a.apply(v);
  cplx s{};
  for (std::size_t i = 0; i < v.size(); ++i) s += std::conj(v[i]) * av[i];
  return s;
}

double vec_norm(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

Tolerances parse_tolerance_overrides(const std::string& spec, Tolerances base) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("tolerance override '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    char* end = nullptr;
    const double x = std::strtod(val.c_str(), &end);
    if (val.empty() || end != val.c_str() + val.size() || !(x > 0.0))
      throw std::invalid_argument("tolerance override '" + item + "' has a bad value");
    if (key == "hermitian") base.hermitian = x;
    else if (key == "jacobi_offdiag") base.jacobi_offdiag = x;
    else if (key == "pivot") base.pivot = x;
    else if (key == "pole") base.pole = x;
    else if (key == "disk_margin") base.disk_margin = x;
    else if (key == "unimodular") base.unimodular = x;
    else if (key == "tangency") base.tangency = x;
    else if (key == "inside_root") base.inside_root = x;
    else if (key == "root_pairing") base.root_pairing = x;
    else if (key == "critical_value") base.critical_value = x;
    else if (key == "lsc_slack") base.lsc_slack = x;
    else if (key == "kit_residual") base.kit_residual = x;
    else throw std::invalid_argument("unknown tolerance key '" + key + "'");
  }
  return base;
}

Tolerances tolerances_from_env() {
  const char* env = std::getenv("BLASCHKE_LAB_TOL");
  if (env == nullptr) return {};
  return parse_tolerance_overrides(env);
}

}  // namespace blaschke_lab
