#include "blaschke_lab/unicrit.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "blaschke_lab/modelspace.hpp"

namespace blaschke_lab {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);
const double kSqrt10 = std::sqrt(10.0);

void require_t(double t, const char* who) {
  if (!(std::abs(t) < 1.0)) throw std::invalid_argument(std::string(who) + ": requires |t| < 1");
}

// Upper-triangular Toeplitz matrix with the given superdiagonals (d[0] = first superdiagonal).
CMatrix upper_toeplitz(std::size_t n, const std::vector<double>& d) {
  CMatrix m(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n && k - j - 1 < d.size(); ++k) m(j, k) = d[k - j - 1];
  return m;
}

CMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return m;
}

CPoly real_poly(std::vector<double> c) {
  std::vector<cplx> z(c.begin(), c.end());
  return CPoly(std::move(z));
}

double radius3_closed(double t) {
  const double t2 = t * t, t4 = t2 * t2, t6 = t4 * t2, t8 = t4 * t4;
  return (24.0 * kSqrt2 - t2 * kSqrt2 + t4 * kSqrt2 -
          std::sqrt(128.0 - 96.0 * t2 + 98.0 * t4 - 4.0 * t6 + 2.0 * t8)) /
         32.0;
}

// The n = 4 radius pieces as polynomials in t.
CPoly g1_poly() {
  return real_poly({25 * kSqrt2 + 55 * kSqrt10, 0, 75 * kSqrt2 - 23 * kSqrt10, 0, -20 * kSqrt2 + 8 * kSqrt10});
}
CPoly g2_poly() {
  return 100.0 * real_poly({75 - 25 * kSqrt5, 0, -178 + 78 * kSqrt5, 0, 233.4 - 105 * kSqrt5, 0,
                            -96.8 + 42.4 * kSqrt5, 0, 14.4 - 6.4 * kSqrt5});
}
CPoly g3_poly() { return 1600.0 * real_poly({15 + 5 * kSqrt5, 0, 4 * kSqrt5}); }

double radius4_closed(double t) {
  const cplx x = t;
  return (g1_poly()(x).real() - std::sqrt(g2_poly()(x).real())) / std::sqrt(g3_poly()(x).real());
}

double radius2_closed(double t) {
  const double t2 = t * t;
  return 0.25 * (5.0 - t2 - std::sqrt((1.0 - t2) * (9.0 - t2)));
}

}  // namespace

CMatrix kms_matrix(int n, double t) {
  if (n < 2) throw std::invalid_argument("kms_matrix: requires n >= 2");
  require_t(t, "kms_matrix");
  CMatrix a(n);
  for (int j = 0; j < n; ++j) {
    double v = 1.0;
    for (int k = j + 1; k < n; ++k) {
      a(j, k) = v;
      v *= -t;
    }
  }
  return a;
}

CMatrix unicritical_shift(int n, double t) {
  return CMatrix::identity(n) * cplx(t) + kms_matrix(n, t) * cplx(1.0 - t * t);
}

std::vector<double> curve_coeffs(int n) {
  if (n < 3) throw std::invalid_argument("curve_coeffs: requires n >= 3");
  const double w = kPi / (n + 1);
  const double norm = 1.0 / ((n + 1) * std::sin(w));
  std::vector<double> a(n - 1);
  a[0] = std::cos(w);
  for (int k = 2; k <= n - 1; ++k)
    a[k - 1] = norm * ((n - k) * std::cos(k * w) * std::sin(w) + std::sin((n - k) * w));
  return a;
}

CurveSpec::CurveSpec(int n_, double t_) : n(n_), t(t_), coeffs(curve_coeffs(n_)) { require_t(t_, "CurveSpec"); }

cplx curve_point(const CurveSpec& spec, double s) {
  cplx z{};
  double pw = 1.0;
  for (std::size_t k = 1; k <= spec.coeffs.size(); ++k) {
    z += spec.coeffs[k - 1] * pw * std::polar(1.0, static_cast<double>(k) * s);
    pw *= -spec.t;
  }
  return z;
}

cplx curve_center(const CurveSpec& spec) {
  double c = 0.0;
  for (std::size_t k = 2; k <= spec.coeffs.size(); k += 2) c -= spec.coeffs[k - 1] * std::pow(spec.t, k - 1);
  return c;
}

cplx crouzeix_boundary3(double t, double s) {
  require_t(t, "crouzeix_boundary3");
  if (t > 0.0) return -crouzeix_boundary3(-t, s);
  const double q = 2.0 + t * t;
  const double k = -3.0 * kSqrt3 * t / (q * std::sqrt(q));
  const double u = k * std::cos(s);
  const double ang = (kPi + std::asin(u)) / 3.0;
  const double m = -(2.0 / kSqrt3) * std::sin(ang);
  const double dm = -(2.0 / kSqrt3) * std::cos(ang) / 3.0 * (-k * std::sin(s)) / std::sqrt(1.0 - u * u);
  const double a = (1.0 - t * t) / 2.0 * std::sqrt(q);
  return {t + a * (-std::cos(s) * m + std::sin(s) * dm), a * (-std::sin(s) * m - std::cos(s) * dm)};
}

EDisk contained_disk_euclid(int n, double t) {
  require_t(t, "contained_disk_euclid");
  const double w = 1.0 - t * t;
  switch (n) {
    case 2:
      return {t, w / 2.0};
    case 3:
      return {t - w * t / 4.0, w / kSqrt2};
    case 4:
      return {t - w * t / kSqrt5, w * std::sqrt((3.0 + kSqrt5) / 8.0 + t * t / (2.0 * kSqrt5))};
    default:
      throw std::invalid_argument("contained_disk_euclid: n must be 2, 3 or 4");
  }
}

double contained_disk_radius(int n, double t) {
  if (t < 0.0 || t >= 1.0) throw std::invalid_argument("contained_disk_radius: requires t in [0, 1)");
  double closed = 0.0;
  switch (n) {
    case 2:
      closed = radius2_closed(t);
      break;
    case 3:
      closed = radius3_closed(t);
      break;
    case 4:
      closed = radius4_closed(t);
      break;
    default:
      throw std::invalid_argument("contained_disk_radius: n must be 2, 3 or 4");
  }
  const double direct = euclid_to_ph(contained_disk_euclid(n, t)).r;
  return std::abs(closed - direct) > 1e-6 ? direct : closed;
}

double degree2_center(double t) {
  if (t == 0.0) return 0.0;
  const double t2 = t * t;
  return (3.0 + 6.0 * t2 - t2 * t2 - (1.0 - t2) * std::sqrt((1.0 - t2) * (9.0 - t2))) / (8.0 * t);
}

N4RootCheck n4_root_check() {
  const CPoly g1 = g1_poly(), g2 = g2_poly(), g3 = g3_poly();
  const double c = std::cos(kPi / 5.0);
  const CPoly inner = g1 * g1 + g2 - (c * c) * g3;
  const CPoly full = inner * inner - 4.0 * (g2 * g1 * g1);

  // The top and bottom coefficients cancel analytically; what survives there is rounding.
  constexpr double rel = 1e-12;
  const double cut = rel * full.max_coeff();
  std::vector<cplx> cs(full.coeffs().begin(), full.coeffs().end());
  for (auto& x : cs)
    if (std::abs(x) <= cut) x = 0.0;
  N4RootCheck out;
  out.poly = CPoly(cs).trimmed(0.0);

  AberthOptions opt;
  opt.trim_rel = rel;
  opt.init_radius = 2.0;
  for (const cplx& r : aberth_roots(out.poly, opt)) {
    if (std::abs(r) < 1e-6) {
      ++out.zero_multiplicity;
      continue;
    }
    out.roots.push_back(r);
    if (std::abs(r.imag()) < 1e-9 && r.real() > 0.0 && r.real() < 1.0) out.root_in_unit_interval = true;
  }
  return out;
}

double n5_radius(double t) {
  const double t2 = t * t, t4 = t2 * t2, t6 = t4 * t2;
  return (7.0 * kSqrt3 - std::sqrt((1.0 + 5.0 * t2 + t4) * (3.0 + 10.0 * t2 + 7.0 * t4 + t6))) / 12.0;
}

N5Probe n5_disk_probe(double t, int samples) {
  if (t < 0.0 || t >= 1.0) throw std::invalid_argument("n5_disk_probe: requires t in [0, 1)");
  const CurveSpec spec(5, t);
  const cplx c = curve_center(spec);
  const double w = 1.0 - t * t;
  const double rhs = n5_radius(t) * n5_radius(t) / (w * w);
  N5Probe out;
  out.t = t;
  out.min_gap = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const double s = 2.0 * kPi * k / samples;
    const double gap = std::norm(curve_point(spec, s) - c) - rhs;
    if (gap < out.min_gap) {
      out.min_gap = gap;
      out.min_s = s;
    }
  }
  out.holds = out.min_gap >= 0.0;
  return out;
}

KitResidualError::KitResidualError(int n_, double t_, double g_res, double sim_res)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "spectral_kit: invariant residual too large for n=" << n_ << ", t=" << t_ << " (g: " << g_res
           << ", similarity: " << sim_res << ")";
        return os.str();
      }()),
      n(n_),
      t(t_),
      g_residual(g_res),
      sim_residual(sim_res) {}

SpectralKit spectral_kit(int n, double t, double residual_tol) {
  if (t < 0.0 || t >= 1.0) throw std::invalid_argument("spectral_kit: requires t in [0, 1)");
  SpectralKit kit;
  kit.n = n;
  kit.t = t;
  const double t2 = t * t, t3 = t2 * t;
  switch (n) {
    case 3:
      kit.g = real_poly({0, 1.0 / kSqrt2, -t / 4.0});
      kit.Bt = upper_toeplitz(3, {kSqrt2, -t / kSqrt2});
      kit.Xt = from_rows({{1, 0, 0}, {0, 1.0 / kSqrt2, t / 4.0}, {0, 0, 0.5}});
      break;
    case 4:
      kit.g = real_poly({0, (1.0 + kSqrt5) / 4.0, -t / kSqrt5, t2 / 4.0 * (1.0 - 1.0 / kSqrt5)});
      kit.Bt = upper_toeplitz(4, {-1.0 + kSqrt5, (9.0 - 21.0 / kSqrt5) * t, (-537.0 + 241.0 * kSqrt5) * t2 / 5.0});
      kit.Xt = from_rows({{1, 0, 0, 0},
                          {0, (1.0 + kSqrt5) / 4.0, -(3.0 / 40.0) * (-5.0 + kSqrt5) * t, -t2 / (8.0 * kSqrt5)},
                          {0, 0, (3.0 + kSqrt5) / 8.0, 3.0 * t / (4.0 * kSqrt5)},
                          {0, 0, 0, (2.0 + kSqrt5) / 8.0}});
      break;
    case 5:
      kit.g = real_poly({0, kSqrt3 / 2.0, -7.0 * t / 12.0, t2 * kSqrt3 / 6.0, -t3 / 12.0});
      kit.Bt = upper_toeplitz(5, {2.0 / kSqrt3, -4.0 * t / (9.0 * kSqrt3), 34.0 * t2 / (81.0 * kSqrt3),
                                  -278.0 * t3 / (729.0 * kSqrt3)});
      kit.Xt = from_rows({{1, 0, 0, 0, 0},
                          {0, kSqrt3 / 2.0, t / 6.0, -t2 / (8.0 * kSqrt3), t3 / 144.0},
                          {0, 0, 0.75, t / (2.0 * kSqrt3), -7.0 * t2 / 72.0},
                          {0, 0, 0, 3.0 * kSqrt3 / 8.0, 3.0 * t / 8.0},
                          {0, 0, 0, 0, 9.0 / 16.0}});
      break;
    default:
      throw std::invalid_argument("spectral_kit: n must be 3, 4 or 5");
  }
  const CMatrix xinv = inverse(kit.Xt);
  kit.g_residual = op2norm(apply_poly(kit.g, kit.Bt) - kms_matrix(n, t));
  kit.sim_residual = op2norm(kit.Bt - kit.Xt * CMatrix::jordan(n) * xinv);
  if (kit.g_residual > residual_tol || kit.sim_residual > residual_tol)
    throw KitResidualError(n, t, kit.g_residual, kit.sim_residual);
  kit.kappa = op2norm(kit.Xt) * op2norm(xinv);
  return kit;
}

double kappa3_closed_form(double t) {
  const double t2 = t * t;
  return 0.5 * std::sqrt(12.0 + t2 + std::sqrt(16.0 + 24.0 * t2 + t2 * t2));
}

KappaSweep kappa_sweep(int n, const std::vector<double>& ts) {
  KappaSweep out;
  out.max_kappa = -std::numeric_limits<double>::infinity();
  for (const double t : ts) {
    const double k = spectral_kit(n, t).kappa;
    if (!out.rows.empty()) {
      const KappaRow& prev = out.rows.back();
      if ((prev.kappa < 2.0) != (k < 2.0)) out.crossings.emplace_back(prev.t, t);
    }
    out.rows.push_back({t, k});
    if (k > out.max_kappa) {
      out.max_kappa = k;
      out.argmax_t = t;
    }
  }
  return out;
}

std::vector<double> t_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || hi < lo) throw std::invalid_argument("t_grid: requires step > 0 and lo <= hi");
  std::vector<double> ts;
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long k = 0; k <= count; ++k) ts.push_back(lo + static_cast<double>(k) * step);
  if (hi - ts.back() > 1e-12) ts.push_back(hi);
  return ts;
}

}  // namespace blaschke_lab
