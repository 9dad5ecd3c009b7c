#pragma once

#include <vector>

#include "blaschke_lab/hypgeo.hpp"
#include "blaschke_lab/matcore.hpp"
#include "blaschke_lab/poly.hpp"

namespace blaschke_lab {

/// KMS-type nilpotent matrix: (j,k) = (-t)^{k-j-1} for k > j. Requires n >= 2, |t| < 1.
CMatrix kms_matrix(int n, double t);

/// t I + (1 - t^2) A_t, the compressed shift of the unicritical symbol with zero t.
CMatrix unicritical_shift(int n, double t);

/// a_{n,1}, ..., a_{n,n-1}; a_{n,1} = cos(pi/(n+1)). Requires n >= 3.
std::vector<double> curve_coeffs(int n);

struct CurveSpec {
  int n = 3;
  double t = 0.0;
  std::vector<double> coeffs;

  CurveSpec(int n, double t);
};

/// sum_k a_{n,k} (-t)^{k-1} e^{iks}
cplx curve_point(const CurveSpec& spec, double s);

/// Average of the points at s = 0 and s = pi: -sum_{k even} a_{n,k} t^{k-1}.
cplx curve_center(const CurveSpec& spec);

/// Boundary point of W(M_t) for n = 3. Negative t uses the direct
/// parameterization; positive t is reflected through W(M_t) = -W(M_{-t}).
cplx crouzeix_boundary3(double t, double s);

/// Closed-form pseudohyperbolic radius of the disk known to sit inside W(M_t)
/// for n in {2, 3, 4}. Throws std::invalid_argument otherwise.
double contained_disk_radius(int n, double t);

/// The Euclidean disk behind contained_disk_radius.
EDisk contained_disk_euclid(int n, double t);

/// Center z0(t) of the degree-2 disk W(S_Theta) = D_rho(z0, r) for zeros {t, t}.
double degree2_center(double t);

struct N4RootCheck {
  CPoly poly;                       // trimmed polynomial in t
  std::vector<cplx> roots;          // nonzero roots
  int zero_multiplicity = 0;        // roots at t = 0 (including numerically tiny ones)
  bool root_in_unit_interval = false;
};

/// Roots of (g1^2 + g2 - cos^2(pi/5) g3)^2 - 4 g2 g1^2, the equation r(t) = cos(pi/5) for n = 4.
N4RootCheck n4_root_check();

struct N5Probe {
  double t = 0.0;
  bool holds = false;
  double min_gap = 0.0;   // min_s |f(s) - c|^2 - R(t)^2/(1-t^2)^2
  double min_s = 0.0;
};

/// Checks |f(s) - c_t|^2 >= R(t)^2/(1-t^2)^2 on 4096 values of s for the n = 5 curve.
N5Probe n5_disk_probe(double t, int samples = 4096);

/// Euclidean radius R(t) of the n = 5 candidate disk.
double n5_radius(double t);

struct SpectralKit {
  int n = 3;
  double t = 0.0;
  CPoly g;
  CMatrix Bt;
  CMatrix Xt;
  double kappa = 0.0;
  double g_residual = 0.0;     // ||g(B_t) - A_t||
  double sim_residual = 0.0;   // ||B_t - X_t J X_t^{-1}||
};

class KitResidualError : public std::runtime_error {
 public:
  KitResidualError(int n, double t, double g_residual, double sim_residual);
  int n;
  double t;
  double g_residual;
  double sim_residual;
};

/// Requires n in {3, 4, 5} and t in [0, 1).
SpectralKit spectral_kit(int n, double t, double residual_tol = 1e-9);

/// Closed form of kappa for n = 3.
double kappa3_closed_form(double t);

struct KappaRow {
  double t = 0.0;
  double kappa = 0.0;
};

struct KappaSweep {
  std::vector<KappaRow> rows;
  std::vector<std::pair<double, double>> crossings;  // brackets where kappa crosses 2
  double max_kappa = 0.0;
  double argmax_t = 0.0;
};

KappaSweep kappa_sweep(int n, const std::vector<double>& ts);

/// Evenly spaced grid lo, lo + step, ..., up to hi inclusive.
std::vector<double> t_grid(double lo, double hi, double step);

}  // namespace blaschke_lab
