#pragma once

#include <vector>

#include "blaschke_lab/blaschke.hpp"
#include "blaschke_lab/hypgeo.hpp"
#include "blaschke_lab/matcore.hpp"

namespace blaschke_lab {

/// Sampled support function of the numerical range W(A).
///
/// For each direction theta, h(theta) is the top eigenvalue of
/// (e^{-i theta} A + e^{i theta} A*)/2 and the witness v* A v (v the top
/// eigenvector) is a boundary point of W(A) with Re(e^{-i theta} p) = h.
struct SupportTable {
  CMatrix matrix;
  std::vector<double> thetas;
  std::vector<double> h;
  std::vector<cplx> witnesses;

  std::size_t size() const { return thetas.size(); }
  /// Table restricted to the even-indexed directions.
  SupportTable every_other() const;
};

struct SupportSample {
  double h = 0.0;
  cplx witness;
};

SupportSample support_value(const CMatrix& a, double theta, const Tolerances& tol = {});

/// Directions theta_k = 2 pi k / m. Requires m >= 64.
SupportTable support_table(const CMatrix& a, int m, const Tolerances& tol = {});

bool contains_point(const SupportTable& t, cplx z, double tol);
bool contains_edisk(const SupportTable& t, const EDisk& d, double tol);

struct ModulusMax {
  double value = 0.0;
  cplx argmax;
  double theta = 0.0;  // direction whose witness attains the max (chords report the left end)
};

/// max |B| over W(A): boundary witnesses, chords between consecutive witnesses,
/// and golden-section refinement in theta around the best local maxima.
ModulusMax max_modulus(const BlaschkeProduct& b, const SupportTable& t, const Tolerances& tol = {});

struct LscConfig {
  int directions = 720;
  double slack = 1e-7;
  double doubling_trigger = 1e-7;
  Tolerances tol{};
};

struct LscVerdict {
  double max_value = 0.0;
  cplx argmax;
  bool passed = false;
  double slack = 0.0;
  int directions = 0;      // directions of the table that produced max_value
  bool doubled = false;    // an adaptive doubling pass ran
  double half_grid_estimate = 0.0;
};

/// max{|B(z)| : z in W(S_Theta)} >= 1/2 - slack; requires deg B < deg Theta.
LscVerdict lsc_check(const BlaschkeProduct& b, const BlaschkeProduct& theta, const LscConfig& cfg = {});

/// Same check on an explicit matrix (no degree precondition).
LscVerdict lsc_check_matrix(const BlaschkeProduct& b, const CMatrix& a, const LscConfig& cfg = {});

struct InscribedConfig {
  int grid = 41;
  double radius_tol = 1e-9;
  double step_tol = 1e-7;
  double contain_tol = 1e-9;
};

struct InscribedDisk {
  double best = 0.0;
  PHDisk center{};
  bool heuristic = true;  // a lower bound for the true inscribed radius
};

/// Largest pseudohyperbolic disk found inside W(A) by grid search over
/// centers, coordinate-descent refinement and bisection on the radius.
InscribedDisk inscribed_ph_radius(const SupportTable& t, const InscribedConfig& cfg = {});

/// Largest r with D_rho(z0, r) inside W(A) at the sampled directions (0 if z0 is outside).
double ph_radius_at(const SupportTable& t, cplx z0, double radius_tol = 1e-9, double contain_tol = 1e-9);

struct EllipseExclusion {
  EDisk disk;                 // Euclidean form of D_rho(z0, 1/2)
  double minor_semi_axis = 0;  // (1 - t^2)/2
  double ratio = 0.0;          // 4 R^2 / (1 - t^2)^2, must be <= 1 for containment
  double ratio_lower_bound = 0.0;  // lower bound for ratio from the case split on |z0|
  bool center_in_range = false;     // z0 lies in the ellipse
  bool wider_than_strip = false;    // D(c, R) strictly contains D(c, minor_semi_axis)
  bool excluded = false;            // z0 outside, or ratio_lower_bound > 1
};

/// For W(S_Theta) with Theta zeros {t, -t} (the ellipse 4x^2/(1+t^2)^2 + 4y^2/(1-t^2)^2 <= 1):
/// whether D_rho(z0, 1/2) fails to fit, by comparing its Euclidean radius with the
/// minor semi-axis and bounding 4R^2/(1-t^2)^2 from below in the two cases |z0| < sqrt(3/4)
/// and |z0| >= sqrt(3/4).
EllipseExclusion ellipse_excludes_half_disk(double t, cplx z0);

}  // namespace blaschke_lab
