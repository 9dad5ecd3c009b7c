#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "blaschke_lab/config.hpp"
#include "blaschke_lab/hypgeo.hpp"
#include "blaschke_lab/poly.hpp"

namespace blaschke_lab {

/// Finite Blaschke product lambda * prod (z - a_j)/(1 - conj(a_j) z).
class BlaschkeProduct {
 public:
  BlaschkeProduct(std::vector<cplx> zeros, cplx lambda = 1.0, const Tolerances& tol = {});

  static BlaschkeProduct power(std::size_t n, cplx lambda = 1.0);  // lambda z^n
  static BlaschkeProduct unicritical(cplx z0, std::size_t n, cplx lambda = 1.0);

  std::size_t degree() const { return zeros_.size(); }
  const std::vector<cplx>& zeros() const { return zeros_; }
  cplx lambda() const { return lambda_; }
  bool is_monic(double tol = 1e-12) const { return std::abs(lambda_ - 1.0) <= tol; }

  /// Factor-by-factor evaluation; throws PoleError when z sits on a pole.
  cplx operator()(cplx z) const;
  /// Same, without the pole guard (callers that know z is in the closed disk).
  cplx eval_unchecked(cplx z) const;
  cplx derivative(cplx z) const;

  /// Product with another Blaschke product (zeros concatenated, prefactors multiplied).
  BlaschkeProduct operator*(const BlaschkeProduct& o) const;

  /// p(z) = prod (z - a_j) and q(z) = prod (1 - conj(a_j) z), so B = lambda p / q.
  CPoly numerator() const;
  CPoly denominator() const;

 private:
  std::vector<cplx> zeros_;
  cplx lambda_;
  double pole_tol_;
};

class PoleError : public std::domain_error {
 public:
  PoleError(std::size_t zero_index, cplx z);
  std::size_t zero_index;
  cplx point;
};

struct CriticalPointReport {
  std::vector<cplx> points;            // the n-1 critical points in the disk
  double max_derivative = 0.0;         // max |B'(zeta)|
  double max_pairing_defect = 0.0;     // distance of reflected partners 1/conj(zeta)
};

/// Critical points of B in the disk: roots of the numerator of B' inside |z| < 1.
std::vector<cplx> critical_points(const BlaschkeProduct& b, const Tolerances& tol = {});
CriticalPointReport critical_points_report(const BlaschkeProduct& b, const Tolerances& tol = {});

enum class LevelMethod { exact_count, grid_labeled };

struct CriticalValue {
  cplx point;
  double modulus = 0.0;  // |B(point)|
};

struct LevelSetReport {
  double r = 0.0;
  int component_count = 0;
  std::vector<CriticalValue> critical_inside;
  LevelMethod method = LevelMethod::exact_count;
  bool near_critical_value = false;
};

/// Components of {|B| < r}: degree minus the number of critical points inside.
LevelSetReport level_component_count(const BlaschkeProduct& b, double r, const Tolerances& tol = {});

/// Axis-aligned box containing {|B| < r}, padded and clipped to [-1,1]^2.
struct Box {
  double x0, x1, y0, y1;
};
Box level_bounding_box(const BlaschkeProduct& b, double r, double pad = 0.02);

struct GridLabeling {
  int component_count = 0;
  std::vector<int> zeros_per_component;  // indexed by component label
  int unresolved_zeros = 0;               // zeros whose grid cell was outside the sampled set
  Box box{};
  int resolution = 0;
};

/// 4-connected flood fill of {|B| < r} on a resolution x resolution grid.
GridLabeling level_components_grid(const BlaschkeProduct& b, double r, int resolution = 512);

struct ContainmentProbe {
  bool contained = true;
  std::optional<cplx> witness;  // |B(w)| < r <= |C(w)|
};

/// Grid probe of {|B| < r} subset {|C| < r}. Resolution must be at least 256.
ContainmentProbe level_contains(const BlaschkeProduct& b, const BlaschkeProduct& c, double r,
                                int resolution = 256);

struct SplitRadius {
  double critical_value = 0.0;  // |B(zeta)|
  double tangency_s = 0.0;      // (1 - sqrt(1 - t^2))/t with t the zero separation
};

/// Degree-2 product with distinct zeros: the level at which {|B| < r} splits.
SplitRadius degree2_split_radius(const BlaschkeProduct& b);

struct HoffmanBound {
  double bound = 0.0;
  double radius = 0.0;
};

/// max over |z| = x of the lower bound |z|(delta - |z|)/(1 - delta |z|).
HoffmanBound hoffman_bound(double delta);

/// True iff prod |a_j| >= 2 sqrt(2)/3.
bool zero_product_bound(const BlaschkeProduct& b);

/// max |B| over `samples` equally spaced points of the boundary of a disk.
double max_on_circle(const BlaschkeProduct& b, const EDisk& d, int samples);

/// Zeros of B - C inside |z| < radius, from the winding number of B - C.
int difference_zero_count(const BlaschkeProduct& b, const BlaschkeProduct& c, double radius);

}  // namespace blaschke_lab
