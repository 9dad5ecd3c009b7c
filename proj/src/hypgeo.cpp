#include "blaschke_lab/hypgeo.hpp"

#include <cmath>
#include <stdexcept>

namespace blaschke_lab {

namespace {

void require_in_disk(cplx z, const char* who) {
  if (!(std::abs(z) < 1.0))
    throw std::invalid_argument(std::string(who) + ": point is not inside the open unit disk");
}

// Smaller root of x + 1/x = k (k >= 2); the roots multiply to 1.
double small_reciprocal_root(double k) {
  const double disc = std::max(0.0, k * k - 4.0);
  return 2.0 / (k + std::sqrt(disc));
}

}  // namespace

const char* to_string(DiskRelation rel) {
  switch (rel) {
    case DiskRelation::disjoint: return "disjoint";
    case DiskRelation::tangent: return "tangent";
    case DiskRelation::two_point_intersection: return "two_point_intersection";
    case DiskRelation::nested: return "nested";
  }
  return "unknown";
}

cplx mobius(cplx a, cplx z) { return (z - a) / (1.0 - std::conj(a) * z); }

double pseudo_dist(cplx z, cplx w) {
  require_in_disk(z, "pseudo_dist");
  require_in_disk(w, "pseudo_dist");
  return std::abs(z - w) / std::abs(1.0 - std::conj(w) * z);
}

EDisk ph_to_euclid(const PHDisk& d) {
  require_in_disk(d.z0, "ph_to_euclid");
  if (!(d.r > 0.0 && d.r < 1.0)) throw std::invalid_argument("ph_to_euclid: radius must lie in (0,1)");
  const double r2 = d.r * d.r;
  const double m2 = std::norm(d.z0);
  const double den = 1.0 - r2 * m2;
  return {(1.0 - r2) * d.z0 / den, d.r * (1.0 - m2) / den};
}

PHDisk euclid_to_ph(const EDisk& d) {
  const double mc = std::abs(d.c);
  if (!(d.R > 0.0) || !(mc + d.R < 1.0))
    throw std::invalid_argument("euclid_to_ph: disk is not strictly inside the unit disk");
  if (mc == 0.0) return {cplx{}, d.R};
  const double m = small_reciprocal_root((mc * mc - d.R * d.R + 1.0) / mc);
  const double r = small_reciprocal_root((d.R * d.R - mc * mc + 1.0) / d.R);
  return {m * d.c / mc, r};
}

PonceletDisk fuss_poncelet4(cplx c) {
  require_in_disk(c, "fuss_poncelet4");
  const double m2 = std::norm(c);
  const EDisk e{c, (1.0 - m2) / std::sqrt(2.0 * (1.0 + m2))};
  const PHDisk p{2.0 * c / (1.0 + m2), std::sqrt(1.0 + m2) / std::sqrt(2.0)};
  return {e, p};
}

ChappleDisk chapple_poncelet3(cplx c) {
  require_in_disk(c, "chapple_poncelet3");
  const double m2 = std::norm(c);
  const double r = (5.0 - m2 - std::sqrt(9.0 - 10.0 * m2 + m2 * m2)) / 4.0;
  return {{c, (1.0 - m2) / 2.0}, r};
}

double chapple_threshold_modulus() {
  const double s2 = std::sqrt(2.0);
  return (-5.0 + 6.0 * s2 - std::sqrt(17.0 - 12.0 * s2)) / (4.0 * std::sqrt(5.0 - 3.0 * s2));
}

double chapple_center_for_ph_center(double target) {
  if (!(target >= 0.0 && target < 1.0))
    throw std::invalid_argument("chapple_center_for_ph_center: modulus must lie in [0,1)");
  if (target == 0.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double got = std::abs(euclid_to_ph({cplx{mid, 0.0}, (1.0 - mid * mid) / 2.0}).z0);
    (got < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

DiskRelation disks_relation(const EDisk& d1, const EDisk& d2, const Tolerances& tol) {
  const double dist2 = std::norm(d1.c - d2.c);
  const double outer = (d1.R + d2.R) * (d1.R + d2.R);
  const double inner = (d1.R - d2.R) * (d1.R - d2.R);
  if (std::abs(dist2 - outer) <= tol.tangency || std::abs(dist2 - inner) <= tol.tangency)
    return DiskRelation::tangent;
  if (dist2 > outer) return DiskRelation::disjoint;
  if (dist2 < inner) return DiskRelation::nested;
  return DiskRelation::two_point_intersection;
}

}  // namespace blaschke_lab
