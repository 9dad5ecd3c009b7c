#pragma once

#include "blaschke_lab/config.hpp"

namespace blaschke_lab {

/// Pseudohyperbolic disk {z : |(z - z0)/(1 - conj(z0) z)| < r}.
struct PHDisk {
  cplx z0;
  double r = 0.0;
};

/// Euclidean disk |z - c| < R.
struct EDisk {
  cplx c;
  double R = 0.0;
};

enum class DiskRelation { disjoint, tangent, two_point_intersection, nested };

const char* to_string(DiskRelation rel);

/// Disk automorphism z -> (z - a)/(1 - conj(a) z).
cplx mobius(cplx a, cplx z);

/// Pseudohyperbolic distance |z - w| / |1 - conj(w) z|. Both points must lie in the open disk.
double pseudo_dist(cplx z, cplx w);

EDisk ph_to_euclid(const PHDisk& d);

/// Inverse of ph_to_euclid. Requires |c| + R < 1.
PHDisk euclid_to_ph(const EDisk& d);

struct PonceletDisk {
  EDisk euclid;
  PHDisk ph;
};

/// The Poncelet 4-circle centered at c (Fuss), in both coordinate systems.
PonceletDisk fuss_poncelet4(cplx c);

struct ChappleDisk {
  EDisk euclid;
  double ph_radius = 0.0;
};

/// The Poncelet 3-circle |z - c| = (1 - |c|^2)/2 (Chapple-Euler) and its
/// pseudohyperbolic radius (5 - |c|^2 - sqrt(9 - 10|c|^2 + |c|^4))/4.
ChappleDisk chapple_poncelet3(cplx c);

/// Pseudohyperbolic-center modulus beyond which a Chapple circle has
/// pseudohyperbolic radius at least 1/sqrt(2):
/// (-5 + 6 sqrt2 - sqrt(17 - 12 sqrt2)) / (4 sqrt(5 - 3 sqrt2)).
double chapple_threshold_modulus();

/// Euclidean center modulus |c| whose Chapple circle has pseudohyperbolic
/// center of modulus `ph_center_modulus` (bisection; the map is increasing).
double chapple_center_for_ph_center(double ph_center_modulus);

DiskRelation disks_relation(const EDisk& d1, const EDisk& d2, const Tolerances& tol = {});

}  // namespace blaschke_lab
