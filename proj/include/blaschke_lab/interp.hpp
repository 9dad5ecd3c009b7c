#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blaschke_lab/blaschke.hpp"
#include "blaschke_lab/poly.hpp"

namespace blaschke_lab {

/// Q = p_a q_b - p_b q_a, the numerator of A - B over q_a q_b.
/// Both products must be monic and of equal degree.
CPoly numerator_q(const BlaschkeProduct& a, const BlaschkeProduct& b);

/// max over 64 points z of the unit circle of |z^{2n} conj(Q(1/conj z)) + Q(z)|.
double antiselfinversive_check(const CPoly& q, int n);

struct Agreement {
  cplx lambda{1.0, 0.0};
  double theta = 0.0;
  double defect = 0.0;  // |A(lambda) - B(lambda)|
};

/// A point lambda of the unit circle with A(lambda) = B(lambda), located by a sign
/// change of sum Arg(1 - conj(b_j) e^{i theta}) - sum Arg(1 - conj(a_j) e^{i theta}).
/// Monic inputs of equal degree only.
Agreement boundary_agreement(const BlaschkeProduct& a, const BlaschkeProduct& b, int samples = 2048);

/// Largest distance from a root c of Q inside the disk (|c| < 1 - margin) to the
/// nearest root at 1/conj(c).
double zero_pairing_defect(const CPoly& q, double margin = 1e-6);

struct DegreeProfile {
  int low = 0;   // order of vanishing at 0
  int high = 0;  // effective degree
};

DegreeProfile degree_profile(const CPoly& q, double rel = 1e-12);

enum class ProbeStatus { recovered, inconclusive, distinct_candidate };
const char* to_string(ProbeStatus s);

struct UniquenessProbe {
  ProbeStatus status = ProbeStatus::inconclusive;
  std::vector<cplx> a_zeros;
  std::vector<cplx> b_zeros;
  std::vector<cplx> nodes;
  double residual = 0.0;         // max_j |B(lambda_j) - A(lambda_j)|
  double zero_distance = 0.0;    // multiset distance between the zero sets
  int iterations = 0;
};

/// Fits a monic B of the same degree through A at n random points of the disk,
/// starting from A's zeros moved by up to `perturb`, and reports whether the
/// fit lands back on A.
UniquenessProbe uniqueness_probe(int n, std::uint64_t seed, double perturb = 0.05);

/// Bottleneck distance between two equal-size zero lists (best matching).
double zero_multiset_distance(const std::vector<cplx>& x, const std::vector<cplx>& y);

}  // namespace blaschke_lab
