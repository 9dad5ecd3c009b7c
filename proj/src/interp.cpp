#include "blaschke_lab/interp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "blaschke_lab/matcore.hpp"

namespace blaschke_lab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_monic_pair(const BlaschkeProduct& a, const BlaschkeProduct& b, const char* who) {
  if (!a.is_monic() || !b.is_monic())
    throw std::invalid_argument(std::string(who) + ": both Blaschke products must be monic");
  if (a.degree() != b.degree()) throw std::invalid_argument(std::string(who) + ": degrees differ");
}

double im_log_ratio(const BlaschkeProduct& a, const BlaschkeProduct& b, double theta) {
  const cplx e = std::polar(1.0, theta);
  double s = 0.0;
  for (const cplx& z : b.zeros()) s += std::arg(1.0 - std::conj(z) * e);
  for (const cplx& z : a.zeros()) s -= std::arg(1.0 - std::conj(z) * e);
  return s;
}

}  // namespace

CPoly numerator_q(const BlaschkeProduct& a, const BlaschkeProduct& b) {
  require_monic_pair(a, b, "numerator_q");
  return a.numerator() * b.denominator() - b.numerator() * a.denominator();
}

double antiselfinversive_check(const CPoly& q, int n) {
  double worst = 0.0;
  for (int k = 0; k < 64; ++k) {
    const cplx z = std::polar(1.0, kTwoPi * k / 64.0);
    const cplx refl = std::pow(z, 2 * n) * std::conj(q(1.0 / std::conj(z)));
    worst = std::max(worst, std::abs(refl + q(z)));
  }
  return worst;
}

Agreement boundary_agreement(const BlaschkeProduct& a, const BlaschkeProduct& b, int samples) {
  require_monic_pair(a, b, "boundary_agreement");
  Agreement out;
  if (zero_multiset_distance(a.zeros(), b.zeros()) == 0.0) return out;

  // A/B = exp(2i h) on the circle, h continuous with zero mean.
  double prev_t = 0.0;
  double prev_h = im_log_ratio(a, b, 0.0);
  double lo = 0.0, hi = 0.0;
  bool found = prev_h == 0.0;
  for (int k = 1; k <= samples && !found; ++k) {
    const double th = kTwoPi * k / samples;
    const double h = im_log_ratio(a, b, th);
    if (h == 0.0) {
      lo = hi = th;
      found = true;
    } else if ((h > 0.0) != (prev_h > 0.0)) {
      lo = prev_t;
      hi = th;
      found = true;
    }
    prev_t = th;
    prev_h = h;
  }
  if (!found) throw std::logic_error("boundary_agreement: no sign change of the boundary argument");

  double hlo = im_log_ratio(a, b, lo);
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double hm = im_log_ratio(a, b, mid);
    if (hm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((hm > 0.0) == (hlo > 0.0)) {
      lo = mid;
      hlo = hm;
    } else {
      hi = mid;
    }
  }
  out.theta = 0.5 * (lo + hi);
  out.lambda = std::polar(1.0, out.theta);
  out.defect = std::abs(a.eval_unchecked(out.lambda) - b.eval_unchecked(out.lambda));
  return out;
}

double zero_pairing_defect(const CPoly& q, double margin) {
  const auto roots = aberth_roots(q);
  double worst = 0.0;
  for (const cplx& c : roots) {
    if (std::abs(c) >= 1.0 - margin || std::abs(c) < 1e-300) continue;
    const cplx partner = 1.0 / std::conj(c);
    double best = std::numeric_limits<double>::infinity();
    for (const cplx& d : roots) best = std::min(best, std::abs(d - partner));
    worst = std::max(worst, best);
  }
  return worst;
}

DegreeProfile degree_profile(const CPoly& q, double rel) {
  const double cut = rel * q.max_coeff();
  const auto c = q.coeffs();
  DegreeProfile p;
  int hi = static_cast<int>(c.size()) - 1;
  while (hi > 0 && std::abs(c[hi]) <= cut) --hi;
  int lo = 0;
  while (lo < hi && std::abs(c[lo]) <= cut) ++lo;
  p.low = lo;
  p.high = hi;
  return p;
}

const char* to_string(ProbeStatus s) {
  switch (s) {
    case ProbeStatus::recovered:
      return "recovered";
    case ProbeStatus::inconclusive:
      return "inconclusive";
    case ProbeStatus::distinct_candidate:
      return "distinct_candidate";
  }
  return "unknown";
}

double zero_multiset_distance(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
  std::vector<std::size_t> perm(y.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size() && worst < best; ++i) worst = std::max(worst, std::abs(x[i] - y[perm[i]]));
    best = std::min(best, worst);
  } while (best > 0.0 && std::next_permutation(perm.begin(), perm.end()));
  return best;
}

UniquenessProbe uniqueness_probe(int n, std::uint64_t seed, double perturb) {
  if (n < 1 || n > 6) throw std::invalid_argument("uniqueness_probe: degree must be in 1..6");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto in_disk = [&](double rmax) { return std::polar(rmax * std::sqrt(unit(rng)), kTwoPi * unit(rng)); };

  UniquenessProbe out;
  for (int j = 0; j < n; ++j) out.a_zeros.push_back(in_disk(0.85));
  for (int j = 0; j < n; ++j) out.nodes.push_back(in_disk(0.85));
  const BlaschkeProduct a(out.a_zeros);
  std::vector<cplx> target;
  for (const cplx& z : out.nodes) target.push_back(a.eval_unchecked(z));

  std::vector<cplx> b = out.a_zeros;
  for (auto& z : b) {
    z += std::polar(perturb * unit(rng), kTwoPi * unit(rng));
    if (std::abs(z) > 0.95) z *= 0.95 / std::abs(z);
  }

  const std::size_t m = 2 * static_cast<std::size_t>(n);
  auto residual = [&](const std::vector<cplx>& zs) {
    const BlaschkeProduct bp(zs);
    std::vector<double> r(m);
    for (int j = 0; j < n; ++j) {
      const cplx d = bp.eval_unchecked(out.nodes[j]) - target[j];
      r[2 * j] = d.real();
      r[2 * j + 1] = d.imag();
    }
    return r;
  };
  auto norm_inf = [](const std::vector<double>& r) {
    double s = 0.0;
    for (double v : r) s = std::max(s, std::abs(v));
    return s;
  };

  std::vector<double> r = residual(b);
  double rn = norm_inf(r);
  constexpr double h = 1e-7;
  for (out.iterations = 0; out.iterations < 100 && rn > 1e-13; ++out.iterations) {
    CMatrix jac(m);
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<cplx> bp = b;
      bp[k / 2] += (k % 2 == 0) ? cplx(h, 0) : cplx(0, h);
      const auto rp = residual(bp);
      for (std::size_t i = 0; i < m; ++i) jac(i, k) = (rp[i] - r[i]) / h;
    }
    CMatrix rhs(m);
    for (std::size_t i = 0; i < m; ++i) rhs(i, 0) = -r[i];
    CMatrix step;
    try {
      step = solve(jac, rhs);
    } catch (const SingularMatrixError&) {
      break;
    }
    double damp = 1.0;
    bool improved = false;
    for (int ls = 0; ls < 30; ++ls, damp *= 0.5) {
      std::vector<cplx> cand = b;
      bool inside = true;
      for (int j = 0; j < n; ++j) {
        cand[j] += damp * cplx(step(2 * j, 0).real(), step(2 * j + 1, 0).real());
        if (std::abs(cand[j]) >= 0.999) inside = false;
      }
      if (!inside) continue;
      const auto rc = residual(cand);
      const double rcn = norm_inf(rc);
      if (rcn < rn) {
        b = std::move(cand);
        r = rc;
        rn = rcn;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }

  out.b_zeros = b;
  out.residual = rn;
  out.zero_distance = zero_multiset_distance(out.a_zeros, b);
  if (rn <= 1e-10 && out.zero_distance <= 1e-6)
    out.status = ProbeStatus::recovered;
  else if (rn <= 1e-12 && out.zero_distance > 1e-3)
    out.status = ProbeStatus::distinct_candidate;
  else
    out.status = ProbeStatus::inconclusive;
  return out;
}

}  // namespace blaschke_lab
