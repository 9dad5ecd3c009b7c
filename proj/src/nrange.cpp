#include "blaschke_lab/nrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "blaschke_lab/modelspace.hpp"

namespace blaschke_lab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

CMatrix directional_hermitian(const CMatrix& a, double theta) {
  const std::size_t n = a.size();
  const cplx e = std::polar(1.0, -theta);
  CMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = (e * a(i, i)).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (e * a(i, j) + std::conj(e * a(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

double boundary_modulus(const BlaschkeProduct& b, const CMatrix& a, double theta, cplx* at, const Tolerances& tol) {
  const SupportSample s = support_value(a, theta, tol);
  if (at) *at = s.witness;
  return std::abs(b.eval_unchecked(s.witness));
}

}  // namespace

SupportTable SupportTable::every_other() const {
  SupportTable out;
  out.matrix = matrix;
  for (std::size_t k = 0; k < thetas.size(); k += 2) {
    out.thetas.push_back(thetas[k]);
    out.h.push_back(h[k]);
    out.witnesses.push_back(witnesses[k]);
  }
  return out;
}

SupportSample support_value(const CMatrix& a, double theta, const Tolerances& tol) {
  const EigPair ep = herm_eig_max(directional_hermitian(a, theta), tol);
  return {ep.value, rayleigh(a, ep.vector)};
}

SupportTable support_table(const CMatrix& a, int m, const Tolerances& tol) {
  if (m < 64) throw std::invalid_argument("support_table: at least 64 directions are required");
  SupportTable t;
  t.matrix = a;
  t.thetas.resize(m);
  t.h.resize(m);
  t.witnesses.resize(m);
  // Consecutive directions differ little, so each solve starts from the previous eigenbasis.
  CMatrix basis = CMatrix::identity(a.size());
  for (int k = 0; k < m; ++k) {
    const double th = kTwoPi * k / m;
    const EigPair ep = herm_eig_max_warm(directional_hermitian(a, th), basis, tol);
    t.thetas[k] = th;
    t.h[k] = ep.value;
    t.witnesses[k] = rayleigh(a, ep.vector);
  }
  return t;
}

bool contains_point(const SupportTable& t, cplx z, double tol) {
  for (std::size_t k = 0; k < t.size(); ++k)
    if ((std::polar(1.0, -t.thetas[k]) * z).real() > t.h[k] + tol) return false;
  return true;
}

bool contains_edisk(const SupportTable& t, const EDisk& d, double tol) {
  for (std::size_t k = 0; k < t.size(); ++k)
    if ((std::polar(1.0, -t.thetas[k]) * d.c).real() + d.R > t.h[k] + tol) return false;
  return true;
}

ModulusMax max_modulus(const BlaschkeProduct& b, const SupportTable& t, const Tolerances& tol) {
  const std::size_t m = t.size();
  if (m == 0) throw std::invalid_argument("max_modulus: empty support table");
  std::vector<double> f(m);
  ModulusMax best;
  for (std::size_t k = 0; k < m; ++k) {
    f[k] = std::abs(b.eval_unchecked(t.witnesses[k]));
    if (f[k] > best.value) best = {f[k], t.witnesses[k], t.thetas[k]};
  }

  // Chords between consecutive witnesses lie in W(A) by convexity; they matter
  // where the boundary has a flat edge and the witnesses jump.
  constexpr double chord_step = 1e-3;
  for (std::size_t k = 0; k < m; ++k) {
    const cplx p = t.witnesses[k];
    const cplx q = t.witnesses[(k + 1) % m];
    const double gap = std::abs(q - p);
    if (gap <= chord_step) continue;
    const int pieces = static_cast<int>(std::ceil(gap / chord_step));
    for (int s = 1; s < pieces; ++s) {
      const cplx z = p + (q - p) * (static_cast<double>(s) / pieces);
      const double v = std::abs(b.eval_unchecked(z));
      if (v > best.value) best = {v, z, t.thetas[k]};
    }
  }

  // Golden-section refinement around the three largest local maxima.
  std::vector<std::size_t> peaks;
  for (std::size_t k = 0; k < m; ++k) {
    const double prev = f[(k + m - 1) % m], next = f[(k + 1) % m];
    if (f[k] >= prev && f[k] >= next) peaks.push_back(k);
  }
  std::sort(peaks.begin(), peaks.end(), [&](std::size_t x, std::size_t y) { return f[x] > f[y]; });
  if (peaks.size() > 3) peaks.resize(3);

  const double step = kTwoPi / static_cast<double>(m);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  for (const std::size_t k : peaks) {
    double lo = t.thetas[k] - step, hi = t.thetas[k] + step;
    cplx z1, z2;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = boundary_modulus(b, t.matrix, x1, &z1, tol);
    double f2 = boundary_modulus(b, t.matrix, x2, &z2, tol);
    while (hi - lo > 1e-10) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        z1 = z2;
        x2 = lo + gr * (hi - lo);
        f2 = boundary_modulus(b, t.matrix, x2, &z2, tol);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        z2 = z1;
        x1 = hi - gr * (hi - lo);
        f1 = boundary_modulus(b, t.matrix, x1, &z1, tol);
      }
    }
    if (f1 > best.value) best = {f1, z1, std::fmod(x1 + kTwoPi, kTwoPi)};
    if (f2 > best.value) best = {f2, z2, std::fmod(x2 + kTwoPi, kTwoPi)};
  }
  return best;
}

LscVerdict lsc_check_matrix(const BlaschkeProduct& b, const CMatrix& a, const LscConfig& cfg) {
  LscVerdict v;
  v.slack = cfg.slack;
  SupportTable table = support_table(a, cfg.directions, cfg.tol);
  ModulusMax full = max_modulus(b, table, cfg.tol);
  const ModulusMax half = max_modulus(b, table.every_other(), cfg.tol);
  v.half_grid_estimate = half.value;
  v.directions = cfg.directions;
  if (std::abs(full.value - half.value) > cfg.doubling_trigger) {
    table = support_table(a, 2 * cfg.directions, cfg.tol);
    const ModulusMax dbl = max_modulus(b, table, cfg.tol);
    v.doubled = true;
    v.directions = 2 * cfg.directions;
    if (dbl.value > full.value) full = dbl;
  }
  v.max_value = full.value;
  v.argmax = full.argmax;
  v.passed = v.max_value >= 0.5 - cfg.slack;
  return v;
}

LscVerdict lsc_check(const BlaschkeProduct& b, const BlaschkeProduct& theta, const LscConfig& cfg) {
  if (b.degree() >= theta.degree()) throw std::invalid_argument("lsc_check: requires deg B < deg Theta");
  return lsc_check_matrix(b, tmw_matrix(theta).matrix, cfg);
}

double ph_radius_at(const SupportTable& t, cplx z0, double radius_tol, double contain_tol) {
  if (!(std::abs(z0) < 1.0) || !contains_point(t, z0, contain_tol)) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > radius_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= 0.0 || mid >= 1.0) break;
    (contains_edisk(t, ph_to_euclid({z0, mid}), contain_tol) ? lo : hi) = mid;
  }
  return lo;
}

InscribedDisk inscribed_ph_radius(const SupportTable& t, const InscribedConfig& cfg) {
  // Candidate centers span the bounding box of the sampled boundary.
  double x0 = 1.0, x1 = -1.0, y0 = 1.0, y1 = -1.0;
  for (const cplx& w : t.witnesses) {
    x0 = std::min(x0, w.real());
    x1 = std::max(x1, w.real());
    y0 = std::min(y0, w.imag());
    y1 = std::max(y1, w.imag());
  }
  InscribedDisk out;
  const int g = std::max(2, cfg.grid);
  for (int j = 0; j < g; ++j)
    for (int i = 0; i < g; ++i) {
      const cplx z{x0 + (x1 - x0) * i / (g - 1), y0 + (y1 - y0) * j / (g - 1)};
      const double r = ph_radius_at(t, z, cfg.radius_tol, cfg.contain_tol);
      if (r > out.best) out = {r, {z, r}, true};
    }

  double step = std::max((x1 - x0), (y1 - y0)) / (g - 1);
  cplx center = out.center.z0;
  double best = out.best;
  const cplx dirs[8] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  while (step > cfg.step_tol) {
    bool moved = false;
    for (const cplx& d : dirs) {
      const cplx cand = center + step * d;
      const double r = ph_radius_at(t, cand, cfg.radius_tol, cfg.contain_tol);
      if (r > best) {
        best = r;
        center = cand;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  out.best = best;
  out.center = {center, best};
  return out;
}

EllipseExclusion ellipse_excludes_half_disk(double t, cplx z0) {
  EllipseExclusion out;
  out.disk = ph_to_euclid({z0, 0.5});
  out.minor_semi_axis = (1.0 - t * t) / 2.0;
  const double w = 1.0 - t * t;
  out.ratio = 4.0 * out.disk.R * out.disk.R / (w * w);
  const double m2 = std::norm(z0);
  if (m2 < 0.75) {
    out.ratio_lower_bound = (0.25 * 0.25) / (w * w);
  } else {
    const double top = 1.0 - 0.25 * (1.0 + t * t) * (1.0 + t * t);
    out.ratio_lower_bound = (16.0 / 13.0) * (16.0 / 13.0) * top * top / (w * w);
  }
  const double big = 1.0 + t * t;
  out.center_in_range = 4.0 * z0.real() * z0.real() / (big * big) + 4.0 * z0.imag() * z0.imag() / (w * w) <= 1.0;
  // c +- iR must stay in the strip |y| <= (1 - t^2)/2.
  const EDisk minor{out.disk.c, out.minor_semi_axis};
  out.wider_than_strip =
      out.disk.R > out.minor_semi_axis && disks_relation(out.disk, minor) == DiskRelation::nested;
  out.excluded = !out.center_in_range || out.ratio_lower_bound > 1.0;
  return out;
}

}  // namespace blaschke_lab
