#include "blaschke_lab/blaschke.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace blaschke_lab {

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, cplx lambda, const Tolerances& tol)
    : zeros_(std::move(zeros)), lambda_(lambda), pole_tol_(tol.pole) {
  if (zeros_.empty()) throw std::invalid_argument("BlaschkeProduct: degree must be at least 1");
  if (std::abs(std::abs(lambda_) - 1.0) > tol.unimodular)
    throw std::invalid_argument("BlaschkeProduct: prefactor is not unimodular");
  for (std::size_t j = 0; j < zeros_.size(); ++j) {
    const cplx a = zeros_[j];
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !(std::abs(a) < 1.0 - tol.disk_margin)) {
      std::ostringstream os;
      os << "BlaschkeProduct: zero " << j << " = " << a << " is not inside the unit disk";
      throw std::invalid_argument(os.str());
    }
  }
}

BlaschkeProduct BlaschkeProduct::power(std::size_t n, cplx lambda) {
  return BlaschkeProduct(std::vector<cplx>(n, cplx{}), lambda);
}

BlaschkeProduct BlaschkeProduct::unicritical(cplx z0, std::size_t n, cplx lambda) {
  return BlaschkeProduct(std::vector<cplx>(n, z0), lambda);
}

PoleError::PoleError(std::size_t idx, cplx z)
    : std::domain_error("BlaschkeProduct: evaluation point is a pole of factor " + std::to_string(idx)),
      zero_index(idx),
      point(z) {}

cplx BlaschkeProduct::operator()(cplx z) const {
  cplx v = lambda_;
  for (std::size_t j = 0; j < zeros_.size(); ++j) {
    const cplx den = 1.0 - std::conj(zeros_[j]) * z;
    if (std::abs(den) < pole_tol_) throw PoleError(j, z);
    v *= (z - zeros_[j]) / den;
  }
  return v;
}

cplx BlaschkeProduct::eval_unchecked(cplx z) const {
  cplx v = lambda_;
  for (const cplx& a : zeros_) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

cplx BlaschkeProduct::derivative(cplx z) const {
  // Product rule over the factors; O(n^2) but safe at the zeros.
  const std::size_t n = zeros_.size();
  std::vector<cplx> f(n), df(n);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx a = zeros_[j];
    const cplx den = 1.0 - std::conj(a) * z;
    if (std::abs(den) < pole_tol_) throw PoleError(j, z);
    f[j] = (z - a) / den;
    df[j] = (1.0 - std::norm(a)) / (den * den);
  }
  cplx s{};
  for (std::size_t j = 0; j < n; ++j) {
    cplx term = df[j];
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) term *= f[k];
    s += term;
  }
  return lambda_ * s;
}

BlaschkeProduct BlaschkeProduct::operator*(const BlaschkeProduct& o) const {
  std::vector<cplx> z = zeros_;
  z.insert(z.end(), o.zeros_.begin(), o.zeros_.end());
  cplx lam = lambda_ * o.lambda_;
  lam /= std::abs(lam);
  return BlaschkeProduct(std::move(z), lam);
}

CPoly BlaschkeProduct::numerator() const { return CPoly::from_roots(zeros_); }

CPoly BlaschkeProduct::denominator() const {
  // prod (1 - conj(a) z) = prod(-conj(a)) * prod (z - 1/conj(a)); build factor by factor
  // instead so zeros at the origin stay exact.
  std::vector<cplx> sorted = zeros_;
  std::stable_sort(sorted.begin(), sorted.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
  CPoly q = CPoly::constant(1.0);
  for (const cplx& a : sorted) q = q * CPoly({cplx{1.0, 0.0}, -std::conj(a)});
  return q;
}

CriticalPointReport critical_points_report(const BlaschkeProduct& b, const Tolerances& tol) {
  const std::size_t n = b.degree();
  if (n < 2) throw std::invalid_argument("critical_points: degree must be at least 2");
  const CPoly p = b.numerator();
  const CPoly q = b.denominator();
  const CPoly num = p.derivative() * q - p * q.derivative();
  const auto roots = aberth_roots(num);

  CriticalPointReport rep;
  for (const cplx& z : roots)
    if (std::abs(z) < 1.0 - tol.inside_root) rep.points.push_back(z);
  if (rep.points.size() != n - 1) {
    std::ostringstream os;
    os << "critical_points: found " << rep.points.size() << " roots inside the disk, expected " << n - 1;
    throw std::runtime_error(os.str());
  }
  std::sort(rep.points.begin(), rep.points.end(), [](cplx a, cplx c) {
    return std::abs(a) != std::abs(c) ? std::abs(a) < std::abs(c) : std::arg(a) < std::arg(c);
  });
  for (const cplx& z : rep.points) {
    rep.max_derivative = std::max(rep.max_derivative, std::abs(b.derivative(z)));
    if (std::abs(z) > 1e-8) {
      const cplx partner = 1.0 / std::conj(z);
      double best = std::numeric_limits<double>::infinity();
      for (const cplx& w : roots) best = std::min(best, std::abs(w - partner) / std::max(1.0, std::abs(partner)));
      rep.max_pairing_defect = std::max(rep.max_pairing_defect, best);
    }
  }
  return rep;
}

std::vector<cplx> critical_points(const BlaschkeProduct& b, const Tolerances& tol) {
  return critical_points_report(b, tol).points;
}

LevelSetReport level_component_count(const BlaschkeProduct& b, double r, const Tolerances& tol) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("level_component_count: r must lie in (0,1)");
  LevelSetReport rep;
  rep.r = r;
  rep.method = LevelMethod::exact_count;
  int inside = 0;
  if (b.degree() >= 2) {
    for (const cplx& z : critical_points(b, tol)) {
      const double m = std::abs(b(z));
      if (std::abs(m - r) <= tol.critical_value) rep.near_critical_value = true;
      if (m < r) {
        ++inside;
        rep.critical_inside.push_back({z, m});
      }
    }
  }
  rep.component_count = static_cast<int>(b.degree()) - inside;
  return rep;
}

Box level_bounding_box(const BlaschkeProduct& b, double r, double pad) {
  // |B| >= min_j rho(z, a_j)^n, so {|B| < r} lies in the union of D_rho(a_j, r^{1/n}).
  const double s = std::pow(r, 1.0 / static_cast<double>(b.degree()));
  Box box{1.0, -1.0, 1.0, -1.0};
  for (const cplx& a : b.zeros()) {
    const EDisk e = ph_to_euclid({a, s});
    box.x0 = std::min(box.x0, e.c.real() - e.R);
    box.x1 = std::max(box.x1, e.c.real() + e.R);
    box.y0 = std::min(box.y0, e.c.imag() - e.R);
    box.y1 = std::max(box.y1, e.c.imag() + e.R);
  }
  box.x0 = std::max(-1.0, box.x0 - pad);
  box.x1 = std::min(1.0, box.x1 + pad);
  box.y0 = std::max(-1.0, box.y0 - pad);
  box.y1 = std::min(1.0, box.y1 + pad);
  return box;
}

namespace {

cplx grid_point(const Box& box, int res, int i, int j) {
  const double x = box.x0 + (box.x1 - box.x0) * (i + 0.5) / res;
  const double y = box.y0 + (box.y1 - box.y0) * (j + 0.5) / res;
  return {x, y};
}

bool below(const BlaschkeProduct& b, cplx z, double r) {
  if (std::abs(z) >= 1.0) return false;
  return std::abs(b.eval_unchecked(z)) < r;
}

}  // namespace

GridLabeling level_components_grid(const BlaschkeProduct& b, double r, int resolution) {
  if (resolution < 2) throw std::invalid_argument("level_components_grid: resolution too small");
  GridLabeling out;
  out.box = level_bounding_box(b, r);
  out.resolution = resolution;
  const int res = resolution;
  std::vector<int> label(static_cast<std::size_t>(res) * res, -1);
  std::vector<char> mask(label.size(), 0);
  for (int j = 0; j < res; ++j)
    for (int i = 0; i < res; ++i) mask[static_cast<std::size_t>(j) * res + i] = below(b, grid_point(out.box, res, i, j), r);

  std::vector<int> stack;
  int comp = 0;
  for (std::size_t start = 0; start < mask.size(); ++start) {
    if (!mask[start] || label[start] >= 0) continue;
    label[start] = comp;
    stack.push_back(static_cast<int>(start));
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      const int ci = cur % res, cj = cur / res;
      const int nbr[4][2] = {{ci - 1, cj}, {ci + 1, cj}, {ci, cj - 1}, {ci, cj + 1}};
      for (const auto& nb : nbr) {
        if (nb[0] < 0 || nb[0] >= res || nb[1] < 0 || nb[1] >= res) continue;
        const std::size_t k = static_cast<std::size_t>(nb[1]) * res + nb[0];
        if (mask[k] && label[k] < 0) {
          label[k] = comp;
          stack.push_back(static_cast<int>(k));
        }
      }
    }
    ++comp;
  }
  out.component_count = comp;
  out.zeros_per_component.assign(comp, 0);
  for (const cplx& a : b.zeros()) {
    const int i = static_cast<int>(std::floor((a.real() - out.box.x0) / (out.box.x1 - out.box.x0) * res));
    const int j = static_cast<int>(std::floor((a.imag() - out.box.y0) / (out.box.y1 - out.box.y0) * res));
    if (i < 0 || i >= res || j < 0 || j >= res) {
      ++out.unresolved_zeros;
      continue;
    }
    const int l = label[static_cast<std::size_t>(j) * res + i];
    if (l < 0) ++out.unresolved_zeros;
    else ++out.zeros_per_component[l];
  }
  return out;
}

ContainmentProbe level_contains(const BlaschkeProduct& b, const BlaschkeProduct& c, double r, int resolution) {
  if (resolution < 256) throw std::invalid_argument("level_contains: resolution must be at least 256");
  const Box box = level_bounding_box(b, r);
  ContainmentProbe out;
  for (int j = 0; j < resolution; ++j)
    for (int i = 0; i < resolution; ++i) {
      const cplx z = grid_point(box, resolution, i, j);
      if (!below(b, z, r)) continue;
      if (!(std::abs(c.eval_unchecked(z)) < r)) {
        out.contained = false;
        out.witness = z;
        return out;
      }
    }
  return out;
}

SplitRadius degree2_split_radius(const BlaschkeProduct& b) {
  if (b.degree() != 2) throw std::invalid_argument("degree2_split_radius: degree must be 2");
  const double t = pseudo_dist(b.zeros()[0], b.zeros()[1]);
  if (!(t > 1e-9)) throw std::invalid_argument("degree2_split_radius: zeros are repeated");
  const double s = t / (1.0 + std::sqrt(1.0 - t * t));  // = (1 - sqrt(1 - t^2))/t
  return {s * s, s};
}

HoffmanBound hoffman_bound(double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("hoffman_bound: delta must lie in (0,1]");
  const double x = delta / (1.0 + std::sqrt(1.0 - delta * delta));
  return {x * x, x};
}

bool zero_product_bound(const BlaschkeProduct& b) {
  double prod = 1.0;
  for (const cplx& a : b.zeros()) prod *= std::abs(a);
  return prod >= 2.0 * std::sqrt(2.0) / 3.0;
}

double max_on_circle(const BlaschkeProduct& b, const EDisk& d, int samples) {
  double best = 0.0;
  for (int k = 0; k < samples; ++k) {
    const cplx z = d.c + std::polar(d.R, 2.0 * std::numbers::pi * k / samples);
    best = std::max(best, std::abs(b.eval_unchecked(z)));
  }
  return best;
}

int difference_zero_count(const BlaschkeProduct& b, const BlaschkeProduct& c, double radius) {
  auto f = [&](double th) {
    const cplx z = std::polar(radius, th);
    return b.eval_unchecked(z) - c.eval_unchecked(z);
  };
  const double two_pi = 2.0 * std::numbers::pi;
  double th = 0.0;
  double h = two_pi / 4096.0;
  cplx prev = f(0.0);
  double total = 0.0;
  while (th < two_pi) {
    const double step = std::min(h, two_pi - th);
    const cplx next = f(th + step);
    const double d = std::arg(next / prev);
    if (std::abs(d) > std::numbers::pi / 8.0 && step > 1e-13) {
      h = step / 2.0;
      continue;
    }
    total += d;
    th += step;
    prev = next;
    h = std::min(2.0 * step, two_pi / 4096.0);
  }
  return static_cast<int>(std::lround(total / two_pi));
}

}  // namespace blaschke_lab
