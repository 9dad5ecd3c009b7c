#include "blaschke_lab/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace blaschke_lab {

CPoly::CPoly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(cplx{});
}

CPoly CPoly::from_roots(std::span<const cplx> roots) {
  std::vector<cplx> r(roots.begin(), roots.end());
  std::stable_sort(r.begin(), r.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
  std::vector<cplx> c{cplx{1.0, 0.0}};
  for (const cplx& z : r) {
    std::vector<cplx> next(c.size() + 1, cplx{});
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= z * c[k];
    }
    c = std::move(next);
  }
  return CPoly(std::move(c));
}

cplx CPoly::operator()(cplx z) const {
  cplx s{};
  for (std::size_t k = c_.size(); k-- > 0;) s = s * z + c_[k];
  return s;
}

CPoly CPoly::derivative() const {
  if (c_.size() <= 1) return CPoly{};
  std::vector<cplx> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return CPoly(std::move(d));
}

double CPoly::max_coeff() const {
  double m = 0.0;
  for (const auto& x : c_) m = std::max(m, std::abs(x));
  return m;
}

CPoly CPoly::trimmed(double rel) const {
  const double cut = rel * max_coeff();
  std::vector<cplx> c = c_;
  while (c.size() > 1 && std::abs(c.back()) <= cut) c.pop_back();
  return CPoly(std::move(c));
}

CPoly operator+(const CPoly& a, const CPoly& b) {
  std::vector<cplx> c(std::max(a.c_.size(), b.c_.size()), cplx{});
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return CPoly(std::move(c));
}

CPoly operator-(const CPoly& a, const CPoly& b) { return a + cplx{-1.0, 0.0} * b; }

CPoly operator*(const CPoly& a, const CPoly& b) {
  std::vector<cplx> c(a.c_.size() + b.c_.size() - 1, cplx{});
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return CPoly(std::move(c));
}

CPoly operator*(cplx s, const CPoly& a) {
  std::vector<cplx> c = a.c_;
  for (auto& x : c) x *= s;
  return CPoly(std::move(c));
}

RootFindError::RootFindError(int s, double step, int u)
    : std::runtime_error("aberth_roots: no convergence after " + std::to_string(s) +
                         " sweeps (max step " + std::to_string(step) + ", " +
                         std::to_string(u) + " unconverged roots)"),
      sweeps(s),
      max_step(step),
      unconverged(u) {}

std::vector<cplx> aberth_roots(const CPoly& p, const AberthOptions& opt) {
  const auto all = p.coeffs();
  const double big = p.max_coeff();
  if (big == 0.0) throw std::invalid_argument("aberth_roots: zero polynomial");
  const double cut = opt.trim_rel * big;

  std::size_t lo = 0;
  std::size_t hi = all.size();
  while (hi > 0 && std::abs(all[hi - 1]) <= cut) --hi;
  while (lo < hi && std::abs(all[lo]) <= cut) ++lo;

  std::vector<cplx> roots(lo, cplx{});
  if (hi - lo <= 1) return roots;

  const std::vector<cplx> c(all.begin() + static_cast<std::ptrdiff_t>(lo),
                            all.begin() + static_cast<std::ptrdiff_t>(hi));
  const int d = static_cast<int>(c.size()) - 1;
  if (d == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }

  std::vector<double> absc(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) absc[k] = std::abs(c[k]);

  std::vector<cplx> z(d);
  for (int k = 0; k < d; ++k) {
    const double ang = 2.0 * std::numbers::pi * (k + 0.25) / d + 0.4;
    z[k] = std::polar(opt.init_radius, ang);
  }
  std::vector<bool> done(d, false);
  constexpr double eps = 2.220446049250313e-16;

  double max_step = 0.0;
  int sweep = 0;
  for (; sweep < opt.max_sweeps; ++sweep) {
    max_step = 0.0;
    int pending = 0;
    for (int i = 0; i < d; ++i) {
      if (done[i]) continue;
      // Horner for p, p' and the rounding-error bound sum |c_k| |z|^k.
      cplx pv = c[d], dv{};
      double bound = absc[d];
      const double az = std::abs(z[i]);
      for (int k = d - 1; k >= 0; --k) {
        dv = dv * z[i] + pv;
        pv = pv * z[i] + c[k];
        bound = bound * az + absc[k];
      }
      if (std::abs(pv) <= 4.0 * d * eps * bound) {
        done[i] = true;
        continue;
      }
      const cplx ratio = pv / dv;
      cplx sum{};
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        const cplx diff = z[i] - z[j];
        if (diff != cplx{}) sum += 1.0 / diff;
      }
      const cplx denom = 1.0 - ratio * sum;
      const cplx w = (std::abs(denom) > 0.0 && std::isfinite(std::abs(ratio))) ? ratio / denom
                                                                               : cplx{1e-3, 1e-3};
      z[i] -= w;
      const double step = std::abs(w);
      max_step = std::max(max_step, step / std::max(1.0, std::abs(z[i])));
      if (step <= opt.step_tol * std::max(1.0, std::abs(z[i]))) done[i] = true;
      else ++pending;
    }
    if (pending == 0) break;
  }
  const int unconverged = static_cast<int>(std::count(done.begin(), done.end(), false));
  if (unconverged > 0) throw RootFindError(sweep, max_step, unconverged);
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace blaschke_lab
