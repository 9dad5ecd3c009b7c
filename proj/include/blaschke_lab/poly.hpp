#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "blaschke_lab/config.hpp"

namespace blaschke_lab {

/// Complex polynomial c_0 + c_1 z + ... + c_d z^d (ascending coefficients).
class CPoly {
 public:
  CPoly() : c_{cplx{}} {}
  explicit CPoly(std::vector<cplx> coeffs);

  static CPoly constant(cplx c) { return CPoly({c}); }
  /// prod (z - r_k), accumulated in ascending-modulus order.
  static CPoly from_roots(std::span<const cplx> roots);

  /// Nominal degree (index of the last stored coefficient).
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::span<const cplx> coeffs() const { return c_; }
  cplx operator[](std::size_t k) const { return k < c_.size() ? c_[k] : cplx{}; }

  cplx operator()(cplx z) const;
  CPoly derivative() const;
  double max_coeff() const;

  /// Drops leading coefficients with |c| <= rel * max|c|.
  CPoly trimmed(double rel = 0.0) const;

  friend CPoly operator+(const CPoly& a, const CPoly& b);
  friend CPoly operator-(const CPoly& a, const CPoly& b);
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend CPoly operator*(cplx s, const CPoly& a);

 private:
  std::vector<cplx> c_;
};

class RootFindError : public std::runtime_error {
 public:
  RootFindError(int sweeps, double max_step, int unconverged);
  int sweeps;
  double max_step;
  int unconverged;
};

struct AberthOptions {
  double init_radius = 0.8;
  int max_sweeps = 200;
  double step_tol = 1e-12;
  double trim_rel = 1e-14;  // leading/trailing coefficients treated as exact zeros
};

/// All roots of p (with multiplicity) by Aberth-Ehrlich simultaneous iteration.
/// Trailing coefficients below trim_rel * max|c| become exact zero roots and
/// leading ones are dropped (roots at infinity).
std::vector<cplx> aberth_roots(const CPoly& p, const AberthOptions& opt = {});

}  // namespace blaschke_lab
