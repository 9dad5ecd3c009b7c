#pragma once

#include <complex>
#include <string>

namespace blaschke_lab {

using cplx = std::complex<double>;

/// Numerical tolerances shared by every module.
///
/// Library functions take a `Tolerances` by const reference with a
/// defaulted argument, so there is no hidden global state; the CLI builds
/// one from the `BLASCHKE_LAB_TOL` environment variable.
struct Tolerances {
  double hermitian = 1e-12;       // max |H - H*| entrywise
  double jacobi_offdiag = 1e-13;  // off-diagonal Frobenius stop (relative to ||H||_F)
  double pivot = 1e-13;           // LU pivot threshold relative to ||M||
  double pole = 1e-13;            // |1 - conj(a) z| below this is a pole hit
  double disk_margin = 1e-12;     // zeros must satisfy |a| < 1 - disk_margin
  double unimodular = 1e-12;      // | |lambda| - 1 |
  double tangency = 1e-10;        // squared-distance comparisons in disks_relation
  double inside_root = 1e-9;      // |root| < 1 - inside_root counts as inside
  double root_pairing = 1e-7;     // reflected partner 1/conj(z) distance
  double critical_value = 1e-9;   // warning band around critical values
  double lsc_slack = 1e-7;        // verdict slack below 1/2
  double kit_residual = 1e-9;     // spectral kit transcription gate
};

/// Parse "key=value,key=value" overrides on top of `base`. Unknown keys or
/// malformed numbers throw std::invalid_argument.
Tolerances parse_tolerance_overrides(const std::string& spec, Tolerances base = {});

/// Reads BLASCHKE_LAB_TOL if set, otherwise returns defaults.
Tolerances tolerances_from_env();

}  // namespace blaschke_lab
