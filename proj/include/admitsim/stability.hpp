// Copyright 2026 The admitsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADMITSIM_STABILITY_HPP_
#define ADMITSIM_STABILITY_HPP_

#include <complex>
#include <vector>

#include "admitsim/controller.hpp"

namespace admitsim {

/// Polynomial coefficients in ascending powers of s: p[i] multiplies s^i.
using Poly = std::vector<double>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, double s);
/// Drops leading (highest-order) coefficients with |c| <= tol relative to
/// the largest magnitude coefficient.
Poly poly_trim(const Poly& a, double rel_tol = 1e-12);
int poly_degree(const Poly& a);
std::complex<double> poly_eval(const Poly& a, std::complex<double> s);

/// Ratio of two polynomials in s, ascending coefficients.
struct RationalTransfer {
  Poly num;
  Poly den;

  void validate() const;
  std::complex<double> eval(std::complex<double> s) const;

  static RationalTransfer constant(double c) { return {{c}, {1.0}}; }
  /// c / (tau*s + 1); tau = 0 degenerates to a constant.
  static RationalTransfer first_order_lag(double c, double tau);
};

/// Impedance Z(s) = (M_a s^2 + B_a s + K_a)/s and its inverse, the
/// admittance Y(s) = s/(M_a s^2 + B_a s + K_a).
struct TransferPair {
  RationalTransfer impedance;
  RationalTransfer admittance;
};
TransferPair transfer_functions(const AdmittanceParams& params);

/// Closed-loop characteristic numerator for the adaptive loop:
///   (M_a s^2 + B_a s + K_a) * (M_u - M_u_hat(s)) * s + R(s) = 0
/// cleared to the common denominator of M_u_hat and R. An exact estimate
/// (M_u_hat == M_u) collapses the first term; the trimmed result then has
/// degree <= 0 and is reported as degenerate by assess().
Poly characteristic_polynomial(const AdmittanceParams& params, double m_u,
                               const RationalTransfer& m_u_hat, const RationalTransfer& r);

struct StabilityVerdict {
  bool stable = false;
  bool degenerate = false;  // degree <= 0 after trimming; vacuously stable
  double max_real_part = 0.0;
  std::vector<std::complex<double>> roots;
};

/// Roots via companion-matrix eigenvalues; stable iff all real parts are
/// strictly left of -margin.
StabilityVerdict assess(const Poly& poly, double margin = 0.0);

/// Routh-Hurwitz criterion: true iff every root has negative real part.
/// Zero pivots are perturbed by a small epsilon to keep the table going;
/// imaginary-axis roots are therefore classified as not strictly stable.
/// Independent of assess(), which it cross-checks.
bool routh_hurwitz(const Poly& poly);

}  // namespace admitsim

#endif  // ADMITSIM_STABILITY_HPP_
