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

#include "admitsim/stability.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace admitsim {

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0.0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Poly poly_scale(const Poly& a, double s) {
  Poly out = a;
  for (double& c : out) c *= s;
  return out;
}

Poly poly_trim(const Poly& a, double rel_tol) {
  double max_abs = 0.0;
  for (double c : a) max_abs = std::max(max_abs, std::abs(c));
  if (max_abs == 0.0) return {};
  Poly out = a;
  while (!out.empty() && std::abs(out.back()) <= rel_tol * max_abs) {
    out.pop_back();
  }
  return out;
}

int poly_degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

std::complex<double> poly_eval(const Poly& a, std::complex<double> s) {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = acc * s + *it;
  }
  return acc;
}

void RationalTransfer::validate() const {
  if (poly_trim(den).empty()) {
    throw std::invalid_argument("RationalTransfer: denominator is identically zero");
  }
}

std::complex<double> RationalTransfer::eval(std::complex<double> s) const {
  return poly_eval(num, s) / poly_eval(den, s);
}

RationalTransfer RationalTransfer::first_order_lag(double c, double tau) {
  if (tau < 0.0) throw std::invalid_argument("first_order_lag: tau must be >= 0");
  if (tau == 0.0) return constant(c);
  return {{c}, {1.0, tau}};
}

TransferPair transfer_functions(const AdmittanceParams& params) {
  params.validate();
  TransferPair out;
  out.impedance = {{params.k_a, params.b_a, params.m_a}, {0.0, 1.0}};
  out.admittance = {{0.0, 1.0}, {params.k_a, params.b_a, params.m_a}};
  return out;
}

Poly characteristic_polynomial(const AdmittanceParams& params, double m_u,
                               const RationalTransfer& m_u_hat, const RationalTransfer& r) {
  params.validate();
  m_u_hat.validate();
  r.validate();
  const Poly admittance_den{params.k_a, params.b_a, params.m_a};
  // (M_u * den_m - num_m): the estimation error cleared to den_m.
  const Poly err = poly_add(poly_scale(m_u_hat.den, m_u), poly_scale(m_u_hat.num, -1.0));
  const Poly s{0.0, 1.0};
  const Poly first = poly_mul(poly_mul(poly_mul(admittance_den, err), s), r.den);
  const Poly second = poly_mul(r.num, m_u_hat.den);
  return poly_trim(poly_add(first, second));
}

StabilityVerdict assess(const Poly& poly, double margin) {
  StabilityVerdict v;
  const Poly p = poly_trim(poly);
  if (poly_degree(p) < 1) {
    // Constant or empty: no dynamics left. Reachable through exact
    // estimate cancellation, so report it rather than throwing.
    v.degenerate = true;
    v.stable = true;
    v.max_real_part = -std::numeric_limits<double>::infinity();
    return v;
  }
  const int n = poly_degree(p);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  const double lead = p.back();
  for (int i = 0; i < n; ++i) {
    companion(i, n - 1) = -p[static_cast<size_t>(i)] / lead;
    if (i > 0) companion(i, i - 1) = 1.0;
  }
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("assess: eigenvalue solver failed");
  }
  v.max_real_part = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const std::complex<double> root = solver.eigenvalues()(i);
    v.roots.push_back(root);
    v.max_real_part = std::max(v.max_real_part, root.real());
  }
  v.stable = v.max_real_part < -margin;
  return v;
}

bool routh_hurwitz(const Poly& poly) {
  Poly p = poly_trim(poly);
  if (poly_degree(p) < 1) {
    throw std::invalid_argument("routh_hurwitz: degree must be >= 1");
  }
  // Normalize the leading coefficient to be positive.
  if (p.back() < 0.0) p = poly_scale(p, -1.0);

  double max_abs = 0.0;
  for (double c : p) max_abs = std::max(max_abs, std::abs(c));
  const double eps = 1e-12 * max_abs;

  const int n = poly_degree(p);
  // First two table rows hold coefficients in descending powers,
  // alternating.
  std::vector<double> row0, row1;
  for (int i = n; i >= 0; i -= 2) row0.push_back(p[static_cast<size_t>(i)]);
  for (int i = n - 1; i >= 0; i -= 2) row1.push_back(p[static_cast<size_t>(i)]);
  row1.resize(row0.size(), 0.0);

  std::vector<double> first_column{row0[0]};
  for (int r = 1; r <= n; ++r) {
    double pivot = row1[0];
    if (std::abs(pivot) <= eps) {
      bool all_zero = true;
      for (double c : row1) {
        if (std::abs(c) > eps) { all_zero = false; break; }
      }
      if (all_zero) {
        // Row of zeros: roots symmetric about the origin or on the
        // imaginary axis, so the polynomial cannot be strictly Hurwitz.
        return false;
      }
      pivot = eps > 0.0 ? eps : 1e-30;
      row1[0] = pivot;
    }
    first_column.push_back(pivot);
    std::vector<double> next(row0.size(), 0.0);
    // Routh element: (pivot*row0[j+1] - row0[0]*row1[j+1]) / pivot.
    for (size_t j = 0; j + 1 < row0.size(); ++j) {
      const double b = (j + 1 < row1.size()) ? row1[j + 1] : 0.0;
      next[j] = (pivot * row0[j + 1] - row0[0] * b) / pivot;
    }
    row0 = row1;
    row1 = next;
  }

  for (double c : first_column) {
    if (c <= 0.0) return false;
  }
  return true;
}

}  // namespace admitsim
