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

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

using namespace admitsim;

TEST_CASE("polynomial helpers") {
  const Poly a{1.0, 2.0};        // 1 + 2s
  const Poly b{0.0, 1.0, 3.0};   // s + 3s^2
  CHECK(poly_mul(a, b) == Poly{0.0, 1.0, 5.0, 6.0});
  CHECK(poly_add(a, b) == Poly{1.0, 3.0, 3.0});
  CHECK(poly_degree(poly_trim({1.0, 1.0, 0.0, 1e-18})) == 1);
  CHECK(poly_trim({0.0, 0.0}).empty());
  const auto v = poly_eval({1.0, 0.0, 1.0}, {0.0, 1.0});  // 1 + s^2 at s = j
  CHECK(std::abs(v) <= 1e-15);
}

TEST_CASE("impedance and admittance forms") {
  const AdmittanceParams p{4.0, 200.0, 2500.0};
  const TransferPair tf = transfer_functions(p);
  CHECK(tf.admittance.num == Poly{0.0, 1.0});
  CHECK(tf.admittance.den == Poly{2500.0, 200.0, 4.0});
  CHECK(tf.impedance.num == Poly{2500.0, 200.0, 4.0});
  CHECK(tf.impedance.den == Poly{0.0, 1.0});

  // Y * Z == 1: cross-multiplied polynomials agree...
  CHECK(poly_mul(tf.admittance.num, tf.impedance.num) ==
        poly_mul(tf.admittance.den, tf.impedance.den));
  // ...and the product evaluates to one on random points of the j-axis.
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.1, 100.0);
  for (int i = 0; i < 100; ++i) {
    const std::complex<double> s{0.0, u(rng)};
    const auto prod = tf.admittance.eval(s) * tf.impedance.eval(s);
    CHECK(std::abs(prod - 1.0) <= 1e-10);
  }
}

TEST_CASE("pure-mass admittance limit") {
  const AdmittanceParams p{4.0, 0.0, 0.0};
  const TransferPair tf = transfer_functions(p);
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 20; ++i) {
    const std::complex<double> s{u(rng), u(rng)};
    CHECK(std::abs(tf.admittance.eval(s) - 1.0 / (4.0 * s)) <= 1e-12);
  }
}

TEST_CASE("exact estimate collapses the characteristic polynomial") {
  const AdmittanceParams p = AdmittanceParams::critically_damped(4.0, 300.0);
  const double m_u = 1.5;
  const RationalTransfer m_hat = RationalTransfer::constant(m_u);
  const RationalTransfer r = RationalTransfer::first_order_lag(1.0, 0.05);
  const Poly poly = characteristic_polynomial(p, m_u, m_hat, r);
  // Only the numerator of R survives; residue of the cancelled term is
  // below 1e-12.
  REQUIRE(poly.size() == 1);
  CHECK(poly[0] == doctest::Approx(1.0).epsilon(1e-12));
  const StabilityVerdict v = assess(poly);
  CHECK(v.degenerate);
  CHECK(v.stable);
}

TEST_CASE("lagged zero estimate with a first-order robot loop: quartic") {
  const AdmittanceParams p{4.0, 69.282, 300.0};
  const Poly poly = characteristic_polynomial(
      p, 1.5, RationalTransfer::constant(0.0), RationalTransfer::first_order_lag(1.0, 0.05));
  // (4 s^2 + 69.282 s + 300) * 1.5 s * (0.05 s + 1) + 1, expanded by hand.
  REQUIRE(poly.size() == 5);
  CHECK(poly[0] == doctest::Approx(1.0));
  CHECK(poly[1] == doctest::Approx(450.0).epsilon(1e-12));
  CHECK(poly[2] == doctest::Approx(126.423).epsilon(1e-12));
  CHECK(poly[3] == doctest::Approx(11.19615).epsilon(1e-12));
  CHECK(poly[4] == doctest::Approx(0.3).epsilon(1e-12));

  // Every root returned by the companion solver is a root of the polynomial.
  const StabilityVerdict v = assess(poly);
  REQUIRE(v.roots.size() == 4);
  for (const auto& root : v.roots) {
    CHECK(std::abs(poly_eval(poly, root)) <= 1e-6);
  }
  CHECK(routh_hurwitz(poly) == v.stable);
}

TEST_CASE("ideal robot, zero estimate: cubic with known coefficients") {
  const AdmittanceParams p{4.0, 69.282, 300.0};
  const double m_u = 1.5;
  const Poly poly = characteristic_polynomial(p, m_u, RationalTransfer::constant(0.0),
                                              RationalTransfer::constant(1.0));
  CHECK(poly == Poly{1.0, 300.0 * m_u, 69.282 * m_u, 4.0 * m_u});
  CHECK(routh_hurwitz(poly) == assess(poly).stable);
}

TEST_CASE("assess on simple polynomials") {
  SUBCASE("s + 1") {
    const StabilityVerdict v = assess({1.0, 1.0});
    CHECK(v.stable);
    CHECK(v.max_real_part == doctest::Approx(-1.0).epsilon(1e-12));
  }
  SUBCASE("s - 1") {
    const StabilityVerdict v = assess({-1.0, 1.0});
    CHECK_FALSE(v.stable);
    CHECK(v.max_real_part == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("s^2 + 0.2 s + 1") {
    const StabilityVerdict v = assess({1.0, 0.2, 1.0});
    CHECK(v.stable);
    CHECK(v.max_real_part == doctest::Approx(-0.1).epsilon(1e-9));
  }
  SUBCASE("degenerate constant") {
    const StabilityVerdict v = assess({5.0});
    CHECK(v.degenerate);
    CHECK(v.stable);
  }
  SUBCASE("stability margin shifts the verdict") {
    CHECK(assess({1.0, 1.0}, 0.5).stable);        // root -1 < -0.5
    CHECK_FALSE(assess({0.2, 1.0}, 0.5).stable);  // root -0.2 > -0.5
  }
}

TEST_CASE("routh-hurwitz on knowns") {
  CHECK(routh_hurwitz({1.0, 2.0, 1.0}));        // (s+1)^2
  CHECK_FALSE(routh_hurwitz({10.0, 1.0, 1.0, 1.0}));  // s^3+s^2+s+10
  CHECK(routh_hurwitz({6.0, 11.0, 6.0, 1.0}));  // (s+1)(s+2)(s+3)
  CHECK_FALSE(routh_hurwitz({-1.0, 1.0}));      // root +1
  CHECK_FALSE(routh_hurwitz({0.0, 1.0, 1.0}));  // root at the origin
  CHECK_FALSE(routh_hurwitz({1.0, 0.0, 1.0}));  // roots on the j-axis
  CHECK_THROWS_AS(routh_hurwitz({3.0}), std::invalid_argument);
}

TEST_CASE("root finder and routh table agree on random polynomials") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_int_distribution<int> deg(1, 8);
  int accepted = 0;
  while (accepted < 1000) {
    const int n = deg(rng);
    Poly p(static_cast<size_t>(n) + 1);
    for (double& c : p) c = coef(rng);
    if (std::abs(p.back()) < 0.1) continue;
    const StabilityVerdict v = assess(p);
    // The criterion is undefined on the imaginary axis; skip near misses.
    double min_abs_re = 1e9;
    for (const auto& root : v.roots) min_abs_re = std::min(min_abs_re, std::abs(root.real()));
    if (min_abs_re < 1e-6) continue;
    ++accepted;
    CHECK(routh_hurwitz(p) == v.stable);
  }
}

TEST_CASE("root continuity under tiny coefficient perturbation") {
  // (s+1)(s+2)...(s+6), well conditioned.
  Poly p{1.0};
  for (int k = 1; k <= 6; ++k) p = poly_mul(p, Poly{static_cast<double>(k), 1.0});
  const double base = assess(p).max_real_part;
  for (size_t i = 0; i < p.size(); ++i) {
    Poly q = p;
    q[i] += 1e-9;
    CHECK(std::abs(assess(q).max_real_part - base) < 1e-6);
  }
}

TEST_CASE("rational transfer validation") {
  RationalTransfer r{{1.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(r.validate(), std::invalid_argument);
  CHECK_THROWS_AS(RationalTransfer::first_order_lag(1.0, -0.1), std::invalid_argument);
  const RationalTransfer lag = RationalTransfer::first_order_lag(2.0, 0.0);
  CHECK(lag.num == Poly{2.0});
  CHECK(lag.den == Poly{1.0});
}
