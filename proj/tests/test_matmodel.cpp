#include <cmath>

#include "doctest.h"
#include "qlie/matmodel.hpp"

using namespace qlie;

namespace {

const double kPi = 3.14159265358979323846;

ModelSpec a1_gaussian(long n, double g) {
  ModelSpec m;
  m.type = {Family::A, 1};
  m.node_sizes = {n};
  m.potentials = {{0.0, 0.0, 0.5}};
  m.g = g;
  return m;
}

ModelSpec a2_pair(double g, double eps) {
  ModelSpec m;
  m.type = {Family::A, 2};
  m.node_sizes = {1, 1};
  m.potentials = {{0.0, 0.0, 0.5}, {0.0, 0.0, 0.5}};
  m.g = g;
  m.epsilon = eps;
  return m;
}

}  // namespace

TEST_CASE("model validation") {
  CHECK_NOTHROW(validate_model(a1_gaussian(2, 1.0)));
  ModelSpec bad = a1_gaussian(1, 1.0);
  bad.potentials = {{0.0, 0.0, 0.0, 1.0}};  // odd leading degree
  CHECK_THROWS_AS(validate_model(bad), std::invalid_argument);
  bad = a1_gaussian(1, 1.0);
  bad.potentials = {{0.0, 0.0, -0.5}};  // negative leading coefficient
  CHECK_THROWS_AS(validate_model(bad), std::invalid_argument);
  bad = a1_gaussian(1, 1.0);
  bad.potentials = {{1.0}};  // constant potential
  CHECK_THROWS_AS(validate_model(bad), std::invalid_argument);
  bad = a1_gaussian(1, 0.0);
  CHECK_THROWS_AS(validate_model(bad), std::invalid_argument);
  bad = a1_gaussian(1, 1.0);
  bad.node_sizes = {1, 1};
  CHECK_THROWS_AS(validate_model(bad), std::invalid_argument);
  bad = a1_gaussian(0, 1.0);
  CHECK_THROWS_AS(validate_model(bad), std::invalid_argument);
  bad = a1_gaussian(1, 1.0);
  bad.epsilon = -0.5;
  CHECK_THROWS_AS(validate_model(bad), std::invalid_argument);
  CHECK_THROWS_AS(z_matrix_model(a1_gaussian(1, 1.0), 0, 1),
                  std::invalid_argument);
}

TEST_CASE("pair exponents follow the simple-root pairings") {
  ModelSpec a2 = a2_pair(1.0, 0.1);
  auto ip = pair_exponents(a2);
  CHECK(ip[0][0] == 2.0);
  CHECK(ip[0][1] == -1.0);
  CHECK(ip[1][0] == -1.0);
  CHECK(ip[1][1] == 2.0);
  a2.use_cartan_exponents = true;
  CHECK(pair_exponents(a2) == ip);  // simply laced: identical

  ModelSpec g2;
  g2.type = {Family::G, 2};
  g2.node_sizes = {1, 1};
  g2.potentials = {{0.0, 0.0, 0.5}, {0.0, 0.0, 0.5}};
  auto gip = pair_exponents(g2);
  CHECK(gip[0][1] == -3.0);
  CHECK(gip[0][0] * gip[1][1] == 12.0);  // lengths 2 and 6
  g2.use_cartan_exponents = true;
  auto gce = pair_exponents(g2);
  CHECK(gce[0][0] == 2.0);
  CHECK(gce[1][1] == 2.0);
  CHECK(gce[0][1] == -2.0);  // symmetrized -1, -3
}

TEST_CASE("single eigenvalue: plain Gaussian integral") {
  ModelSpec m = a1_gaussian(1, 1.0);
  Estimate mc = z_matrix_model(m, 100000, 11);
  // The importance density matches the integrand exactly: zero variance.
  CHECK(mc.value == doctest::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-12));
  CHECK(mc.stderr_ == doctest::Approx(0.0));
  CHECK(mc.method == "monte_carlo");
  Estimate qd = quadrature_oracle(m, 256);
  CHECK(qd.method == "quadrature");
  CHECK(std::fabs(qd.value - std::sqrt(2.0 * kPi)) <= qd.stderr_ + 1e-8);
}

TEST_CASE("Vandermonde-squared Gaussian: 4 pi g^2") {
  for (double g : {0.5, 1.0, 2.0}) {
    double exact = 4.0 * kPi * g * g;
    Estimate mc = z_matrix_model(a1_gaussian(2, g), 1000000, 2024);
    CHECK(std::fabs(mc.value - exact) < 0.02 * exact);
    CHECK(std::fabs(mc.value - exact) < 3.0 * mc.stderr_);
    Estimate qd = quadrature_oracle(a1_gaussian(2, g), 200);
    CHECK(std::fabs(qd.value - exact) <= 2.0 * qd.stderr_ + 1e-6 * exact);
  }
}

TEST_CASE("scaling law value(g)/value(1) = g^2") {
  Estimate base = z_matrix_model(a1_gaussian(2, 1.0), 200000, 555);
  for (double g : {0.5, 2.0}) {
    Estimate e = z_matrix_model(a1_gaussian(2, g), 200000, 555);
    double ratio = e.value / base.value;
    double rel_err = 3.0 * (e.stderr_ / e.value + base.stderr_ / base.value);
    CHECK(std::fabs(ratio - g * g) <= g * g * rel_err + 1e-12);
  }
}

TEST_CASE("estimates are deterministic and thread-count independent") {
  ModelSpec m = a1_gaussian(2, 1.0);
  Estimate a = z_matrix_model(m, 50000, 7, 1);
  Estimate b = z_matrix_model(m, 50000, 7, 2);
  Estimate c = z_matrix_model(m, 50000, 7, 5);
  Estimate d = z_matrix_model(m, 50000, 7, 0);
  CHECK(a.value == b.value);
  CHECK(b.value == c.value);
  CHECK(c.value == d.value);
  CHECK(a.stderr_ == d.stderr_);
  Estimate other_seed = z_matrix_model(m, 50000, 8);
  CHECK(a.value != other_seed.value);
}

TEST_CASE("stderr shrinks like one over sqrt(samples)") {
  ModelSpec m = a1_gaussian(2, 1.0);
  Estimate lo = z_matrix_model(m, 10000, 3);
  Estimate hi = z_matrix_model(m, 1000000, 3);
  double ratio = lo.stderr_ / hi.stderr_;
  CHECK(ratio > 5.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("regulated adjacent-node model: MC agrees with quadrature") {
  ModelSpec m = a2_pair(1.0, 0.1);
  Estimate mc = z_matrix_model(m, 1000000, 99);
  Estimate qd = quadrature_oracle(m, 400);
  CHECK(std::fabs(mc.value - qd.value) < 3.0 * (mc.stderr_ + qd.stderr_));
  // The unregulated model is rejected.
  m.epsilon = 0.0;
  CHECK_THROWS_AS(z_matrix_model(m, 1000, 1), std::invalid_argument);
  CHECK_THROWS_AS(quadrature_oracle(m, 64), std::invalid_argument);
}

TEST_CASE("quadrature preconditions") {
  ModelSpec m = a1_gaussian(4, 1.0);
  CHECK_THROWS_AS(quadrature_oracle(m, 64), std::invalid_argument);
  CHECK_THROWS_AS(quadrature_oracle(a1_gaussian(1, 1.0), 2),
                  std::invalid_argument);
}

TEST_CASE("quartic potential agrees across methods") {
  ModelSpec m;
  m.type = {Family::A, 1};
  m.node_sizes = {1};
  m.potentials = {{0.0, 0.0, 0.0, 0.0, 0.25}};
  m.g = 1.0;
  Estimate mc = z_matrix_model(m, 500000, 5);
  Estimate qd = quadrature_oracle(m, 512);
  CHECK(std::fabs(mc.value - qd.value) < 3.0 * (mc.stderr_ + qd.stderr_) + 1e-9);
}
