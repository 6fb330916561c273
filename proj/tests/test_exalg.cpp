#include <vector>

#include "doctest.h"
#include "qlie/exalg.hpp"
#include "qlie/rootsys.hpp"

using namespace qlie;

namespace {

RatVec basis_vec(int dim, int k) {
  RatVec v(dim, Rational(0));
  v[k] = 1;
  return v;
}

Rational norm_sq(const RatVec& v) {
  Rational s = 0;
  for (const Rational& x : v) s += x * x;
  return s;
}

}  // namespace

TEST_CASE("Cayley-Dickson tower basics") {
  CHECK(real_algebra().dim == 1);
  CHECK(complex_algebra().dim == 2);
  CHECK(quaternion_algebra().dim == 4);
  CHECK(octonion_algebra().dim == 8);
  CHECK(real_algebra().is_commutative());
  CHECK(complex_algebra().is_commutative());
  CHECK(!quaternion_algebra().is_commutative());
  CHECK(!octonion_algebra().is_commutative());
}

TEST_CASE("octonion unit, table and composition property") {
  AlgebraTensor oct = octonion_algebra();
  CHECK(oct.unit_index == 0);
  for (int k = 0; k < 8; ++k) {
    RatVec ek = basis_vec(8, k);
    CHECK(oct.multiply(basis_vec(8, 0), ek) == ek);
    CHECK(oct.multiply(ek, basis_vec(8, 0)) == ek);
  }
  // e1 e2 = e3 under the doubling convention.
  CHECK(oct.multiply(basis_vec(8, 1), basis_vec(8, 2)) == basis_vec(8, 3));
  // Every basis product is a signed basis vector of norm one.
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(norm_sq(oct.multiply(basis_vec(8, i), basis_vec(8, j))) == 1);
  // Imaginary units square to -1.
  for (int i = 1; i < 8; ++i) {
    RatVec sq = oct.multiply(basis_vec(8, i), basis_vec(8, i));
    CHECK(sq == RatVec{-1, 0, 0, 0, 0, 0, 0, 0});
  }
}

TEST_CASE("octonions are nonassociative, quaternions associative") {
  AlgebraTensor oct = octonion_algebra();
  RatVec lhs = oct.multiply(oct.multiply(basis_vec(8, 1), basis_vec(8, 2)),
                            basis_vec(8, 4));
  RatVec rhs = oct.multiply(basis_vec(8, 1),
                            oct.multiply(basis_vec(8, 2), basis_vec(8, 4)));
  CHECK(lhs != rhs);
  AlgebraTensor quat = quaternion_algebra();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        RatVec a = quat.multiply(
            quat.multiply(basis_vec(4, i), basis_vec(4, j)), basis_vec(4, k));
        RatVec b = quat.multiply(
            basis_vec(4, i), quat.multiply(basis_vec(4, j), basis_vec(4, k)));
        CHECK(a == b);
      }
}

TEST_CASE("Jordan algebra h3(O)") {
  AlgebraTensor jordan = jordan_h3o();
  CHECK(jordan.dim == 27);
  CHECK(jordan.is_commutative());
  // The sum of the three diagonal basis elements acts as the identity.
  for (int k = 0; k < 27; ++k) {
    RatVec x(27, Rational(0));
    x[k] = 1;
    RatVec unit(27, Rational(0));
    unit[0] = unit[1] = unit[2] = 1;
    CHECK(jordan.multiply(unit, x) == x);
  }
}

TEST_CASE("Jordan identity on sampled basis pairs") {
  AlgebraTensor jordan = jordan_h3o();
  int sample[] = {0, 1, 2, 3, 7, 11, 15, 20, 26};
  for (int i : sample)
    for (int j : sample) {
      RatVec x(27, Rational(0)), y(27, Rational(0));
      x[i] = 1;
      y[j] = 1;
      RatVec xx = jordan.multiply(x, x);
      RatVec lhs = jordan.multiply(xx, jordan.multiply(y, x));
      RatVec rhs = jordan.multiply(jordan.multiply(xx, y), x);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("derivation dimensions hit the exceptional Lie algebras") {
  CHECK(derivation_dimension(real_algebra()) == 0);
  CHECK(derivation_dimension(complex_algebra()) == 0);
  CHECK(derivation_dimension(quaternion_algebra()) == 3);
  CHECK(derivation_dimension(octonion_algebra()) == 14);
  CHECK(derivation_dimension(octonion_algebra()) ==
        lie_dimension({Family::G, 2}));
  CHECK(derivation_dimension(jordan_h3o()) == 52);
  CHECK(derivation_dimension(jordan_h3o()) == lie_dimension({Family::F, 4}));
}

TEST_CASE("triality dimensions") {
  CHECK(triality_dimension('R') == 0);
  CHECK(triality_dimension('C') == 2);
  CHECK(triality_dimension('H') == 9);
  CHECK(triality_dimension('O') == 28);
  CHECK(triality_dimension('O') == lie_dimension({Family::D, 4}));
  CHECK_THROWS_AS(triality_dimension('X'), std::invalid_argument);
}

TEST_CASE("E8 dimension identity") {
  CHECK(2 * triality_dimension('O') + 3 * 8 * 8 ==
        lie_dimension({Family::E, 8}));
}

TEST_CASE("magic square flags exactly the (H,H) cell") {
  std::vector<MagicCell> cells = magic_square_check();
  REQUIRE(cells.size() == 16);
  int flagged = 0;
  for (const MagicCell& c : cells) {
    if (c.consistent) {
      CHECK(c.formula_dim == c.label_dim);
    } else {
      ++flagged;
      CHECK(c.row == 'H');
      CHECK(c.col == 'H');
      CHECK(c.formula_dim == 66);
      CHECK(c.label_dim == 78);
      CHECK(c.label == "B6");
    }
  }
  CHECK(flagged == 1);
  // Spot values.
  for (const MagicCell& c : cells) {
    if (c.row == 'R' && c.col == 'R') CHECK(c.formula_dim == 3);
    if (c.row == 'O' && c.col == 'O') {
      CHECK(c.formula_dim == 248);
      CHECK(c.label == "E8");
    }
    if (c.row == 'C' && c.col == 'C') CHECK(c.label == "A2+A2");
    if (c.row == 'F' || c.col == 'F') CHECK(false);
  }
}

TEST_CASE("Clifford generators anticommute and span the expected algebra") {
  long expected_span[] = {1, 2, 4, 8, 16, 32, 64, 128, 256};
  for (int n = 0; n <= 8; ++n) {
    CliffordTower tower = clifford_tower(n);
    CHECK(tower.n == n);
    CHECK(tower.span_dim == expected_span[n]);
    int d = tower.size;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        // g_a g_b + g_b g_a computed entrywise.
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            long sum = 0;
            for (int k = 0; k < d; ++k)
              sum += tower.generators[a][i][k] * tower.generators[b][k][j] +
                     tower.generators[b][i][k] * tower.generators[a][k][j];
            CHECK(sum == (a == b && i == j ? 2 : 0));
          }
      }
  }
  CHECK_THROWS_AS(clifford_tower(9), std::invalid_argument);
  CHECK_THROWS_AS(clifford_tower(-1), std::invalid_argument);
}

TEST_CASE("Bott periodicity table") {
  CHECK(bott_homotopy(0) == "Z2");
  CHECK(bott_homotopy(1) == "Z2");
  CHECK(bott_homotopy(2) == "0");
  CHECK(bott_homotopy(3) == "Z");
  CHECK(bott_homotopy(7) == "Z");
  for (long n = 0; n <= 40; ++n) CHECK(bott_homotopy(n) == bott_homotopy(n + 8));
  CHECK(bott_homotopy(8) == bott_homotopy(0));
  CHECK(bott_homotopy(11) == bott_homotopy(3));
  CHECK_THROWS_AS(bott_homotopy(-1), std::invalid_argument);
}
