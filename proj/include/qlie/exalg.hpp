// Composition algebras by Cayley-Dickson doubling, the exceptional Jordan
// algebra, derivation and triality dimensions via exact nullspace ranks, the
// Freudenthal-Tits magic square with consistency flags, real Clifford
// generator towers, and the Bott periodicity table.
#pragma once

#include <string>
#include <vector>

#include "qlie/ratlin.hpp"
#include "qlie/rootsys.hpp"

namespace qlie {

struct AlgebraTensor {
  int dim = 0;
  // mul[i][j][k] = coefficient of e_k in e_i * e_j.
  std::vector<std::vector<RatVec>> mul;
  int unit_index = -1;

  RatVec multiply(const RatVec& a, const RatVec& b) const;
  bool is_commutative() const;
};

AlgebraTensor real_algebra();
AlgebraTensor complex_algebra();
AlgebraTensor quaternion_algebra();
AlgebraTensor octonion_algebra();

// Cayley-Dickson double of a composition algebra with the given basis
// conjugation signs: (a,b)(c,d) = (ac - d*b, da + bc*).
AlgebraTensor cayley_dickson_double(const AlgebraTensor& alg,
                                    const std::vector<int>& conj_signs);

// Conjugation signs (+1 on the unit, -1 on imaginary basis) for a CD algebra.
std::vector<int> conjugation_signs(int dim);

// 3x3 octonionic Hermitian matrices under A o B = (AB + BA)/2; dim 27.
AlgebraTensor jordan_h3o();

// dim { D : D(xy) = D(x)y + x D(y) }, exact integer via sparse elimination.
long derivation_dimension(const AlgebraTensor& alg);

// dim { (D1,D2,D3) in so(d)^3 : D1(xy) = D2(x)y + x D3(y) } for the
// composition algebra tagged 'R', 'C', 'H', or 'O'.
long triality_dimension(char tag);

struct MagicCell {
  char row;
  char col;
  std::string label;     // the table's Lie-type label, "A2+A2" for (C,C)
  long formula_dim;      // tri(row) + tri(col) + 3 dim(row) dim(col)
  long label_dim;        // dimension of the labelled algebra
  bool consistent;
};

std::vector<MagicCell> magic_square_check();

struct CliffordTower {
  int n = 0;
  int size = 1;  // matrix dimension
  std::vector<std::vector<std::vector<int>>> generators;
  long span_dim = 1;  // rank of the span of all 2^n subset products
};

// Real gamma matrices with g_i g_j + g_j g_i = 2 delta_ij I for 0 <= n <= 8;
// built from right multiplications of the matching composition algebra on
// A + A.
CliffordTower clifford_tower(int n);

// pi_n(O(inf)) from the period-8 base table (Z2, Z2, 0, Z, 0, 0, 0, Z).
std::string bott_homotopy(long n);

}  // namespace qlie
