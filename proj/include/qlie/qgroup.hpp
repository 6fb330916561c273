// The quantum-group presentation on finite-dimensional candidates: q-Cartan
// matrices, the standard sl2 / sln matrix representations, exact checking of
// the defining relations (conjugation, commutator, q-Serre), and quantum
// dimensions by the type-A product formula and the positive-root formula.
#pragma once

#include <string>
#include <vector>

#include "qlie/laurent.hpp"
#include "qlie/rootsys.hpp"

namespace qlie {

using QMat = std::vector<std::vector<QScalar>>;

struct QuantumRep {
  IntMat cartan;               // A[i][j]
  std::vector<int> sym;        // (a_i,a_i) as v-exponents: q_i = v^{sym[i]}
  int dimension = 0;
  std::vector<QMat> X, Y, Z;   // one matrix per node
  std::vector<std::vector<int>> weights;  // Z_i v_k = v^{weights[k][i]} v_k
};

// Entrywise symmetric q-bracket of the Cartan matrix.
std::vector<std::vector<LaurentPoly>> q_cartan(const LieType& t);

// dim-dimensional highest-weight module of the one-node presentation:
// Z v_k = q^{dim-1-2k} v_k, X v_k = [k] v_{k-1}, Y v_k = [dim-1-k] v_{k+1}.
QuantumRep build_sl2_rep(int dim);

// n-dimensional fundamental representation of the (n-1)-node type-A
// presentation: X_i = E_{i,i+1}, Y_i = E_{i+1,i}.
QuantumRep build_sln_fundamental(int n);

struct RelationReport {
  struct Item {
    std::string relation;
    bool pass;
    std::string witness;  // first failing entry, empty on pass
  };
  bool structural_ok = true;
  std::string structural_error;
  std::vector<Item> items;
  bool all_pass() const;
  std::string first_failure() const;
};

// Verifies the defining relations on the given candidate matrices.  Exact
// QScalar arithmetic by default; fast mode certifies each identity by
// evaluation at enough distinct rational points to exceed the degree bound.
RelationReport check_relations(const QuantumRep& rep, bool fast = false);

// prod_{1<=i<j<=N} [R_i - R_j + j - i] / [j - i], partition padded to N.
LaurentPoly qdim_typeA(const std::vector<long>& partition, int N);

// prod_{a>0} [(a, rho+L)] / [(a, rho)] over the positive roots, L the
// dominant weight with the given fundamental-weight coefficients.
LaurentPoly qdim_roots(const std::vector<long>& hw_coeffs, const LieType& t);

// Fundamental weights in ambient coordinates (rows).
RatMat fundamental_weights(const LieType& t);

void validate_partition(const std::vector<long>& partition, int N);

}  // namespace qlie
