// Finite root systems of types A-G in exact rational coordinates: Cartan
// matrices, reflection-closure root generation, Weyl vectors, Coxeter data
// and Dynkin diagram automorphisms.
#pragma once

#include <string>
#include <vector>

#include "qlie/ratlin.hpp"

namespace qlie {

enum class Family { A, B, C, D, E, F, G };

struct LieType {
  Family family;
  int rank;

  std::string str() const;
};

// Parses "A2", "E8", "G2", ...; throws std::invalid_argument on bad input.
LieType parse_lie_type(const std::string& s);

// Throws std::invalid_argument unless the family/rank combination is valid
// (A>=1, B,C>=2, D>=3, E in {6,7,8}, F=4, G=2).
void validate_lie_type(const LieType& t);

using IntMat = std::vector<std::vector<long>>;

struct RootSystem {
  LieType type;
  int ambient = 0;
  std::vector<RatVec> simple_roots;
  IntMat cartan;                    // cartan[i][j] = 2(a_i,a_j)/(a_j,a_j)
  std::vector<RatVec> roots;        // sorted lexicographically
  std::vector<RatVec> positive_roots;
  std::vector<std::vector<long>> root_coords;  // roots in the simple basis
  RatVec weyl_vector;
};

// Simple roots in the standard orthonormal realization of each family.
std::vector<RatVec> simple_roots(const LieType& t);

IntMat cartan_matrix(const LieType& t);

// Exhaustive reflection closure; rank <= 8.
RootSystem generate_roots(const LieType& t);

// (h, h_dual): 1 + height of the highest root, and 1 + height of its coroot
// in the simple-coroot basis.
std::pair<int, int> coxeter_numbers(const LieType& t);

// Number of node permutations preserving the Cartan matrix (rank <= 8).
int diagram_automorphism_count(const LieType& t);

// #roots + rank.
long lie_dimension(const LieType& t);

// Ambient matrix of the reflection in a nonzero vector.
RatMat reflection_matrix(const RatVec& alpha);

// Lexicographic comparison of exact rational vectors.
bool vec_less(const RatVec& a, const RatVec& b);

}  // namespace qlie
