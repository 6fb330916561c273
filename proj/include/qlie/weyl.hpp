// Weyl groups as exact rational matrix groups: orders by degree product,
// breadth-first enumeration, orbit-stabilizer recursion on root sets, orbits
// of weight vectors, generalized Catalan numbers, and root-lattice
// automorphism counts with a backtracking isometry oracle.
#pragma once

#include <vector>

#include "qlie/ratlin.hpp"
#include "qlie/rootsys.hpp"

namespace qlie {

struct WeylGroup {
  LieType type;
  std::vector<RatMat> generators;  // simple reflections in ambient coordinates
  std::vector<int> degrees;        // fundamental degrees d_1..d_rank
};

WeylGroup weyl_group(const LieType& t);

std::vector<int> fundamental_degrees(const LieType& t);

// Product of the fundamental degrees.
BigInt weyl_order(const LieType& t);

// Breadth-first closure of the generator matrices; rank <= 4.
BigInt weyl_order_enumerated(const LieType& t);

// Full element list as matrices; rank <= 4.
std::vector<RatMat> weyl_elements(const LieType& t);

// |W| by recursive orbit-stabilizer on the root set: the stabilizer of a
// root is the reflection group of the roots orthogonal to it.
BigInt weyl_order_orbit_stabilizer(const LieType& t);

struct OrbitResult {
  RatVec seed;
  std::vector<RatVec> elements;               // sorted lexicographically
  std::vector<std::vector<int>> words;        // generator word per element,
                                              // applied left to right to seed;
                                              // empty unless requested
};

// Orbit of an ambient vector under the simple reflections.  Throws on
// dimension mismatch or when the orbit exceeds max_size.
OrbitResult weyl_orbit(const LieType& t, const RatVec& seed,
                       bool with_words = false, size_t max_size = 2000000);

// C_k = binom(2k, k)/(k+1).
BigInt catalan(long k);

// Cat(W) = prod_i (h + d_i)/d_i.
BigInt weyl_catalan(const LieType& t);

// |W| * diagram_automorphism_count.
BigInt lattice_automorphism_order(const LieType& t);

// Backtracking count of Gram-preserving images of the simple-root basis
// inside the root set; rank <= 4.
BigInt lattice_automorphism_enumerated(const LieType& t);

}  // namespace qlie
