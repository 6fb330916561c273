// The k-cut multi-matrix model in eigenvalue form: one eigenvalue block per
// Dynkin node, pair interactions |l_i - l_j|^{C(a,b)} with C the simple-root
// pairing, weight exp(-V_a/g).  Monte Carlo with Gaussian importance
// sampling plus an independent low-dimensional quadrature oracle.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlie/rootsys.hpp"

namespace qlie {

struct ModelSpec {
  LieType type;
  std::vector<long> node_sizes;               // N_a, one per node
  std::vector<std::vector<double>> potentials;  // V_a coefficients, index = power
  double g = 1.0;                             // coupling, > 0
  double epsilon = 0.0;                       // regulator for negative exponents
  bool use_cartan_exponents = false;          // raw Cartan entries instead of (a_i, a_j)
};

// Throws invalid_argument when sizes mismatch, g <= 0, epsilon < 0, or any
// potential fails the integrability test (even leading degree >= 2 with a
// positive leading coefficient).
void validate_model(const ModelSpec& spec);

// Symmetric node-pair exponent matrix: C[a][b] = (alpha_a, alpha_b) by
// default, or the symmetrized raw Cartan entry when the flag is set.
std::vector<std::vector<double>> pair_exponents(const ModelSpec& spec);

struct Estimate {
  double value = 0.0;
  double stderr_ = 0.0;
  long samples = 0;
  std::string method;  // "monte_carlo" or "quadrature"
  uint64_t seed = 0;
};

// Monte Carlo estimate of the eigenvalue integral.  Every unordered
// eigenvalue pair contributes |delta|^{C(a,b)}; negative exponents are
// regulated as (delta^2 + eps^2)^{C/2} and require epsilon > 0.  Results
// depend only on (spec, samples, seed), never on the thread count.
Estimate z_matrix_model(const ModelSpec& spec, long samples, uint64_t seed,
                        int threads = 0);

// Tensor-grid trapezoid over a box of half-width 6 * max(sqrt(g), sigma_a)
// per eigenvalue; at most 3 eigenvalues total.  stderr is the delta against
// the half-resolution grid.
Estimate quadrature_oracle(const ModelSpec& spec, long grid_points_per_dim);

}  // namespace qlie
