// Characters and partition sums: Schur characters by Jacobi-Trudi and
// bialternant, the truncated q-deformed Yang-Mills sum, the black-hole
// norm square via character orthogonality, Haar Monte Carlo overlaps on
// U(2), the Catalan multi-center sum, and the coupling-to-q map.
#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "qlie/laurent.hpp"

namespace qlie {

using Cplx = std::complex<double>;
using Spectrum = std::vector<Cplx>;  // eigenvalues of the holonomy U

// All partitions with total size <= max_total and length <= max_len, in a
// fixed deterministic order (by size, then lexicographically descending).
std::vector<std::vector<long>> all_partitions(long max_total, int max_len);

// Schur polynomial s_lambda(x_1..x_N) via the Jacobi-Trudi determinant in
// the complete homogeneous symmetric functions.
Cplx schur_jacobi_trudi(const std::vector<long>& partition, const Spectrum& x);

// Same value via the bialternant ratio; requires distinct eigenvalues.
Cplx schur_bialternant(const std::vector<long>& partition, const Spectrum& x);

// Character of the unitary-group representation labelled by the partition.
Cplx character(const std::vector<long>& partition, const Spectrum& x);

struct ZqymResult {
  Cplx value;
  long terms = 0;
  long cutoff = 0;
};

// Truncated sum over reps of evaluate(dim_q) * character.  N = 1 uses the
// integer labels n in [-cutoff, cutoff] (every U(1) label has dim_q = 1);
// N >= 2 sums over partitions with at most N rows and |lambda| <= cutoff.
// Truncation is explicit: convergence is the caller's concern.
ZqymResult z_qym(int N, Cplx q_value, const Spectrum& spectrum, long cutoff);

// Coefficient map of Z_top on one stack: partition -> complex coefficient.
using TopCoefficients = std::map<std::vector<long>, Cplx>;

// sum_R |c_R|^2 by character orthogonality.
double z_blackhole(const TopCoefficients& coeffs);

// Product over independent stacks.
double z_blackhole_stacks(const std::vector<TopCoefficients>& stacks);

struct McEstimate {
  Cplx value;
  double stderr_ = 0.0;
  long samples = 0;
  uint64_t seed = 0;
};

// Monte Carlo estimate of  int dU chi_r1(U) conj(chi_r2(U))  over Haar U(2).
McEstimate haar_mc_overlap(const std::vector<long>& r1,
                           const std::vector<long>& r2, int N, long samples,
                           uint64_t seed);

// One Haar-distributed U(2) eigenvalue pair for the given sample stream.
Spectrum haar_u2_eigenvalues(uint64_t seed, uint64_t index);

// sum_{k=1..k_max} C_{k-1} (sum_i e^{S_i})^k.
double multicenter_sum(const std::vector<double>& entropies, long k_max);

// g = 2 pi i / beta_eta, q = exp(-g).
std::pair<Cplx, Cplx> coupling_to_q(Cplx beta_eta);

}  // namespace qlie
