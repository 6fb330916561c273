#include "qlie/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qlie/qgroup.hpp"
#include "qlie/rng.hpp"
#include "qlie/weyl.hpp"

namespace qlie {

namespace {

// Determinant of a dense complex matrix by LU with partial pivoting.
Cplx det_lu(std::vector<std::vector<Cplx>> m) {
  size_t n = m.size();
  Cplx det = 1.0;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (std::abs(m[piv][col]) == 0.0) return 0.0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      Cplx f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// h_0..h_kmax at the given spectrum, by Newton's identity
// k h_k = sum_{i=1..k} p_i h_{k-i} from the power sums p_i.
std::vector<Cplx> complete_homogeneous(const Spectrum& x, long kmax) {
  std::vector<Cplx> p(kmax + 1, 0.0), h(kmax + 1, 0.0);
  for (long k = 1; k <= kmax; ++k)
    for (const Cplx& xi : x) p[k] += std::pow(xi, static_cast<double>(k));
  h[0] = 1.0;
  for (long k = 1; k <= kmax; ++k) {
    Cplx s = 0.0;
    for (long i = 1; i <= k; ++i) s += p[i] * h[k - i];
    h[k] = s / static_cast<double>(k);
  }
  return h;
}

void check_label(const std::vector<long>& partition, size_t n_eigen) {
  long prev = -1;
  for (size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] < 0)
      throw std::invalid_argument("character: partition parts must be >= 0");
    if (i > 0 && partition[i] > prev)
      throw std::invalid_argument("character: parts must be non-increasing");
    prev = partition[i];
  }
  size_t rows = 0;
  for (long part : partition)
    if (part > 0) ++rows;
  if (rows > n_eigen)
    throw std::invalid_argument("character: more rows than eigenvalues");
}

void gen_partitions(long remaining, long max_part, int slots,
                    std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (slots == 0) return;
  for (long part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    gen_partitions(remaining - part, part, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> all_partitions(long max_total, int max_len) {
  if (max_total < 0 || max_len < 0)
    throw std::invalid_argument("all_partitions: negative bound");
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  for (long total = 0; total <= max_total; ++total)
    gen_partitions(total, total, max_len, cur, out);
  return out;
}

Cplx schur_jacobi_trudi(const std::vector<long>& partition, const Spectrum& x) {
  check_label(partition, x.size());
  std::vector<long> lam;
  for (long part : partition)
    if (part > 0) lam.push_back(part);
  if (lam.empty()) return 1.0;
  long ell = static_cast<long>(lam.size());
  std::vector<Cplx> h = complete_homogeneous(x, lam[0] + ell - 1);
  std::vector<std::vector<Cplx>> m(ell, std::vector<Cplx>(ell, 0.0));
  for (long i = 0; i < ell; ++i)
    for (long j = 0; j < ell; ++j) {
      long idx = lam[i] - i + j;
      if (idx >= 0) m[i][j] = h[idx];
    }
  return det_lu(m);
}

Cplx schur_bialternant(const std::vector<long>& partition, const Spectrum& x) {
  check_label(partition, x.size());
  long n = static_cast<long>(x.size());
  std::vector<long> lam(partition);
  lam.resize(n, 0);
  std::vector<std::vector<Cplx>> num(n, std::vector<Cplx>(n)),
      den(n, std::vector<Cplx>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      num[i][j] = std::pow(x[j], static_cast<double>(lam[i] + n - 1 - i));
      den[i][j] = std::pow(x[j], static_cast<double>(n - 1 - i));
    }
  Cplx vand = det_lu(den);
  if (std::abs(vand) == 0.0)
    throw std::invalid_argument("schur_bialternant: repeated eigenvalues");
  return det_lu(num) / vand;
}

Cplx character(const std::vector<long>& partition, const Spectrum& x) {
  return schur_jacobi_trudi(partition, x);
}

ZqymResult z_qym(int N, Cplx q_value, const Spectrum& spectrum, long cutoff) {
  if (N < 1) throw std::invalid_argument("z_qym: N must be >= 1");
  if (cutoff < 0) throw std::invalid_argument("z_qym: cutoff must be >= 0");
  if (static_cast<int>(spectrum.size()) != N)
    throw std::invalid_argument("z_qym: spectrum size must equal N");
  ZqymResult res;
  res.cutoff = cutoff;
  if (N == 1) {
    // Integer labels n in [-cutoff, cutoff]; every label has dim_q = 1 and
    // character z^n, so at z = e^{i theta} the sum is the Dirichlet kernel.
    Cplx z = spectrum[0];
    for (long n = -cutoff; n <= cutoff; ++n) {
      res.value += std::pow(z, static_cast<double>(n));
      ++res.terms;
    }
    return res;
  }
  for (const std::vector<long>& lam : all_partitions(cutoff, N)) {
    Cplx dq = qdim_typeA(lam, N).eval_q(q_value);
    res.value += dq * character(lam, spectrum);
    ++res.terms;
  }
  return res;
}

double z_blackhole(const TopCoefficients& coeffs) {
  double total = 0.0;
  for (const auto& [label, c] : coeffs) total += std::norm(c);
  return total;
}

double z_blackhole_stacks(const std::vector<TopCoefficients>& stacks) {
  double total = 1.0;
  for (const TopCoefficients& coeffs : stacks) total *= z_blackhole(coeffs);
  return total;
}

Spectrum haar_u2_eigenvalues(uint64_t seed, uint64_t index) {
  SplitMix64 rng = sample_stream(seed, index);
  // Complex Gaussian 2x2, orthonormalized with the R-diagonal phase fixed
  // to |.|, which makes Q exactly Haar on U(2).
  Cplx a, b, c, d;
  {
    double re, im;
    rng.normal2(re, im);
    a = Cplx(re, im);
    rng.normal2(re, im);
    b = Cplx(re, im);
    rng.normal2(re, im);
    c = Cplx(re, im);
    rng.normal2(re, im);
    d = Cplx(re, im);
  }
  // Gram-Schmidt on columns (a,c), (b,d) with positive-real normalizers.
  double n1 = std::sqrt(std::norm(a) + std::norm(c));
  Cplx q11 = a / n1, q21 = c / n1;
  Cplx proj = std::conj(q11) * b + std::conj(q21) * d;
  Cplx r12 = b - proj * q11, r22 = d - proj * q21;
  double n2 = std::sqrt(std::norm(r12) + std::norm(r22));
  Cplx q12 = r12 / n2, q22 = r22 / n2;
  // Eigenvalues from trace and determinant.
  Cplx tr = q11 + q22;
  Cplx det = q11 * q22 - q12 * q21;
  Cplx disc = std::sqrt(tr * tr - 4.0 * det);
  return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

McEstimate haar_mc_overlap(const std::vector<long>& r1,
                           const std::vector<long>& r2, int N, long samples,
                           uint64_t seed) {
  if (N != 2) throw std::invalid_argument("haar_mc_overlap: only N = 2");
  if (samples < 1000)
    throw std::invalid_argument("haar_mc_overlap: need >= 1000 samples");
  Cplx sum = 0.0;
  double sum_sq = 0.0;
  for (long i = 0; i < samples; ++i) {
    Spectrum eig = haar_u2_eigenvalues(seed, static_cast<uint64_t>(i));
    Cplx val = character(r1, eig) * std::conj(character(r2, eig));
    sum += val;
    sum_sq += std::norm(val);
  }
  McEstimate out;
  out.samples = samples;
  out.seed = seed;
  out.value = sum / static_cast<double>(samples);
  double var = sum_sq / samples - std::norm(out.value);
  out.stderr_ = std::sqrt(std::max(var, 0.0) / samples);
  return out;
}

double multicenter_sum(const std::vector<double>& entropies, long k_max) {
  if (k_max < 1) throw std::invalid_argument("multicenter_sum: k_max >= 1");
  double single = 0.0;
  for (double s : entropies) single += std::exp(s);
  double total = 0.0, power = 1.0;
  for (long k = 1; k <= k_max; ++k) {
    power *= single;
    total += catalan(k - 1).get_d() * power;
  }
  return total;
}

std::pair<Cplx, Cplx> coupling_to_q(Cplx beta_eta) {
  if (beta_eta == Cplx(0.0, 0.0))
    throw std::invalid_argument("coupling_to_q: beta_eta must be nonzero");
  Cplx g = Cplx(0.0, 2.0 * 3.14159265358979323846) / beta_eta;
  return {g, std::exp(-g)};
}

}  // namespace qlie
