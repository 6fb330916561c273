#include "qlie/matmodel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qlie/rng.hpp"

namespace qlie {

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676656;

double eval_poly(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

// Leading (degree, coefficient) after trimming zero tails.
std::pair<long, double> leading_term(const std::vector<double>& coeffs) {
  for (size_t k = coeffs.size(); k-- > 0;)
    if (coeffs[k] != 0.0) return {static_cast<long>(k), coeffs[k]};
  return {0, 0.0};
}

struct Flattened {
  std::vector<int> node_of;                 // flat index -> node
  std::vector<double> sigma;                // importance width per node
  std::vector<std::vector<double>> expo;    // node-pair exponents
  bool has_negative = false;
};

Flattened flatten(const ModelSpec& spec) {
  Flattened f;
  f.expo = pair_exponents(spec);
  for (size_t a = 0; a < spec.node_sizes.size(); ++a)
    for (long i = 0; i < spec.node_sizes[a]; ++i)
      f.node_of.push_back(static_cast<int>(a));
  for (const std::vector<double>& v : spec.potentials) {
    auto [m, c] = leading_term(v);
    f.sigma.push_back(std::pow(spec.g / (2.0 * c), 1.0 / m));
  }
  for (const auto& row : f.expo)
    for (double e : row)
      if (e < 0.0) f.has_negative = true;
  return f;
}

// Joint weight of one eigenvalue configuration relative to the sampling
// density: prod_a sqrt(2 pi sigma_a^2) e^{l^2/(2 sigma_a^2) - V_a(l)/g}
// times the pair factors.
double config_weight(const ModelSpec& spec, const Flattened& f,
                     const std::vector<double>& lam) {
  double w = 1.0;
  for (size_t i = 0; i < lam.size(); ++i) {
    int a = f.node_of[i];
    double s = f.sigma[a];
    double expo = lam[i] * lam[i] / (2.0 * s * s) -
                  eval_poly(spec.potentials[a], lam[i]) / spec.g;
    w *= std::sqrt(kTwoPi) * s * std::exp(expo);
  }
  for (size_t i = 0; i < lam.size(); ++i)
    for (size_t j = i + 1; j < lam.size(); ++j) {
      double c = f.expo[f.node_of[i]][f.node_of[j]];
      double d = lam[i] - lam[j];
      if (c < 0.0)
        w *= std::pow(d * d + spec.epsilon * spec.epsilon, c / 2.0);
      else if (c != 0.0)
        w *= std::pow(std::fabs(d), c);
    }
  return w;
}

// Bare integrand (no sampling-density division), for the quadrature route.
double integrand(const ModelSpec& spec, const Flattened& f,
                 const std::vector<double>& lam) {
  double w = 1.0;
  for (size_t i = 0; i < lam.size(); ++i) {
    int a = f.node_of[i];
    w *= std::exp(-eval_poly(spec.potentials[a], lam[i]) / spec.g);
  }
  for (size_t i = 0; i < lam.size(); ++i)
    for (size_t j = i + 1; j < lam.size(); ++j) {
      double c = f.expo[f.node_of[i]][f.node_of[j]];
      double d = lam[i] - lam[j];
      if (c < 0.0)
        w *= std::pow(d * d + spec.epsilon * spec.epsilon, c / 2.0);
      else if (c != 0.0)
        w *= std::pow(std::fabs(d), c);
    }
  return w;
}

void require_regulated(const ModelSpec& spec, const Flattened& f) {
  if (f.has_negative && spec.epsilon == 0.0)
    throw std::invalid_argument(
        "matrix model: negative pair exponents need epsilon > 0");
}

}  // namespace

void validate_model(const ModelSpec& spec) {
  validate_lie_type(spec.type);
  size_t rank = static_cast<size_t>(spec.type.rank);
  if (spec.node_sizes.size() != rank)
    throw std::invalid_argument("matrix model: need one node size per node");
  for (long n : spec.node_sizes)
    if (n < 1)
      throw std::invalid_argument("matrix model: node sizes must be >= 1");
  if (spec.potentials.size() != rank)
    throw std::invalid_argument("matrix model: need one potential per node");
  if (!(spec.g > 0.0))
    throw std::invalid_argument("matrix model: coupling must be positive");
  if (spec.epsilon < 0.0)
    throw std::invalid_argument("matrix model: epsilon must be >= 0");
  for (const std::vector<double>& v : spec.potentials) {
    auto [m, c] = leading_term(v);
    if (m < 2 || m % 2 != 0 || c <= 0.0)
      throw std::invalid_argument(
          "matrix model: potential needs an even leading degree >= 2 with "
          "positive leading coefficient");
  }
}

std::vector<std::vector<double>> pair_exponents(const ModelSpec& spec) {
  validate_lie_type(spec.type);
  size_t rank = static_cast<size_t>(spec.type.rank);
  std::vector<std::vector<double>> c(rank, std::vector<double>(rank, 0.0));
  if (spec.use_cartan_exponents) {
    IntMat a_mat = cartan_matrix(spec.type);
    for (size_t a = 0; a < rank; ++a)
      for (size_t b = 0; b < rank; ++b)
        c[a][b] = (static_cast<double>(a_mat[a][b]) +
                   static_cast<double>(a_mat[b][a])) /
                  2.0;
    return c;
  }
  std::vector<RatVec> alpha = simple_roots(spec.type);
  for (size_t a = 0; a < rank; ++a)
    for (size_t b = 0; b < rank; ++b) {
      Rational dot = 0;
      for (size_t k = 0; k < alpha[a].size(); ++k)
        dot += alpha[a][k] * alpha[b][k];
      c[a][b] = dot.get_d();
    }
  return c;
}

Estimate z_matrix_model(const ModelSpec& spec, long samples, uint64_t seed,
                        int threads) {
  validate_model(spec);
  if (samples < 1)
    throw std::invalid_argument("matrix model: samples must be >= 1");
  Flattened f = flatten(spec);
  require_regulated(spec, f);
  size_t dim = f.node_of.size();

  // One weight slot per sample; summation happens serially afterwards so
  // the result is identical for any thread count.
  std::vector<double> weights(static_cast<size_t>(samples));
  auto worker = [&](long lo, long hi) {
    std::vector<double> lam(dim);
    for (long s = lo; s < hi; ++s) {
      SplitMix64 rng = sample_stream(seed, static_cast<uint64_t>(s));
      for (size_t i = 0; i < dim; ++i)
        lam[i] = f.sigma[f.node_of[i]] * rng.normal();
      weights[static_cast<size_t>(s)] = config_weight(spec, f, lam);
    }
  };

  int nthreads = threads > 0 ? threads
                             : static_cast<int>(std::min(
                                   8u, std::max(1u, std::thread::hardware_concurrency())));
  if (nthreads <= 1 || samples < 4096) {
    worker(0, samples);
  } else {
    std::vector<std::thread> pool;
    long chunk = (samples + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      long lo = t * chunk, hi = std::min(samples, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(worker, lo, hi);
    }
    for (std::thread& th : pool) th.join();
  }

  double sum = 0.0, sum_sq = 0.0;
  for (double w : weights) {
    sum += w;
    sum_sq += w * w;
  }
  Estimate out;
  out.samples = samples;
  out.seed = seed;
  out.method = "monte_carlo";
  out.value = sum / samples;
  double var = sum_sq / samples - out.value * out.value;
  out.stderr_ = std::sqrt(std::max(var, 0.0) / samples);
  return out;
}

namespace {

double trapezoid(const ModelSpec& spec, const Flattened& f, long n) {
  size_t dim = f.node_of.size();
  std::vector<double> half(dim), h(dim);
  for (size_t i = 0; i < dim; ++i) {
    half[i] = 6.0 * std::max(std::sqrt(spec.g), f.sigma[f.node_of[i]]);
    h[i] = 2.0 * half[i] / static_cast<double>(n - 1);
  }
  std::vector<long> idx(dim, 0);
  std::vector<double> lam(dim);
  double total = 0.0;
  while (true) {
    double wgrid = 1.0;
    for (size_t i = 0; i < dim; ++i) {
      lam[i] = -half[i] + h[i] * static_cast<double>(idx[i]);
      wgrid *= (idx[i] == 0 || idx[i] == n - 1) ? h[i] / 2.0 : h[i];
    }
    total += wgrid * integrand(spec, f, lam);
    size_t d = 0;
    while (d < dim && ++idx[d] == n) idx[d++] = 0;
    if (d == dim) break;
  }
  return total;
}

}  // namespace

Estimate quadrature_oracle(const ModelSpec& spec, long grid_points_per_dim) {
  validate_model(spec);
  if (grid_points_per_dim < 4)
    throw std::invalid_argument("quadrature: need at least 4 grid points");
  Flattened f = flatten(spec);
  require_regulated(spec, f);
  long total_eigen = 0;
  for (long n : spec.node_sizes) total_eigen += n;
  if (total_eigen > 3)
    throw std::invalid_argument("quadrature: at most 3 eigenvalues");
  double fine = trapezoid(spec, f, grid_points_per_dim);
  double coarse = trapezoid(spec, f, grid_points_per_dim / 2);
  Estimate out;
  out.value = fine;
  out.stderr_ = std::fabs(fine - coarse);
  out.samples = grid_points_per_dim;
  out.method = "quadrature";
  return out;
}

}  // namespace qlie
