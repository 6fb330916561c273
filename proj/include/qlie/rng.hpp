// Counter-based random streams: every sample index gets its own generator
// seeded by a mix of (seed, index), so results are identical no matter how
// samples are scheduled across threads.
#pragma once

#include <cmath>
#include <cstdint>

namespace qlie {

class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(next() >> 12) + 0.5) * 0x1.0p-52;
  }

  // Standard normal pair by Box-Muller (fixed draw count per call).
  void normal2(double& a, double& b) {
    double u1 = uniform(), u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    a = r * std::cos(6.283185307179586476925287 * u2);
    b = r * std::sin(6.283185307179586476925287 * u2);
  }

  double normal() {
    double a, b;
    normal2(a, b);
    return a;
  }

 private:
  uint64_t state_;
};

// Stream for one sample: decorrelates (seed, index) pairs before seeding.
inline SplitMix64 sample_stream(uint64_t seed, uint64_t index) {
  SplitMix64 h(seed ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
  return SplitMix64(h.next());
}

}  // namespace qlie
