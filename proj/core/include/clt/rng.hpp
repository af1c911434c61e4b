#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace clt {

// splitmix64 finalizer; used to derive independent stream seeds from
// (master_seed, stream_index) so replicate sets are order-independent.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix64(master ^ mix64(stream + 1));
}

// Seeded random stream. Wraps mt19937_64 and provides the few variates the
// library needs, implemented explicitly so output is reproducible across
// standard-library versions.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : eng_(seed) {}
  RngStream(std::uint64_t master, std::uint64_t stream)
      : eng_(derive_seed(master, stream)) {}

  std::uint64_t next_u64() { return eng_(); }

  // uniform on [0,1) with 53 random bits
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Marsaglia polar method with one cached spare
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  int uniform_int(int n) {  // uniform on {0,...,n-1}
    return static_cast<int>(eng_() % static_cast<std::uint64_t>(n));
  }

  // samples an index from a discrete distribution given its probabilities
  template <class Vec>
  int categorical(const Vec& probs) {
    double u = uniform01();
    double acc = 0.0;
    const int m = static_cast<int>(probs.size());
    for (int i = 0; i < m; ++i) {
      acc += probs[i];
      if (u < acc) return i;
    }
    return m - 1;
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace clt
