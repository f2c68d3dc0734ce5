#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace semiframe {

// Deterministic random source. std::mt19937_64 supplies the bit stream, but
// the float mappings are spelled out here instead of using the standard
// distributions, whose output is implementation defined. Two runs with the
// same seed therefore produce identical doubles.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = gen_();
    while (x >= limit) x = gen_();
    return x % n;
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Standard normal via Box-Muller; one spare value is cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    const double v = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double theta = 6.28318530717958647692 * v;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  std::complex<double> complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  // Uniform point on the unit sphere of C^d (normalized Gaussian draw).
  std::vector<std::complex<double>> unit_vector(std::size_t d) {
    std::vector<std::complex<double>> v(d);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (auto& z : v) {
        z = complex_gaussian();
        norm2 += std::norm(z);
      }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : v) z *= inv;
    return v;
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Stable stream splitting: derives a child seed from a base seed, a text tag
// and an index, so independent components never share a stream by accident.
[[nodiscard]] inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag,
                                            std::uint64_t index = 0) {
  std::uint64_t h = 14695981039346656037ull ^ seed;
  auto feed = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (const char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  feed(index);
  // Final avalanche (splitmix64 tail) so nearby indices decorrelate.
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 31;
  return h;
}

}  // namespace semiframe
