#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "idkit/vec.hpp"

namespace idkit {

// Seeded sampler producing exact rational points. All derivation from the
// engine output is hand-rolled so streams are identical across platforms.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, n), n >= 1. Mask rejection keeps the draw unbiased.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      const std::uint64_t v = eng_() & mask;
      if (v < n) return v;
    }
  }

  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform k / 2^bits with k in [-2^bits, 2^bits].
  Rat rat_unit(unsigned bits = 12) {
    const long long den = 1LL << bits;
    return Rat(int_in(-den, den)) / Rat(den);
  }

  // Point of the closed box of the given radius around center.
  Vec box_point(const Vec& center, const Rat& radius, unsigned bits = 12) {
    Vec p(center.dim());
    for (std::size_t i = 0; i < p.dim(); ++i)
      p.e[i] = center[i] + radius * rat_unit(bits);
    return p;
  }

  // Point of the closed Euclidean ball of the given radius around center.
  Vec ball_point(const Vec& center, const Rat& radius, unsigned bits = 12) {
    const long long den = 1LL << bits;
    const Rat den2 = Rat(den) * Rat(den);
    const std::size_t n = center.dim();
    for (;;) {
      std::vector<long long> k(n);
      Rat s(0);
      for (std::size_t i = 0; i < n; ++i) {
        k[i] = int_in(-den, den);
        s += Rat(k[i]) * Rat(k[i]);
      }
      if (s > den2) continue;
      Vec p(n);
      for (std::size_t i = 0; i < n; ++i)
        p.e[i] = center[i] + radius * Rat(k[i]) / Rat(den);
      return p;
    }
  }

 private:
  std::mt19937_64 eng_;
};

// Halved radii r0 * 2^-k for k = 0..levels-1.
inline std::vector<Rat> radius_schedule(const Rat& r0, int levels = 13) {
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(levels));
  Rat r = r0;
  for (int k = 0; k < levels; ++k) {
    out.push_back(r);
    r /= 2;
  }
  return out;
}

}  // namespace idkit
