#ifndef POLARDIM_RNG_HPP
#define POLARDIM_RNG_HPP

#include <cstdint>
#include <random>

namespace polardim {

/// SplitMix64 step; used to derive independent sub-stream seeds from a
/// master seed so that parallel replicates are reproducible bit-for-bit
/// regardless of scheduling.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a) {
  return splitmix64(splitmix64(master) ^ splitmix64(a ^ 0xD6E8FEB86659FD93ull));
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  return derive_seed(derive_seed(master, a), b);
}

/// Uniform double in [0,1) from the top 53 bits of the generator output.
/// std::uniform_real_distribution is implementation-defined; this is not,
/// so seeded results are identical across standard libraries.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform index in [0, n) by rejection; portable for the same reason.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace polardim

#endif  // POLARDIM_RNG_HPP
