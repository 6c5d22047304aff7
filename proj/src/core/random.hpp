#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qle {

// Deterministic random source. std::mt19937_64 has a fully specified output
// sequence, but the standard distributions do not, so the transforms are done
// here by hand. The same (seed, call sequence) yields the same values on any
// platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; second value of each pair is cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // Uniform integer in [lo, hi], rejection sampled to avoid modulo bias.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t bound = std::uint64_t(-1) - std::uint64_t(-1) % range;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= bound);
    return lo + static_cast<std::int64_t>(x % range);
  }

  std::uint64_t raw() { return gen_(); }

private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace qle
