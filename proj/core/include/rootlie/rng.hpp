#ifndef ROOTLIE_RNG_HPP
#define ROOTLIE_RNG_HPP

#include <cstdint>
#include <random>

namespace rootlie {

/// mt19937_64 with a bounded draw that does not depend on the standard
/// library's distribution implementation, so seeds reproduce across
/// toolchains.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) {
      return static_cast<std::int64_t>(engine_());
    }
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

  bool coin(int percent) { return uniform(0, 99) < percent; }

private:
  std::mt19937_64 engine_;
};

}  // namespace rootlie

#endif
