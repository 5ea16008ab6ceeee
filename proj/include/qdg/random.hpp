#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace qdg {

  // Seeded generator with a portable bounded-integer draw, so sequences do
  // not depend on the standard library's distribution implementations.
  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    std::uint64_t next() {
      return _engine();
    }

    // Uniform in [0, n), n > 0.
    std::size_t index(std::size_t n) {
      auto const bound = static_cast<std::uint64_t>(n);
      auto const limit = std::numeric_limits<std::uint64_t>::max()
                         - std::numeric_limits<std::uint64_t>::max() % bound;
      std::uint64_t r;
      do {
        r = _engine();
      } while (r >= limit);
      return static_cast<std::size_t>(r % bound);
    }

    // Uniform in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) {
      return lo + index(hi - lo + 1);
    }

    bool coin() {
      return (_engine() >> 63) != 0;
    }

    template <typename T>
    void shuffle(std::vector<T>& xs) {
      for (std::size_t i = xs.size(); i > 1; --i) {
        std::swap(xs[i - 1], xs[index(i)]);
      }
    }

    std::vector<std::size_t> permutation(std::size_t n) {
      std::vector<std::size_t> p(n);
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = i;
      }
      shuffle(p);
      return p;
    }

   private:
    std::mt19937_64 _engine;
  };

}  // namespace qdg
