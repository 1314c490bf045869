#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace px3 {

// Seeded RNG wrapper. All randomized code in the library and CLI draws from
// this so that a fixed seed reproduces byte-identical output everywhere.
// Bounded draws and shuffles are hand-rolled on top of the raw engine because
// the standard distributions are not pinned down across implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // uniform in [0, n), n >= 1
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  // uniform in [lo, hi] inclusive
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  // uniform in [0, 1)
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(below(i + 1))]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace px3
