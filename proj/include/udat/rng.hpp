#ifndef UDAT_RNG_HPP
#define UDAT_RNG_HPP

#include <cstdint>
#include <vector>

namespace udat {

// Deterministic RNG used everywhere randomness is needed. Built on
// splitmix64 so streams are reproducible across platforms and standard
// library versions, which std::uniform_*_distribution does not guarantee.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  int int_range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool bernoulli(double p) { return uniform() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {  // Fisher-Yates
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Derive an independent child stream; used to give experiment cells
  // their own seeds from a master seed.
  Rng fork(uint64_t salt) {
    uint64_t s = state_ ^ (0x632be59bd9b4e019ULL * (salt + 1));
    Rng child(s);
    child.next_u64();
    return child;
  }

  static uint64_t derive_seed(uint64_t master, uint64_t salt) {
    Rng r(master ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
    return r.next_u64();
  }

 private:
  uint64_t state_;
};

}  // namespace udat

#endif
