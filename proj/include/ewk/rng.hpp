#ifndef EWK_RNG_HPP
#define EWK_RNG_HPP

#include <cstdint>

#include "ewk/cosmos.hpp"

namespace ewk {

// SplitMix64. Self-contained so that seeded runs are reproducible across
// platforms and standard library versions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<uint64_t>(n)); }

  long int_in(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  Scalar scalar(const Field& f, long lo, long hi) { return Scalar(f, int_in(lo, hi)); }

  Mor matrix(const Field& f, Obj src, Obj dst, long lo, long hi) {
    Mor m(f, src, dst);
    for (int r = 0; r < dst.dim; ++r)
      for (int c = 0; c < src.dim; ++c) m.set(r, c, scalar(f, lo, hi));
    return m;
  }

 private:
  uint64_t state_;
};

}  // namespace ewk

#endif  // EWK_RNG_HPP
