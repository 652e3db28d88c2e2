#pragma once

#include <cstdint>
#include <string_view>

namespace wqo {

// splitmix64. Streams are derived from (seed, name, index) so that instance
// k of a check draws the same numbers however checks are scheduled.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0. Rejection keeps it exact.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return v % n;
  }

  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return next() >> 63; }

  static Rng derive(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : stream) h = (h ^ c) * 0x100000001b3ULL;
    Rng mix(seed ^ h);
    mix.next();
    return Rng(mix.next() ^ (index * 0xd1b54a32d192ed03ULL));
  }

 private:
  std::uint64_t state_;
};

}  // namespace wqo
