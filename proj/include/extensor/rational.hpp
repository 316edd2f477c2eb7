#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace extensor {

// Exact arbitrary-precision rationals. All scalar arithmetic in the library
// goes through this type; there is no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "a" or "a/b".
inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

inline Rat rat_factorial(int k) {
  Rat r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

// Small deterministic RNG for seeded test fixtures (splitmix64).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rat rational(long lo, long hi) { return Rat(range(lo, hi)); }

 private:
  std::uint64_t state_;
};

}  // namespace extensor
