#pragma once

#include <string>

#include "extensor/rational.hpp"

namespace extensor {

// The common ring contract used by the generic matrix functions and the
// tensor-algebra coefficient slots: associative unital, exact equality,
// rational scalar action. A ring type R provides +, -, *, ==, a default
// constructor meaning zero, and specializations of the helpers below.
template <class R>
struct RingTraits {
  static R one() { return R::one(); }
  static bool is_zero(const R& r) { return r.is_zero(); }
  static R scale(const R& r, const Rat& c) { return r.scale(c); }
  static std::string str(const R& r) { return r.to_string(); }
};

template <>
struct RingTraits<Rat> {
  static Rat one() { return Rat(1); }
  static bool is_zero(const Rat& r) { return sgn(r) == 0; }
  static Rat scale(const Rat& r, const Rat& c) { return r * c; }
  static std::string str(const Rat& r) { return rat_str(r); }
};

template <class R>
R ring_one() {
  return RingTraits<R>::one();
}
template <class R>
bool ring_is_zero(const R& r) {
  return RingTraits<R>::is_zero(r);
}
template <class R>
R ring_scale(const R& r, const Rat& c) {
  return RingTraits<R>::scale(r, c);
}
template <class R>
std::string ring_str(const R& r) {
  return RingTraits<R>::str(r);
}

}  // namespace extensor
