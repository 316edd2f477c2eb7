#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

#include "extensor/ring.hpp"

namespace extensor {

// Lambda(V + V*) (x) R: signed exterior monomials in e_1..e_n, e*_1..e*_n
// with coefficients in a ring commuting with the generators. Monomials are
// canonicalized as (ascending e's, ascending e*'s) with the sorting sign.
template <class R = Rat>
class Ext {
 public:
  using Mask = std::uint32_t;  // bit k-1 = generator k present
  using Key = std::pair<Mask, Mask>;

  Ext() = default;

  static Ext zero() { return Ext(); }
  static Ext one() { return term(0, 0, ring_one<R>()); }
  static Ext e(int i) { return term(bit(i), 0, ring_one<R>()); }
  static Ext estar(int j) { return term(0, bit(j), ring_one<R>()); }
  static Ext scalar(const R& c) { return term(0, 0, c); }
  static Ext term(Mask es, Mask ss, const R& c) {
    Ext x;
    x.add(es, ss, c);
    return x;
  }

  bool is_zero() const { return t_.empty(); }
  const std::map<Key, R>& terms() const { return t_; }

  void add(Mask es, Mask ss, const R& c) {
    if (ring_is_zero(c)) return;
    Key k{es, ss};
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_.emplace(k, c);
    } else {
      it->second = it->second + c;
      if (ring_is_zero(it->second)) t_.erase(it);
    }
  }

  Ext operator+(const Ext& o) const {
    Ext r = *this;
    for (const auto& [k, c] : o.t_) r.add(k.first, k.second, c);
    return r;
  }
  Ext operator-(const Ext& o) const {
    Ext r = *this;
    for (const auto& [k, c] : o.t_) r.add(k.first, k.second, ring_scale(c, Rat(-1)));
    return r;
  }
  Ext scale(const Rat& c) const {
    Ext r;
    if (rat_is_zero(c)) return r;
    for (const auto& [k, v] : t_) r.t_.emplace(k, ring_scale(v, c));
    return r;
  }

  // All 2n generators mutually anticommute; R commutes with them.
  Ext operator*(const Ext& o) const {
    Ext r;
    for (const auto& [k1, c1] : t_)
      for (const auto& [k2, c2] : o.t_) {
        if ((k1.first & k2.first) || (k1.second & k2.second)) continue;
        // Crossings: each generator of the second monomial passes everything
        // in the first monomial that is canonically ordered after it.
        int cross = crossings(k1.first, k1.second, k2.first, k2.second);
        R c = c1 * c2;
        r.add(k1.first | k2.first, k1.second | k2.second, cross % 2 ? ring_scale(c, Rat(-1)) : c);
      }
    return r;
  }

  Ext pow(int k) const {
    Ext r = one();
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }
  // Divided power x^(k) = x^k / k!.
  Ext divided_power(int k) const { return pow(k).scale(Rat(1) / rat_factorial(k)); }

  bool operator==(const Ext& o) const { return t_ == o.t_; }
  bool operator!=(const Ext& o) const { return !(t_ == o.t_); }

  // Coefficient extraction: the canonical monomials form an orthonormal
  // basis of Lambda(V + V*), extended by <m, psi (x) a> = <m, psi> a.
  R pair_basis(Mask es, Mask ss) const {
    auto it = t_.find(Key{es, ss});
    return it == t_.end() ? R() : it->second;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << ring_str(c) << ")";
      for (int i = 1; i <= 32; ++i)
        if (k.first & bit(i)) os << " e" << i;
      for (int j = 1; j <= 32; ++j)
        if (k.second & bit(j)) os << " e*" << j;
    }
    return os.str();
  }

 private:
  static Mask bit(int i) {
    if (i < 1 || i > 32) throw std::out_of_range("Ext: generator index out of range");
    return Mask(1) << (i - 1);
  }

  // Number of transpositions needed to merge (sorted m1)(sorted m2) into the
  // canonical interleaving; generators ordered e_1 < ... < e_n < e*_1 < ...
  static int crossings(Mask e1, Mask s1, Mask e2, Mask s2) {
    int cross = 0;
    // Every e* in m1 must pass every e in m2.
    cross += popcount(s1) * popcount(e2);
    cross += inversions(e1, e2);
    cross += inversions(s1, s2);
    return cross;
  }
  // Pairs (x in a, y in b) with x > y.
  static int inversions(Mask a, Mask b) {
    int inv = 0;
    for (int i = 1; i <= 32; ++i) {
      if (!(b & (Mask(1) << (i - 1)))) continue;
      Mask higher = a & ~((Mask(1) << i) - 1);
      inv += popcount(higher);
    }
    return inv;
  }
  static int popcount(Mask m) { return __builtin_popcount(m); }

  std::map<Key, R> t_;
};

template <class R>
struct RingTraits<Ext<R>> {
  static Ext<R> one() { return Ext<R>::one(); }
  static bool is_zero(const Ext<R>& x) { return x.is_zero(); }
  static Ext<R> scale(const Ext<R>& x, const Rat& c) { return x.scale(c); }
  static std::string str(const Ext<R>& x) { return x.to_string(); }
};

}  // namespace extensor
