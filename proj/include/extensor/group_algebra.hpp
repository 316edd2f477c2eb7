#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "extensor/perm.hpp"
#include "extensor/ring.hpp"

namespace extensor {

// Sparse element of CS_infinity with coefficients in a ring R. Zero
// coefficients are never stored; iteration order is the deterministic Perm
// order, so printing and serialization are reproducible.
//
// R = Rat gives CS_p itself; R = PBW gives CS_p (x) U(gl_n), R = WeylElem
// gives CS_p (x) the Weyl algebra, etc. The group part always commutes with
// the coefficient ring.
template <class R = Rat>
class GroupAlg {
 public:
  GroupAlg() = default;

  static GroupAlg unit() { return of(Perm()); }
  static GroupAlg of(const Perm& s) { return of(s, ring_one<R>()); }
  static GroupAlg of(const Perm& s, const R& c) {
    GroupAlg g;
    g.add_term(s, c);
    return g;
  }

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<Perm, R>& terms() const { return t_; }

  // Max moved point over the support.
  int degree() const {
    int d = 0;
    for (const auto& [s, c] : t_) d = std::max(d, s.max_moved());
    return d;
  }

  void add_term(const Perm& s, const R& c) {
    if (ring_is_zero(c)) return;
    auto it = t_.find(s);
    if (it == t_.end()) {
      t_.emplace(s, c);
    } else {
      it->second = it->second + c;
      if (ring_is_zero(it->second)) t_.erase(it);
    }
  }

  R coeff(const Perm& s) const {
    auto it = t_.find(s);
    return it == t_.end() ? R() : it->second;
  }

  GroupAlg operator+(const GroupAlg& o) const {
    GroupAlg r = *this;
    for (const auto& [s, c] : o.t_) r.add_term(s, c);
    return r;
  }
  GroupAlg operator-(const GroupAlg& o) const {
    GroupAlg r = *this;
    for (const auto& [s, c] : o.t_) r.add_term(s, ring_scale(c, Rat(-1)));
    return r;
  }
  GroupAlg operator*(const GroupAlg& o) const {
    GroupAlg r;
    for (const auto& [s1, c1] : t_)
      for (const auto& [s2, c2] : o.t_) r.add_term(s1 * s2, c1 * c2);
    return r;
  }
  GroupAlg scale(const Rat& c) const {
    GroupAlg r;
    if (rat_is_zero(c)) return r;
    for (const auto& [s, v] : t_) r.add_term(s, ring_scale(v, c));
    return r;
  }
  GroupAlg scale_ring(const R& c) const {  // right multiplication by 1 (x) c
    GroupAlg r;
    for (const auto& [s, v] : t_) r.add_term(s, v * c);
    return r;
  }
  bool operator==(const GroupAlg& o) const { return t_ == o.t_; }
  bool operator!=(const GroupAlg& o) const { return !(t_ == o.t_); }

  // The circ antiautomorphism: sigma -> sigma^{-1}, identity on R.
  GroupAlg circ() const {
    GroupAlg r;
    for (const auto& [s, c] : t_) r.add_term(s.inverse(), c);
    return r;
  }

  // Termwise alpha^k shift.
  GroupAlg alpha(int k) const {
    GroupAlg r;
    for (const auto& [s, c] : t_) r.add_term(s.alpha(k), c);
    return r;
  }

  // g^{-1} * this * g.
  GroupAlg conjugated(const Perm& g) const {
    GroupAlg r;
    Perm gi = g.inverse();
    for (const auto& [s, c] : t_) r.add_term(gi * s * g, c);
    return r;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : t_) {
      if (!first) os << " + ";
      first = false;
      os << ring_str(c) << "*" << s.cycles_str();
    }
    return os.str();
  }

 private:
  std::map<Perm, R> t_;
};

using GAElem = GroupAlg<Rat>;

template <class R>
struct RingTraits<GroupAlg<R>> {
  static GroupAlg<R> one() { return GroupAlg<R>::unit(); }
  static bool is_zero(const GroupAlg<R>& g) { return g.is_zero(); }
  static GroupAlg<R> scale(const GroupAlg<R>& g, const Rat& c) { return g.scale(c); }
  static std::string str(const GroupAlg<R>& g) { return g.to_string(); }
};

// s_I = (1/I!) sum over the stabilizer of the word I in S_p (p = |I|).
GAElem stabilizer_idempotent(const std::vector<int>& word);

// Stabilizer subgroup (S_p)_I as a list of permutations. Cached; the
// returned reference stays valid for the process lifetime.
const std::vector<Perm>& word_stabilizer(const std::vector<int>& word);

enum class JMKind { X, XCirc, Y };

// Jucys-Murphy style sums in CS_p:
//   x_k = (1 k) + ... + (k-1 k),     x_1 = 0
//   x°_k = sum_{i<k} (p-i+1  p-k+1)
//   y_k = (1 2) + (1 3) + ... + (1 k)
GAElem jucys_murphy(JMKind kind, int k, int p);

}  // namespace extensor
