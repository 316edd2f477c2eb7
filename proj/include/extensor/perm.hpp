#pragma once

#include <string>
#include <vector>

namespace extensor {

// A finitely supported permutation of {1,2,3,...} in one-line notation.
// Canonical form trims trailing fixed points, so the natural inclusions
// S_0 < S_1 < ... < S_infinity are identity maps on representatives.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity() { return Perm(); }
  static Perm transposition(int a, int b);
  static Perm adjacent(int i) { return transposition(i, i + 1); }
  // (a_1 a_2 ... a_k) mapping a_1 -> a_2 -> ... -> a_k -> a_1.
  static Perm cycle(const std::vector<int>& pts);
  // Reversal of {1..p}: k -> p+1-k.
  static Perm reversal(int p);
  // Parses cycle notation "(1 2)(3 4 5)"; "()" or "" is the identity.
  static Perm parse(const std::string& s);

  int operator()(int k) const {
    return (k >= 1 && k <= static_cast<int>(img_.size())) ? img_[k - 1] : k;
  }
  // Smallest m with sigma(k)=k for all k>m.
  int max_moved() const { return static_cast<int>(img_.size()); }
  bool is_identity() const { return img_.empty(); }

  // (a*b)(k) = a(b(k)).
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  int sign() const;

  // alpha^k: fixes 1..k and acts as this on the shifted points,
  // alpha(s_i) = s_{i+1}.
  Perm alpha(int k) const;

  // Cycle lengths (including fixed points) as a weakly decreasing list;
  // requires max_moved() <= p.
  std::vector<int> cycle_lengths(int p) const;

  std::string cycles_str() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  // Deterministic order: by support size, then one-line notation.
  bool operator<(const Perm& o) const {
    if (img_.size() != o.img_.size()) return img_.size() < o.img_.size();
    return img_ < o.img_;
  }

  const std::vector<int>& images() const { return img_; }

 private:
  void trim();
  std::vector<int> img_;
};

// All of S_p in a deterministic order (lexicographic one-line).
std::vector<Perm> symmetric_group(int p);

}  // namespace extensor
