#pragma once

#include <map>
#include <string>
#include <vector>

#include "extensor/ring.hpp"

namespace extensor {

// Generator E_ij of gl_n. Total order: lowering (i>j) < Cartan (i=j) <
// raising (i<j), lexicographic within a class — chosen so Harish-Chandra
// evaluation is a term filter on normal forms.
struct PBWGen {
  int i, j;
  int cls() const { return i > j ? 0 : (i == j ? 1 : 2); }
  bool operator<(const PBWGen& o) const {
    if (cls() != o.cls()) return cls() < o.cls();
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
  bool operator==(const PBWGen& o) const { return i == o.i && j == o.j; }
  bool operator>(const PBWGen& o) const { return o < *this; }
};

using PBWMono = std::vector<PBWGen>;  // sorted by the total order

// Element of U(gl_n) in PBW normal form: sparse rational combination of
// ordered monomials; equality is map equality (PBW theorem).
class PBW {
 public:
  PBW() = default;

  static PBW one() { return constant(Rat(1)); }
  static PBW constant(const Rat& c);
  static PBW gen(int i, int j);
  // E_ij(u) = E_ij + delta_ij u.
  static PBW gen_shifted(int i, int j, const Rat& u);

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<PBWMono, Rat>& terms() const { return t_; }
  Rat coeff(const PBWMono& m) const;

  PBW operator+(const PBW& o) const;
  PBW operator-(const PBW& o) const;
  PBW operator*(const PBW& o) const;
  PBW scale(const Rat& c) const;
  bool operator==(const PBW& o) const { return t_ == o.t_; }
  bool operator!=(const PBW& o) const { return !(t_ == o.t_); }

  PBW commutator(const PBW& o) const { return *this * o - o * *this; }

  // Algebra automorphism from a gl_n automorphism E_ij -> image(i,j).
  PBW map_generators(const std::function<PBW(int, int)>& image) const;

  // gl_n weight of a monomial: wt[k] = (number of E_k.) - (number of E_.k).
  static std::vector<int> monomial_weight(const PBWMono& m, int n);

  void add_term(PBWMono m, const Rat& c);
  // Normal-orders an arbitrary generator word.
  static PBW normal_order(const std::vector<PBWGen>& word, const Rat& coeff);

  std::string to_string() const;  // "2 E21 E12 + E11"

 private:
  std::map<PBWMono, Rat> t_;
};

template <>
struct RingTraits<PBW> {
  static PBW one() { return PBW::one(); }
  static bool is_zero(const PBW& x) { return x.is_zero(); }
  static PBW scale(const PBW& x, const Rat& c) { return x.scale(c); }
  static std::string str(const PBW& x) { return x.to_string(); }
};

}  // namespace extensor
