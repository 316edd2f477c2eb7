#pragma once

#include <map>
#include <string>
#include <vector>

#include "extensor/pbw.hpp"
#include "extensor/ring.hpp"
#include "extensor/ring_matrix.hpp"

namespace extensor {

// Polynomial-coefficient differential operators on C^n (x) C^n', with
// variables x_{ik} and derivations d_{ik}. Normal order: multiplication
// operators left of derivations; the rewrite d x = x d + 1 is applied
// through the closed contraction formula in the product.
//
// A monomial maps variable (i,k) to its exponent, separately for x and d.
struct WeylMono {
  using Expo = std::map<std::pair<int, int>, int>;
  Expo xs, ds;
  bool operator<(const WeylMono& o) const {
    if (xs != o.xs) return xs < o.xs;
    return ds < o.ds;
  }
  bool operator==(const WeylMono& o) const { return xs == o.xs && ds == o.ds; }
};

class WeylElem {
 public:
  WeylElem() = default;

  static WeylElem one() { return constant(Rat(1)); }
  static WeylElem constant(const Rat& c);
  static WeylElem x(int i, int k);
  static WeylElem d(int i, int k);

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<WeylMono, Rat>& terms() const { return t_; }

  WeylElem operator+(const WeylElem& o) const;
  WeylElem operator-(const WeylElem& o) const;
  WeylElem operator*(const WeylElem& o) const;
  WeylElem scale(const Rat& c) const;
  bool operator==(const WeylElem& o) const { return t_ == o.t_; }
  bool operator!=(const WeylElem& o) const { return !(t_ == o.t_); }

  void add_term(WeylMono m, const Rat& c);

  std::string to_string() const;

 private:
  std::map<WeylMono, Rat> t_;
};

template <>
struct RingTraits<WeylElem> {
  static WeylElem one() { return WeylElem::one(); }
  static bool is_zero(const WeylElem& x) { return x.is_zero(); }
  static WeylElem scale(const WeylElem& x, const Rat& c) { return x.scale(c); }
  static std::string str(const WeylElem& x) { return x.to_string(); }
};

// pi(E_ij) = sum_k x_{ik} d_{jk}; extended multiplicatively to U(gl_n).
WeylElem pi_poly(const PBW& u, int nprime);

// Coordinate and derivation matrices X, D in Mat_{n,n'}.
RingMatrix<WeylElem> x_matrix(int n, int nprime);
RingMatrix<WeylElem> d_matrix(int n, int nprime);

}  // namespace extensor
