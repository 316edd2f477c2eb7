#pragma once

#include <map>

#include "extensor/group_algebra.hpp"
#include "extensor/partition.hpp"
#include "extensor/perm.hpp"

namespace extensor {

// Irreducible character of S_p at a conjugacy class, |lambda| = |type| = p.
// Murnaghan-Nakayama with memoization on (partition, cycle type).
Rat character(const Partition& lambda, const Partition& type);
Rat character(const Partition& lambda, const Perm& sigma, int p);

// chi_lambda(1), the dimension of the irreducible.
Rat character_dim(const Partition& lambda);

// Linear extension chi_lambda(t (x) a) = chi_lambda(t) a.
template <class R>
R chi_apply(const Partition& lambda, const GroupAlg<R>& t, int p) {
  R out{};
  for (const auto& [s, c] : t.terms()) {
    if (s.max_moved() > p) throw std::invalid_argument("chi_apply: support exceeds S_p");
    out = out + ring_scale(c, character(lambda, s, p));
  }
  return out;
}
inline Rat chi_apply(const Partition& lambda, const GAElem& t, int p) {
  return chi_apply<Rat>(lambda, t, p);
}

enum class CentralKind { STilde, HTilde, PTilde };

// Central elements of CS_p:
//   s~_lambda = (1/p!) sum chi_lambda(sigma) sigma          (orthogonal idempotents)
//   h~_lambda = (1/(p! |S_lambda|)) sum_{sigma} sum_{tau in S_lambda} sigma^{-1} tau sigma
//   p~_lambda = (z_lambda/p!) sum over the conjugacy class Conj_lambda
GAElem central_basis(CentralKind kind, const Partition& mu, int p);

// True iff sigma^{-1} t sigma = t for the adjacent transpositions of S_p.
template <class R>
bool is_central(const GroupAlg<R>& t, int p) {
  if (t.degree() > p) return false;
  for (int i = 1; i < p; ++i) {
    if (!(t.conjugated(Perm::adjacent(i)) == t)) return false;
  }
  return true;
}

// Coefficients c_lambda with t = sum c_lambda s~_lambda; c_lambda = chi_lambda(t).
// Throws if t is not central in CS_p.
std::map<Partition, Rat> central_decompose(const GAElem& t, int p);

}  // namespace extensor
