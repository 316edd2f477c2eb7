#pragma once

#include <map>

#include "extensor/group_algebra.hpp"
#include "extensor/matrix.hpp"
#include "extensor/partition.hpp"
#include "extensor/tableau.hpp"

namespace extensor {

// Young's seminormal representation of S_p with exact rational entries.
//
// Matrices use the column convention: the column indexed by T holds the
// coordinates of sigma . v_T in the basis (v_T), indexed by std_tableaux
// order, so rho(sigma tau) = rho(sigma) rho(tau) as matrix products.
//
// Generator action, with d = c_T(i+1) - c_T(i):
//   s_i . v_T = (1/d) v_T                          when s_i T is not standard
//   s_i . v_T = (1/d) v_T + v_{s_i T}              when s_i T is standard, d > 0
//   s_i . v_T = (1/d) v_T + (1 - 1/d^2) v_{s_i T}  when s_i T is standard, d < 0
// This is the diagonal-conjugate of the orthogonal form that keeps every
// entry rational; all diagonal entries rho(sigma)_{TT} agree with the
// orthogonal form.
RatMatrix rho_gen(const Partition& lambda, int i);

RatMatrix rho(const Partition& lambda, const Perm& sigma);
RatMatrix rho_elem(const Partition& lambda, const GAElem& t);

// The (T,T) diagonal entry of rho_elem; T indexed in std_tableaux order.
Rat diag_entry(const Partition& lambda, int tab_index, const GAElem& t);
Rat diag_entry(const Partition& lambda, const Tableau& T, const GAElem& t);

// Eigenvalues of the Jucys-Murphy elements: spectrum[(tab_index, i)] = c_T(i).
// Computed from rho(x_i) and checked diagonal; throws otherwise.
std::map<std::pair<int, int>, Rat> jm_spectrum(const Partition& lambda);

}  // namespace extensor
