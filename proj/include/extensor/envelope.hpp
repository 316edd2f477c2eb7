#pragma once

#include <vector>

#include "extensor/group_algebra.hpp"
#include "extensor/matrix.hpp"
#include "extensor/partition.hpp"
#include "extensor/pbw.hpp"
#include "extensor/ring_matrix.hpp"

namespace extensor {

// Elements of CS_p (x) U(gl_n).
using GAPBW = GroupAlg<PBW>;

// The matrix E = (E_ij) over U(gl_n).
RingMatrix<PBW> e_matrix(int n);

// Capelli element C_r = sum_{I strictly increasing}
//   column-det(E_II + diag(r-1, r-2, ..., 0)).
PBW capelli(int r, int n);

// The four expressions of the quantum immanants (diagonal representation
// entries and contents; independent of the chosen standard tableau):
//   G       : rho(sigma)_TT  E_{j_s(1) j_1}(c_T(1)) ... E_{j_s(p) j_p}(c_T(p))
//   GPrime  : rho(sigma^{-1})_TT  E_{j_p j_s(p)}(c_T(p)) ... E_{j_1 j_s(1)}(c_T(1))
//   GCirc   : rho(sigma^{-1})_TT  E_{j_s(p) j_p}(-c_T(p)) ... E_{j_s(1) j_1}(-c_T(1))
//   GCircPrime: rho(sigma)_TT  E_{j_1 j_s(1)}(-c_T(1)) ... E_{j_p j_s(p)}(-c_T(p))
// each summed over J in [n]^p and sigma with prefactor chi_lambda(1)/p!.
enum class QImmVariant { G, GPrime, GCirc, GCircPrime };

PBW quantum_immanant(QImmVariant v, const Partition& lambda, int n, int tab_index = 0);

// Quantum preimmanants in CS_p (x) U(gl_n); the Jucys-Murphy elements enter
// through E_ij(x_k) = 1 (x) E_ij + delta_ij x_k (x) 1.
GAPBW quantum_preimmanant(QImmVariant v, int p, int n);

// The weakly-decreasing-index expression of G-circ_lambda:
//   chi_lambda( sum_{i_1 >= ... >= i_p} (1/I!) sum_sigma
//               sigma E_{i_1 i_sigma(1)}(-x_1) ... E_{i_p i_sigma(p)}(-x_p) ).
PBW quantum_immanant_decreasing(const Partition& lambda, int n);

bool is_central_u(const PBW& u, int n);
bool is_central_u(const GAPBW& u, int n, int p);

// Harish-Chandra eigenvalue on the irreducible with highest weight mu
// (padded to length n): drop monomials with a raising factor; the remaining
// monomials of a central element are pure Cartan by the zero-weight
// argument; substitute E_ii -> mu_i.
Rat hc_eigenvalue(const PBW& u, const Partition& mu, int n);

// Content-sum eigenvalue formulas for G-circ_lambda on pi_mu: sum over
// reverse semistandard tableaux T of shape lambda with entries in [n] of
// prod_{cells a} (value_{T(a)} - content(a)); convention A reads value = lambda
// (as printed), convention B reads value = mu (shifted-Schur reading).
enum class ContentConvention { A, B };
Rat content_sum_eval(const Partition& lambda, const Partition& mu, int n, ContentConvention conv);

// Ad(g) E = tg . E . tg^{-1}, extended as an algebra automorphism.
PBW adjoint_action(const RatMatrix& g, const PBW& u);

}  // namespace extensor
