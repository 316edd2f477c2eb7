#pragma once

#include <functional>

#include "extensor/linalg.hpp"
#include "extensor/matrix.hpp"
#include "extensor/pbw.hpp"
#include "extensor/tensor.hpp"

namespace extensor {

// Enumerated basis of the finite graded piece T^{(q)}_p(C^N): pairs of a
// weakly increasing word I and a minimal coset representative of
// (S_p)_I \ S_{p+q}; basis elements are word(I) s_I sigma_r.
class SliceBasis {
 public:
  SliceBasis(int N, int p, int q);

  int N() const { return N_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int dim() const { return static_cast<int>(elems_.size()); }
  const std::pair<Word, Perm>& elem(int k) const { return elems_[k]; }

  TBar element(int k) const;
  // Exact coordinates; throws if phi does not lie in the slice.
  std::vector<Rat> coords(const TBar& phi) const;

 private:
  int N_, p_, q_;
  std::vector<std::pair<Word, Perm>> elems_;
  std::map<std::pair<Word, Perm>, int> index_;
  std::map<Word, std::vector<Perm>> stabs_;
};

// Matrix of a linear map between slices, columns = images of basis vectors.
RatMatrix matrixize(const std::function<TBar(const TBar&)>& op, const SliceBasis& domain,
                    const SliceBasis& codomain);

// Operator matrices used by the verifiers.
RatMatrix right_mult_matrix(const GAElem& t, const SliceBasis& basis);
RatMatrix lop_matrix(const LOp& op, const SliceBasis& domain, const SliceBasis& codomain);
inline RatMatrix lop_matrix(const LOp& op, const SliceBasis& basis) {
  return lop_matrix(op, basis, basis);
}

// pi(E_ij) = sum_a L(w_{ia}) L(w*_{ja}) on T-bar(C^n (x) C^n'), with the
// basis w_{ia} flattened to (i-1) n' + a.
LOp pi_tensor_gen(int n, int nprime, int i, int j);
LOp pi_tensor(const PBW& u, int n, int nprime);

// Basis of the SL_n-invariants in T_p(C^n (x) C^n'): the joint kernel of the
// traceless gl_n generators, in SliceBasis(n n', p, 0) coordinates.
std::vector<std::vector<Rat>> sl_invariants(int n, int nprime, int p);

inline int tensor_index(int i, int a, int nprime) { return (i - 1) * nprime + a; }

}  // namespace extensor
