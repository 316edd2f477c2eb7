#pragma once

#include <map>
#include <vector>

#include "extensor/matrix.hpp"
#include "extensor/rational.hpp"

namespace extensor {

// Sparse rational vector, sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec to_sparse(const std::vector<Rat>& dense);
std::vector<Rat> to_dense(const SparseVec& v, int n);
SparseVec sparse_axpy(const SparseVec& a, const Rat& c, const SparseVec& b);  // a + c*b

// Incrementally maintained reduced row echelon form over the rationals.
// Insertion keeps all rows mutually reduced, so pivot rows stay sparse when
// the row space has small corank.
class RowBasis {
 public:
  // Fully reduces v against the basis.
  SparseVec reduce(SparseVec v) const;
  // Inserts v; returns true when the rank grew.
  bool insert(SparseVec v);
  bool contains(SparseVec v) const { return reduce(std::move(v)).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, SparseVec>& rows() const { return rows_; }

  // Kernel basis of the inserted constraint rows, as vectors in dimension n
  // (one per non-pivot column, deterministic order).
  std::vector<std::vector<Rat>> kernel(int n) const;

 private:
  std::map<int, SparseVec> rows_;  // pivot column -> normalized row
};

// Span equality of two collections of vectors of equal dimension.
bool same_span(const std::vector<std::vector<Rat>>& a, const std::vector<std::vector<Rat>>& b);

// Rank of a collection.
int span_rank(const std::vector<std::vector<Rat>>& a);

// True if every vector of a lies in span(b).
bool span_contains(const std::vector<std::vector<Rat>>& b, const std::vector<std::vector<Rat>>& a);

std::vector<Rat> mat_to_vec(const RatMatrix& m);

// Commutant of a set of operators (N x N matrices) inside End(C^N):
// kernel of F -> (F g - g F)_{g in gens}. Returns a basis of matrices.
std::vector<RatMatrix> commutant(const std::vector<RatMatrix>& gens, int N);

// Commutant of span(ops): computed from a small prefix of ops, then checked
// against the rest and refined only where the check fails. Exact result,
// much cheaper when a few ops already cut the kernel down.
std::vector<RatMatrix> commutant_of_span(const std::vector<RatMatrix>& ops, int N);

// Closes span(seed) under the matrix product, reporting the resulting
// dimension; all work happens in coordinates relative to `ambient`, a basis
// of a subalgebra known to contain the closure (typically a commutant).
// Returns -1 if a product leaves the ambient span.
int algebra_closure_dim(const std::vector<RatMatrix>& seed, const std::vector<RatMatrix>& ambient);

}  // namespace extensor
