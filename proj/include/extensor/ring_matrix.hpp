#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "extensor/characters.hpp"
#include "extensor/group_algebra.hpp"
#include "extensor/partition.hpp"
#include "extensor/perm.hpp"
#include "extensor/ring.hpp"

namespace extensor {

// Matrix over a ring satisfying the common contract (see ring.hpp). One
// implementation serves CS_p, U(gl_n), the Weyl algebra and L(V) entries.
template <class R>
class RingMatrix {
 public:
  RingMatrix() : rows_(0), cols_(0) {}
  RingMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static RingMatrix from(int rows, int cols, std::function<R(int, int)> f) {  // 1-based f
    RingMatrix m(rows, cols);
    for (int i = 1; i <= rows; ++i)
      for (int j = 1; j <= cols; ++j) m.at(i, j) = f(i, j);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  R& at(int i, int j) { return a_[static_cast<size_t>(i - 1) * cols_ + (j - 1)]; }  // 1-based
  const R& at(int i, int j) const { return a_[static_cast<size_t>(i - 1) * cols_ + (j - 1)]; }

  // X_{IJ} = (X_{i_a j_b}) for 1-based index sequences.
  RingMatrix submatrix(const std::vector<int>& I, const std::vector<int>& J) const {
    RingMatrix m(static_cast<int>(I.size()), static_cast<int>(J.size()));
    for (size_t a = 0; a < I.size(); ++a)
      for (size_t b = 0; b < J.size(); ++b) m.at(static_cast<int>(a) + 1, static_cast<int>(b) + 1) = at(I[a], J[b]);
    return m;
  }

  RingMatrix transpose() const {
    RingMatrix m(cols_, rows_);
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j <= cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  // sigma X = (X_{sigma^{-1}(i) j}) and X sigma = (X_{i sigma(j)}).
  RingMatrix act_left(const Perm& sigma) const {
    Perm inv = sigma.inverse();
    RingMatrix m(rows_, cols_);
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j <= cols_; ++j) m.at(i, j) = at(inv(i), j);
    return m;
  }
  RingMatrix act_right(const Perm& sigma) const {
    RingMatrix m(rows_, cols_);
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j <= cols_; ++j) m.at(i, j) = at(i, sigma(j));
    return m;
  }

  RingMatrix conjugate_rational(const std::vector<std::vector<Rat>>& g,
                                const std::vector<std::vector<Rat>>& ginv) const {
    // g X g^{-1} for a rational matrix g; entries commute with scalars.
    int n = rows_;
    RingMatrix m(n, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        R acc{};
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            Rat c = g[i - 1][k - 1] * ginv[l - 1][j - 1];
            if (!rat_is_zero(c)) acc = acc + ring_scale(at(k, l), c);
          }
        m.at(i, j) = acc;
      }
    return m;
  }

  bool operator==(const RingMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  int rows_, cols_;
  std::vector<R> a_;
};

namespace detail {
// Entry with diagonal shift against index sequences: X_{i_a j_b} + delta_{i_a j_b} u_b.
template <class R>
R shifted_entry(const RingMatrix<R>& X, int ia, int jb, const Rat& u) {
  R v = X.at(ia, jb);
  if (ia == jb && !rat_is_zero(u)) v = v + ring_scale(ring_one<R>(), u);
  return v;
}
}  // namespace detail

// column-det X = sum sgn(sigma) X_{sigma(1)1} ... X_{sigma(n)n}.
template <class R>
R column_det(const RingMatrix<R>& X) {
  if (X.rows() != X.cols()) throw std::invalid_argument("column_det: matrix not square");
  int n = X.rows();
  R out{};
  for (const auto& s : symmetric_group(n)) {
    R prod = X.at(s(1), 1);
    for (int k = 2; k <= n; ++k) prod = prod * X.at(s(k), k);
    out = out + ring_scale(prod, Rat(s.sign()));
  }
  return out;
}

// column-det(X_{IJ} + 1_{IJ} diag(u_1,...,u_r)) for index sequences I, J.
template <class R>
R column_det_shifted(const RingMatrix<R>& X, const std::vector<int>& I, const std::vector<int>& J,
                     const std::vector<Rat>& shifts) {
  int r = static_cast<int>(I.size());
  if (static_cast<int>(J.size()) != r || static_cast<int>(shifts.size()) != r)
    throw std::invalid_argument("column_det_shifted: size mismatch");
  R out{};
  for (const auto& s : symmetric_group(r)) {
    R prod = detail::shifted_entry(X, I[s(1) - 1], J[0], shifts[0]);
    for (int k = 2; k <= r; ++k) prod = prod * detail::shifted_entry(X, I[s(k) - 1], J[k - 1], shifts[k - 1]);
    out = out + ring_scale(prod, Rat(s.sign()));
  }
  return out;
}

// symm-det(X_{IJ}; u_1..u_n) = (1/n!) sum sgn(ss'^{-1})
//   X_{i_{s(1)} j_{s'(1)}}(u_1) ... X_{i_{s(n)} j_{s'(n)}}(u_n)
// with the shift attached by index value, X_{ij}(u) = X_{ij} + delta_{ij} u,
// so the quantity vanishes whenever I has a repeated entry.
template <class R>
R symm_det_shifted(const RingMatrix<R>& X, const std::vector<int>& I, const std::vector<int>& J,
                   const std::vector<Rat>& shifts) {
  int n = static_cast<int>(I.size());
  if (static_cast<int>(J.size()) != n || static_cast<int>(shifts.size()) != n)
    throw std::invalid_argument("symm_det_shifted: size mismatch");
  auto sn = symmetric_group(n);
  R out{};
  for (const auto& s : sn)
    for (const auto& s2 : sn) {
      R prod = detail::shifted_entry(X, I[s(1) - 1], J[s2(1) - 1], shifts[0]);
      for (int k = 2; k <= n; ++k)
        prod = prod * detail::shifted_entry(X, I[s(k) - 1], J[s2(k) - 1], shifts[k - 1]);
      out = out + ring_scale(prod, Rat((s * s2.inverse()).sign()));
    }
  return ring_scale(out, Rat(1) / rat_factorial(n));
}

// symm-det(X; u_1..u_n) of a square matrix (identity index sequences).
template <class R>
R symm_det(const RingMatrix<R>& X, const std::vector<Rat>& shifts) {
  if (X.rows() != X.cols()) throw std::invalid_argument("symm_det: matrix not square");
  std::vector<int> id(X.rows());
  for (int i = 0; i < X.rows(); ++i) id[i] = i + 1;
  return symm_det_shifted(X, id, id, shifts);
}

std::vector<std::vector<int>> index_words(int n, int r);
std::vector<std::vector<int>> index_words_increasing(int n, int r, bool strict);
Rat index_multiplicity(const std::vector<int>& I);  // I!

// det_r(X; u_1..u_r) = (1/r!) sum_{I in [n]^r} symm-det(X_{II}; u)
//                    = sum_{I strictly increasing} symm-det(X_{II}; u).
template <class R>
R det_r(const RingMatrix<R>& X, int r, const std::vector<Rat>& shifts, bool reduced = false) {
  if (X.rows() != X.cols()) throw std::invalid_argument("det_r: matrix not square");
  if (r > X.rows()) throw std::invalid_argument("det_r: r exceeds dimension");
  R out{};
  if (reduced) {
    for (const auto& I : index_words_increasing(X.rows(), r, true))
      out = out + symm_det_shifted(X, I, I, shifts);
    return out;
  }
  for (const auto& I : index_words(X.rows(), r)) out = out + symm_det_shifted(X, I, I, shifts);
  return ring_scale(out, Rat(1) / rat_factorial(r));
}

enum class ImmKind { Column, Row, Double, Symm };

template <class R>
R imm(ImmKind kind, const Partition& lambda, const RingMatrix<R>& X) {
  if (X.rows() != X.cols()) throw std::invalid_argument("imm: matrix not square");
  int n = X.rows();
  if (lambda.weight() != n) throw std::invalid_argument("imm: |lambda| != matrix size");
  auto sn = symmetric_group(n);
  R out{};
  switch (kind) {
    case ImmKind::Column:
      for (const auto& s : sn) {
        R prod = X.at(s(1), 1);
        for (int k = 2; k <= n; ++k) prod = prod * X.at(s(k), k);
        out = out + ring_scale(prod, character(lambda, s, n));
      }
      return out;
    case ImmKind::Row:
      for (const auto& s : sn) {
        R prod = X.at(1, s(1));
        for (int k = 2; k <= n; ++k) prod = prod * X.at(k, s(k));
        out = out + ring_scale(prod, character(lambda, s.inverse(), n));
      }
      return out;
    case ImmKind::Double: {
      for (const auto& s : sn)
        for (const auto& s2 : sn) {
          R prod = X.at(s(1), s2(1));
          for (int k = 2; k <= n; ++k) prod = prod * X.at(s(k), s2(k));
          out = out + ring_scale(prod, character(lambda, s, n) * character(lambda, s2.inverse(), n));
        }
      return ring_scale(out, character_dim(lambda) / rat_factorial(n));
    }
    case ImmKind::Symm: {
      for (const auto& s : sn)
        for (const auto& s2 : sn) {
          R prod = X.at(s(1), s2(1));
          for (int k = 2; k <= n; ++k) prod = prod * X.at(s(k), s2(k));
          out = out + ring_scale(prod, character(lambda, s * s2.inverse(), n));
        }
      return ring_scale(out, Rat(1) / rat_factorial(n));
    }
  }
  throw std::logic_error("imm: unknown kind");
}

enum class PreimmKind { Column, Row, Symm };

// CS_n (x) A valued refinements; characters recover the immanants.
template <class R>
GroupAlg<R> preimm(PreimmKind kind, const RingMatrix<R>& X, bool circ = false) {
  if (X.rows() != X.cols()) throw std::invalid_argument("preimm: matrix not square");
  int n = X.rows();
  auto sn = symmetric_group(n);
  GroupAlg<R> out;
  switch (kind) {
    case PreimmKind::Column:
      for (const auto& s : sn) {
        R prod = X.at(s(1), 1);
        for (int k = 2; k <= n; ++k) prod = prod * X.at(s(k), k);
        out.add_term(s, prod);
      }
      break;
    case PreimmKind::Row:
      for (const auto& s : sn) {
        R prod = X.at(1, s(1));
        for (int k = 2; k <= n; ++k) prod = prod * X.at(k, s(k));
        out.add_term(s.inverse(), prod);
      }
      break;
    case PreimmKind::Symm:
      for (const auto& s : sn)
        for (const auto& s2 : sn) {
          R prod = X.at(s(1), s2(1));
          for (int k = 2; k <= n; ++k) prod = prod * X.at(s(k), s2(k));
          out.add_term(s * s2.inverse(), ring_scale(prod, Rat(1) / rat_factorial(n)));
        }
      break;
  }
  return circ ? out.circ() : out;
}

// imm_{lambda,p} X = (1/p!) sum_{I in [n]^p} symm-imm_lambda X_{II}
//                  = sum_{I weakly increasing} (1/I!) symm-imm_lambda X_{II}.
template <class R>
R imm_lambda_p(const Partition& lambda, int p, const RingMatrix<R>& X, bool reduced = false) {
  if (lambda.weight() != p) throw std::invalid_argument("imm_lambda_p: |lambda| != p");
  R out{};
  if (reduced) {
    for (const auto& I : index_words_increasing(X.rows(), p, false)) {
      R v = imm(ImmKind::Symm, lambda, X.submatrix(I, I));
      out = out + ring_scale(v, Rat(1) / index_multiplicity(I));
    }
    return out;
  }
  for (const auto& I : index_words(X.rows(), p)) out = out + imm(ImmKind::Symm, lambda, X.submatrix(I, I));
  return ring_scale(out, Rat(1) / rat_factorial(p));
}

// preimm_p X = (1/p!) sum_{I in [n]^p} symm-preimm X_{II}; central in
// CS_p (x) A and invariant under GL_n conjugation for any ring (this is the
// bracket expression <Xi^(p)> of the two-sided tensor algebra). Over a
// commutative ring the column/row trace sums give the same element; over a
// noncommutative ring they differ from degree 3 on and are not central, so
// the symmetrized sum is the definition.
template <class R>
GroupAlg<R> preimm_p(int p, const RingMatrix<R>& X) {
  GroupAlg<R> out;
  for (const auto& I : index_words(X.rows(), p)) {
    auto v = preimm(PreimmKind::Symm, X.submatrix(I, I));
    out = out + v;
  }
  return out.scale(Rat(1) / rat_factorial(p));
}

// Cauchy-Binet for immanants over a commutative ring (entries Rat):
// imm_lambda (XY)_{IK} = (chi_lambda(1)/p!) sum_J imm_lambda X_{IJ} imm_lambda Y_{JK}.
bool cauchy_binet_imm(const Partition& lambda, const RingMatrix<Rat>& X, const RingMatrix<Rat>& Y,
                      const std::vector<int>& I, const std::vector<int>& K);

// preimm (XY)_{IK} = (1/p!) sum_J preimm X_{IJ} preimm Y_{JK}, and the circ
// companion with the factors swapped.
bool cauchy_binet_preimm(const RingMatrix<Rat>& X, const RingMatrix<Rat>& Y,
                         const std::vector<int>& I, const std::vector<int>& K);

}  // namespace extensor
