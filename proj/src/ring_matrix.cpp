#include "extensor/ring_matrix.hpp"

namespace extensor {

std::vector<std::vector<int>> index_words(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> I(r, 1);
  if (r == 0) {
    out.push_back(I);
    return out;
  }
  while (true) {
    out.push_back(I);
    int pos = r - 1;
    while (pos >= 0 && I[pos] == n) --pos;
    if (pos < 0) break;
    ++I[pos];
    for (int k = pos + 1; k < r; ++k) I[k] = 1;
  }
  return out;
}

std::vector<std::vector<int>> index_words_increasing(int n, int r, bool strict) {
  std::vector<std::vector<int>> out;
  std::vector<int> I;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(I.size()) == r) {
      out.push_back(I);
      return;
    }
    for (int v = start; v <= n; ++v) {
      I.push_back(v);
      self(self, strict ? v + 1 : v);
      I.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

Rat index_multiplicity(const std::vector<int>& I) {
  Rat r = 1;
  int run = 1;
  for (size_t k = 1; k < I.size(); ++k) {
    if (I[k] == I[k - 1]) r *= ++run;
    else run = 1;
  }
  return r;
}

bool cauchy_binet_imm(const Partition& lambda, const RingMatrix<Rat>& X, const RingMatrix<Rat>& Y,
                      const std::vector<int>& I, const std::vector<int>& K) {
  if (X.cols() != Y.rows()) throw std::invalid_argument("cauchy_binet_imm: inner size mismatch");
  int p = static_cast<int>(I.size());
  RingMatrix<Rat> XY(X.rows(), Y.cols());
  for (int i = 1; i <= X.rows(); ++i)
    for (int j = 1; j <= Y.cols(); ++j) {
      Rat acc = 0;
      for (int k = 1; k <= X.cols(); ++k) acc += X.at(i, k) * Y.at(k, j);
      XY.at(i, j) = acc;
    }
  Rat lhs = imm(ImmKind::Column, lambda, XY.submatrix(I, K));
  Rat rhs = 0;
  for (const auto& J : index_words(X.cols(), p))
    rhs += imm(ImmKind::Column, lambda, X.submatrix(I, J)) * imm(ImmKind::Column, lambda, Y.submatrix(J, K));
  rhs *= character_dim(lambda) / rat_factorial(p);
  return lhs == rhs;
}

bool cauchy_binet_preimm(const RingMatrix<Rat>& X, const RingMatrix<Rat>& Y,
                         const std::vector<int>& I, const std::vector<int>& K) {
  if (X.cols() != Y.rows()) throw std::invalid_argument("cauchy_binet_preimm: inner size mismatch");
  int p = static_cast<int>(I.size());
  RingMatrix<Rat> XY(X.rows(), Y.cols());
  for (int i = 1; i <= X.rows(); ++i)
    for (int j = 1; j <= Y.cols(); ++j) {
      Rat acc = 0;
      for (int k = 1; k <= X.cols(); ++k) acc += X.at(i, k) * Y.at(k, j);
      XY.at(i, j) = acc;
    }
  GAElem lhs = preimm(PreimmKind::Column, XY.submatrix(I, K));
  GAElem lhs_circ = lhs.circ();
  GAElem rhs, rhs_circ;
  for (const auto& J : index_words(X.cols(), p)) {
    rhs = rhs + preimm(PreimmKind::Column, X.submatrix(I, J)) * preimm(PreimmKind::Column, Y.submatrix(J, K));
    rhs_circ = rhs_circ + preimm(PreimmKind::Column, Y.submatrix(J, K), true) *
                              preimm(PreimmKind::Column, X.submatrix(I, J), true);
  }
  Rat w = Rat(1) / rat_factorial(p);
  return lhs == rhs.scale(w) && lhs_circ == rhs_circ.scale(w);
}

}  // namespace extensor
