#include <doctest.h>

#include "extensor/characters.hpp"
#include "extensor/extwedge.hpp"
#include "extensor/ring_matrix.hpp"
#include "extensor/symfunc.hpp"

using namespace extensor;

namespace {
RingMatrix<Rat> mat2(Rat a, Rat b, Rat c, Rat d) {
  RingMatrix<Rat> m(2, 2);
  m.at(1, 1) = a;
  m.at(1, 2) = b;
  m.at(2, 1) = c;
  m.at(2, 2) = d;
  return m;
}
}  // namespace

TEST_CASE("column determinant") {
  auto X = mat2(2, 3, 5, 7);
  CHECK(column_det(X) == Rat(2 * 7 - 3 * 5));
  RingMatrix<Rat> id(3, 3);
  for (int i = 1; i <= 3; ++i) id.at(i, i) = 1;
  CHECK(column_det(id) == 1);
  // Noncommutative instance over CS_2: definition order.
  RingMatrix<GAElem> Y(2, 2);
  GAElem s1 = GAElem::of(Perm::adjacent(1));
  Y.at(1, 1) = s1;
  Y.at(1, 2) = GAElem::unit();
  Y.at(2, 1) = GAElem::of(Perm::adjacent(2));
  Y.at(2, 2) = GAElem::of(Perm::cycle({1, 2, 3}));
  CHECK(column_det(Y) == Y.at(1, 1) * Y.at(2, 2) - Y.at(2, 1) * Y.at(1, 2));
}

TEST_CASE("symmetrized determinant and det_r") {
  RingMatrix<Rat> X1(1, 1);
  X1.at(1, 1) = 5;
  CHECK(symm_det(X1, {rat(3)}) == 8);
  auto X = mat2(1, 2, 3, 4);
  CHECK(symm_det(X, {Rat(0), Rat(0)}) == column_det(X));
  // det_2 with zero shifts = sum of principal 2x2 minors.
  RingMatrix<Rat> Y(3, 3);
  Rat vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 2, 5}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Y.at(i + 1, j + 1) = vals[i][j];
  Rat minors = 0;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) minors += column_det(Y.submatrix({i, j}, {i, j}));
  CHECK(det_r(Y, 2, {Rat(0), Rat(0)}) == minors);
  CHECK(det_r(Y, 2, {Rat(0), Rat(0)}, true) == minors);
  CHECK(det_r(Y, 2, {rat(2), rat(1)}) == det_r(Y, 2, {rat(2), rat(1)}, true));
}

TEST_CASE("immanants specialize to det and per") {
  auto X = mat2(1, 2, 3, 4);
  CHECK(imm(ImmKind::Column, Partition{1, 1}, X) == column_det(X));
  CHECK(imm(ImmKind::Column, Partition{2}, X) == Rat(1 * 4 + 2 * 3));  // permanent
  // Noncommutative column immanant for lambda = (2): chi = 1 everywhere.
  RingMatrix<GAElem> Y(2, 2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      Y.at(i, j) = GAElem::of(Perm::transposition(1, i + j), rat(i + j));
  CHECK(imm(ImmKind::Column, Partition{2}, Y) ==
        Y.at(1, 1) * Y.at(2, 2) + Y.at(2, 1) * Y.at(1, 2));
}

TEST_CASE("preimmanants on small matrices") {
  RingMatrix<Rat> X1(1, 1);
  X1.at(1, 1) = 9;
  auto pre = preimm(PreimmKind::Column, X1);
  CHECK(pre.term_count() == 1);
  CHECK(pre.coeff(Perm()) == 9);
  auto X = mat2(1, 2, 3, 4);
  CHECK(preimm(PreimmKind::Column, X) == preimm(PreimmKind::Row, X));
  CHECK(preimm(PreimmKind::Column, X) == preimm(PreimmKind::Symm, X));
}

TEST_CASE("imm_lambda_p instances") {
  // p = 1 gives the trace.
  auto X = mat2(3, 1, 2, 4);
  CHECK(imm_lambda_p(Partition{1}, 1, X) == 7);
  auto pre1 = preimm_p(1, X);
  CHECK(pre1.term_count() == 1);
  CHECK(pre1.coeff(Perm()) == 7);
  // Identity matrix: the number of semistandard tableaux.
  RingMatrix<Rat> id(3, 3);
  for (int i = 1; i <= 3; ++i) id.at(i, i) = 1;
  for (const auto& lambda : Partition::all(2))
    CHECK(imm_lambda_p(lambda, 2, id) ==
          Rat(static_cast<long>(semistandard_tableaux(lambda, 3).size())));
  // diag(a, b) at lambda = (2): a^2 + ab + b^2.
  RingMatrix<Rat> D(2, 2);
  D.at(1, 1) = rat(2);
  D.at(2, 2) = rat(3);
  CHECK(imm_lambda_p(Partition{2}, 2, D) == Rat(4 + 6 + 9));
}

TEST_CASE("symmetric function evaluation") {
  std::vector<Rat> ab = {rat(2), rat(5)};
  CHECK(sym_eval(SymKind::Schur, Partition{1}, ab) == 7);
  CHECK(sym_eval(SymKind::Schur, Partition{2}, ab) == Rat(4 + 10 + 25));
  CHECK(sym_eval(SymKind::Monomial, Partition{2, 1}, ab) == Rat(4 * 5 + 2 * 25));
  CHECK(sym_eval(SymKind::PowerSum, Partition{2, 1}, ab) == Rat((4 + 25) * 7));
  CHECK(kostka(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(kostka(Partition{2}, Partition{1, 1}) == 1);
  CHECK(kostka(Partition{1, 1}, Partition{2}) == 0);
  // s_lambda = sum_mu K_{lambda mu} m_mu, checked numerically.
  std::vector<Rat> abc = {rat(2), rat(-1), rat(3)};
  for (const auto& lambda : Partition::all(3)) {
    Rat rhs = 0;
    for (const auto& mu : Partition::all(3))
      rhs += Rat(kostka(lambda, mu)) * sym_eval(SymKind::Monomial, mu, abc);
    CHECK(sym_eval(SymKind::Schur, lambda, abc) == rhs);
  }
  // Second character relation: sum over the Young subgroup.
  for (const auto& lambda : Partition::all(3))
    for (const auto& mu : Partition::all(3)) {
      Rat lhs = 0;
      long size = 0;
      // S_mu as block permutations.
      std::vector<Perm> subgroup = {Perm()};
      int offset = 0;
      for (int part : mu.parts()) {
        std::vector<Perm> next;
        for (const auto& blk : symmetric_group(part))
          for (const auto& y : subgroup) next.push_back(y * blk.alpha(offset));
        subgroup = std::move(next);
        offset += part;
      }
      for (const auto& s : subgroup) {
        lhs += character(lambda, s, 3);
        ++size;
      }
      CHECK(lhs == Rat(size) * Rat(kostka(lambda, mu)));
    }
}

TEST_CASE("exterior algebra") {
  using E = Ext<Rat>;
  CHECK((E::e(1) * E::e(1)).is_zero());
  CHECK(E::e(1) * E::e(2) == (E::e(2) * E::e(1)).scale(-1));
  CHECK(E::e(1) * E::estar(1) == (E::estar(1) * E::e(1)).scale(-1));
  // <e_1 e_2, xi_1 xi_2> = det X for a commutative 2x2 matrix.
  auto X = mat2(1, 2, 3, 4);
  auto xi = [&](int j) {
    E out;
    for (int i = 1; i <= 2; ++i) out = out + E::e(i).scale(X.at(i, j));
    return out;
  };
  E prod = xi(1) * xi(2);
  CHECK(prod.pair_basis(0b11, 0) == column_det(X));
}
