#include <doctest.h>

#include "extensor/characters.hpp"
#include "extensor/serialize.hpp"
#include "extensor/tensor.hpp"

using namespace extensor;

namespace {
TBar e(int n, int a) { return TBar::tbar_gen(n, a); }
}  // namespace

TEST_CASE("tbar multiplication and canonical form") {
  int n = 2;
  TBar one = TBar::tbar_perm(n, Perm());
  TBar phi = e(n, 2) * e(n, 1);
  CHECK(one * phi == phi);
  // (e_2)(e_1): already increasing word (1,2) with identity middle.
  TBar direct = TBar::tbar_word(n, {1, 2});
  CHECK(phi == direct);
  // (e_1)(e_2) = e_2 e_1 s_1.
  TBar swapped = e(n, 1) * e(n, 2);
  CHECK(swapped == direct.right_mul(GAElem::of(Perm::adjacent(1))));
  CHECK(swapped != direct);
}

TEST_CASE("canonicalization of raw terms") {
  int n = 2;
  // e_1 e_2 inserted raw: word (2,1) sorts to (1,2) with middle s_1.
  TBar a = TBar::tbar_zero(n);
  a.add_term({2, 1}, Perm(), {}, Rat(1));
  TBar b = TBar::tbar_zero(n);
  b.add_term({1, 2}, Perm::adjacent(1), {}, Rat(1));
  CHECK(a == b);
  // e_1 e_1 with middle s_1: the symmetrizer absorbs s_1.
  TBar c = TBar::tbar_zero(n);
  c.add_term({1, 1}, Perm::adjacent(1), {}, Rat(1));
  TBar d = TBar::tbar_zero(n);
  d.add_term({1, 1}, Perm(), {}, Rat(1));
  CHECK(c == d);
}

TEST_CASE("derivations") {
  int n = 2;
  CHECK(derivation_apply(1, e(n, 1)) == TBar::tbar_perm(n, Perm()));
  CHECK(derivation_apply(1, TBar::tbar_perm(n, Perm())).is_zero());
  TBar e21 = TBar::tbar_word(n, {1, 2});  // e_2 e_1
  CHECK(derivation_apply(2, e21) == e(n, 1));
  CHECK(derivation_apply(1, e21) == e(n, 2).right_mul(GAElem::of(Perm::adjacent(1))));
  // Well-definedness: commutes with right multiplication.
  for (const auto& s : symmetric_group(3)) {
    TBar phi = TBar::tbar_word(n, {1, 2, 2});
    GAElem g = GAElem::of(s);
    CHECK(derivation_apply(2, phi.right_mul(g)) == derivation_apply(2, phi).right_mul(g));
  }
}

TEST_CASE("normal ordering of operator products") {
  int n = 2;
  auto L = [&](int a) { return LOp::lop_vec(n, a); };
  auto Ls = [&](int a) { return LOp::lop_covec(n, a); };
  auto S1 = LOp::lop_perm(n, Perm::adjacent(1));
  LOp one = LOp::lop_one(n);

  CHECK(Ls(1) * L(1) == L(1) * S1 * Ls(1) + one);
  CHECK(S1 * S1 == one);
  // pi(E_12) pi(E_21) = L(e_2)L(e_1)L(e*_2)L(e*_1) + L(e_1)L(e*_1).
  LOp lhs = LOp::polarization(n, 1, 2) * LOp::polarization(n, 2, 1);
  LOp rhs = L(2) * L(1) * Ls(2) * Ls(1) + L(1) * Ls(1);
  CHECK(lhs == rhs);
}

TEST_CASE("operator application") {
  int n = 2;
  TBar one = TBar::tbar_perm(n, Perm());
  CHECK(lop_apply(LOp::lop_vec(n, 1), one) == e(n, 1));
  TBar e21 = TBar::tbar_word(n, {1, 2});
  CHECK(lop_apply(euler_op(n), e21) == e21.scale(2));
  // L(e*_1)L(e*_1) e_1 e_1 = 1 + s_1.
  LOp dd = LOp::lop_covec(n, 1) * LOp::lop_covec(n, 1);
  TBar e11 = TBar::tbar_word(n, {1, 1});
  CHECK(lop_apply(dd, e11) == TBar::tbar_ga(n, GAElem::unit() + GAElem::of(Perm::adjacent(1))));
  // Module action is consistent with composition.
  LOp a = LOp::polarization(n, 1, 2), b = LOp::polarization(n, 2, 1);
  TBar phi = TBar::tbar_word(n, {1, 2}).right_mul(GAElem::of(Perm::adjacent(2)));
  CHECK(lop_apply(a * b, phi) == lop_apply(a, lop_apply(b, phi)));
}

TEST_CASE("euler operators") {
  int n = 2;
  CHECK(lop_apply(euler_op(n), TBar::tbar_perm(n, Perm())).is_zero());
  CHECK(euler_higher(n, 1) == euler_op(n));
  TBar e11 = TBar::tbar_word(n, {1, 1});
  CHECK(lop_apply(euler_higher(n, 2), e11) == e11);
}

TEST_CASE("polarization commutators") {
  int n = 3;
  auto E = [&](int i, int j) { return LOp::polarization(n, i, j); };
  CHECK(lop_apply(E(1, 1), e(n, 1)) == e(n, 1));
  CHECK(lop_apply(E(2, 1), e(n, 1)) == e(n, 2));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          LOp lhs = E(i, j) * E(k, l) - E(k, l) * E(i, j);
          LOp rhs = LOp::lop_zero(n);
          if (j == k) rhs = rhs + E(i, l);
          if (l == i) rhs = rhs - E(k, j);
          CHECK(lhs == rhs);
        }
}

TEST_CASE("leibniz analogue") {
  int n = 2;
  for (int k = 1; k <= 3; ++k) {
    TBar phi = TBar::tbar_word(n, Word(k, 1));  // e_1^k in T_k
    for (const Word& w : {Word{2, 1}, Word{1, 1}}) {
      TBar psi = TBar::tbar_word(n, w).right_mul(GAElem::of(Perm::adjacent(1)));
      for (int j = 1; j <= n; ++j) {
        TBar lhs = derivation_apply(j, phi * psi);
        std::vector<int> pts;
        for (int x = k + 1; x >= 1; --x) pts.push_back(x);
        TBar rhs = derivation_apply(j, phi) * psi +
                   phi * TBar::tbar_perm(n, Perm::cycle(pts)) * derivation_apply(j, psi);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("pairing") {
  int n = 2;
  auto star = [&](const Word& w) { return TBar::opp_word(n, w); };
  CHECK(pairing(star({1}), e(n, 1)) == GAElem::unit());
  // <e*_1 e*_1, e_1 e_1> = 1 + s_1.
  CHECK(pairing(star({1, 1}), TBar::tbar_word(n, {1, 1})) ==
        GAElem::unit() + GAElem::of(Perm::adjacent(1)));
  // Bimodule property <sigma' phi*, phi sigma> = sigma' <phi*, phi> sigma.
  Perm s = Perm::adjacent(1);
  GAElem g = pairing(star({1, 2}), TBar::tbar_word(n, {1, 2}));
  CHECK(pairing(TBar::opp_word(n, {1, 2}, s), TBar::tbar_word(n, {1, 2}).right_mul(GAElem::of(s))) ==
        GAElem::of(s) * g * GAElem::of(s));
}

TEST_CASE("diamond") {
  int n = 2;
  // (sigma) diamond (sigma') = sigma sigma' for q = 0.
  TBar a = TBar::opp_word(n, {}, Perm::adjacent(1));
  TBar b = TBar::tbar_perm(n, Perm::adjacent(2));
  TBar dd = diamond(a, b);
  TBar expect(0, 0);
  expect.add_term({}, Perm::adjacent(1) * Perm::adjacent(2), {}, Rat(1));
  CHECK(dd == expect);
  // (e*_1) diamond (e_1) = 1.
  TBar d2 = diamond(TBar::opp_word(n, {1}), e(n, 1));
  TBar one(0, 0);
  one.add_term({}, Perm(), {}, Rat(1));
  CHECK(d2 == one);
  // (e*_1 e*_2) diamond (e_2 e_1) reduces to the pairing.
  TBar d3 = diamond(TBar::opp_word(n, {1, 2}), TBar::tbar_word(n, {1, 2}));
  GAElem g = pairing(TBar::opp_word(n, {1, 2}), TBar::tbar_word(n, {1, 2}));
  TBar expect3(0, 0);
  for (const auto& [s, c] : g.terms()) expect3.add_term({}, s, {}, c);
  CHECK(d3 == expect3);
  // Associativity on matching bidegrees (1,2) x (2,2) x (2,1).
  TBar u = TBar::tvw_zero(2, 2);
  u.add_term({1}, Perm(), {1, 2}, Rat(1));
  u.add_term({2}, Perm::adjacent(1), {2, 2}, rat(1, 3));
  TBar v = TBar::tvw_zero(2, 2);
  v.add_term({2, 1}, Perm::adjacent(1), {1, 2}, Rat(1));
  v.add_term({1, 1}, Perm(), {1, 1}, Rat(2));
  TBar w = TBar::tvw_zero(2, 2);
  w.add_term({1, 2}, Perm(), {1}, Rat(1));
  CHECK(diamond(diamond(u, v), w) == diamond(u, diamond(v, w)));
}

TEST_CASE("equivariant word families and their central sums") {
  // For phi_J = v-words and phi*_J = covector words:
  // (i)  sigma^{-1} <phi*_I, phi_J> sigma' = <phi*_{sigma(I)}, phi_{sigma'(J)}>
  // (ii) sum_J <phi*_J, phi_J> = sum_J <phi_J phi*_J>, central in CS_p.
  int n = 2, p = 2;
  for (const auto& s : symmetric_group(p))
    for (const auto& s2 : symmetric_group(p))
      for (const auto& I : all_words(n, p))
        for (const auto& J : all_words(n, p)) {
          GAElem inner = pairing(TBar::opp_word(n, I), TBar::tbar_word(n, J));
          Word Is(p), Js(p);
          for (int k = 0; k < p; ++k) {
            Is[k] = I[s(k + 1) - 1];
            Js[k] = J[s2(k + 1) - 1];
          }
          GAElem moved = pairing(TBar::opp_word(n, Is), TBar::tbar_word(n, Js));
          CHECK(GAElem::of(s.inverse()) * inner * GAElem::of(s2) == moved);
        }
  GAElem lhs, rhs;
  for (const auto& J : all_words(n, p)) {
    lhs = lhs + pairing(TBar::opp_word(n, J), TBar::tbar_word(n, J));
    TBar prod = TBar::tvw_zero(n, n);
    prod.add_term(J, Perm(), J, Rat(1));
    rhs = rhs + bracket(prod, p);
  }
  CHECK(lhs == rhs);
  CHECK(is_central(lhs, p));
}

TEST_CASE("bracket centrality") {
  int n = 1;
  // Phi = e_1 e*_1, p = 1: <Phi> = 1.
  TBar Phi = TBar::tvw_zero(1, 1);
  Phi.add_term({1}, Perm(), {1}, Rat(1));
  CHECK(bracket(Phi, 1) == GAElem::unit());
  // Phi = sum_i e_i e*_i over n = 2: <Phi> = 2.
  TBar Phi2 = TBar::tvw_zero(2, 2);
  Phi2.add_term({1}, Perm(), {1}, Rat(1));
  Phi2.add_term({2}, Perm(), {2}, Rat(1));
  CHECK(bracket(Phi2, 1) == GAElem::unit().scale(2));
  // <Phi> commutes with S_p for a generic Phi of bidegree (2,2).
  TBar Phi3 = TBar::tvw_zero(2, 2);
  Phi3.add_term({1, 2}, Perm::adjacent(1), {1, 1}, Rat(1));
  Phi3.add_term({2, 2}, Perm(), {1, 2}, rat(1, 2));
  CHECK(is_central(bracket(Phi3, 2), 2));
}

TEST_CASE("two-sided algebra centrality") {
  // vw is central in T(V,W); wv is not.
  TBar vw = TBar::tvw_zero(2, 2);
  vw.add_term({1}, Perm(), {2}, Rat(1));
  TBar wv(2, 2);
  // w v has no canonical (left,right) split; realize it as the product of
  // the pure-right and pure-left generators.
  TBar v(2, 2), w(2, 2);
  v.add_term({1}, Perm(), {}, Rat(1));
  w.add_term({}, Perm(), {2}, Rat(1));
  wv = w * v;
  CHECK(vw == v * w);
  for (const auto& other : {v, w}) {
    CHECK(vw * other == other * vw);
  }
  CHECK(!(wv * v == v * wv));
}

TEST_CASE("quotient projections") {
  int n = 2;
  // Symmetric image of e_1 e_2 - e_2 e_1 s_1 vanishes.
  TBar rel = e(n, 1) * e(n, 2) - TBar::tbar_word(n, {1, 2}).right_mul(GAElem::of(Perm::adjacent(1)));
  CHECK(quotient_project(rel, QuotientKind::Symmetric).empty());
  // Antisymmetric image of e_1 e_1 vanishes.
  CHECK(quotient_project(TBar::tbar_word(n, {1, 1}), QuotientKind::Antisymmetric).empty());
  auto sym = quotient_project(TBar::tbar_word(n, {1, 2}), QuotientKind::Symmetric);
  CHECK(sym.size() == 1);
  CHECK(sym.at(Word{1, 2}) == 1);
  // The relation sigma - sgn(sigma) dies in the antisymmetric quotient.
  TBar phi = TBar::tbar_word(n, {1, 2});
  TBar rel2 = phi.right_mul(GAElem::of(Perm::adjacent(1))) + phi;
  CHECK(quotient_project(rel2, QuotientKind::Antisymmetric).empty());
}

TEST_CASE("associativity of operator products") {
  int n = 2;
  LOp a = LOp::polarization(n, 1, 2) + LOp::lop_perm(n, Perm::adjacent(1)).scale(rat(1, 2));
  LOp b = LOp::lop_covec(n, 2) * LOp::lop_covec(n, 1);
  LOp c = LOp::lop_vec(n, 1) * LOp::lop_vec(n, 2);
  CHECK((a * b) * c == a * (b * c));
  CHECK((b * a) * c == b * (a * c));
  CHECK((c * b) * a == c * (b * a));
}

TEST_CASE("grading bookkeeping") {
  int n = 2;
  TBar phi = TBar::tbar_word(n, {1, 2});
  CHECK(phi.vector_degree() == 2);
  CHECK(phi.q_degree() == 0);
  TBar psi = phi.right_mul(GAElem::of(Perm::cycle({1, 2, 3})));
  CHECK(psi.q_degree() == 1);
}

TEST_CASE("serialization round trips") {
  int n = 2;
  LOp op = LOp::polarization(n, 1, 2) * LOp::polarization(n, 2, 1);
  op = op + LOp::lop_perm(n, Perm::adjacent(1)).scale(rat(-2, 3));
  CHECK(lop_from_text(lop_to_text(op), n) == op);
  CHECK(lop_from_json(lop_to_json(op), n) == op);
  GAElem g = GAElem::of(Perm::cycle({1, 3, 2}), rat(5, 7)) + GAElem::unit().scale(-2);
  CHECK(ga_from_text(ga_to_text(g)) == g);
  CHECK(ga_from_json(ga_to_json(g)) == g);
}
