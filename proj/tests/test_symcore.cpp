#include <doctest.h>

#include "extensor/characters.hpp"
#include "extensor/group_algebra.hpp"
#include "extensor/partition.hpp"
#include "extensor/perm.hpp"
#include "extensor/tableau.hpp"

using namespace extensor;

TEST_CASE("permutation composition and canonical form") {
  Perm id;
  Perm s1 = Perm::adjacent(1);
  CHECK(id * s1 == s1);
  CHECK(s1 * s1 == id);
  // ((1 2) o (2 3))(k) = (1 2)((2 3)(k)): the 3-cycle 1->2->3->1.
  Perm c = s1 * Perm::adjacent(2);
  CHECK(c(1) == 2);
  CHECK(c(2) == 3);
  CHECK(c(3) == 1);
  CHECK(c == Perm::cycle({1, 2, 3}));
  // Trailing fixed points trimmed: s_1 in S_2 equals s_1 in S_5.
  CHECK(Perm(std::vector<int>{2, 1, 3, 4, 5}) == s1);
  CHECK(Perm::parse("(1 2)(3 4 5)") == s1 * Perm::cycle({3, 4, 5}));
  CHECK(Perm::parse("()").is_identity());
  CHECK(Perm::parse("(1 2)(3 4 5)").cycles_str() == "(1 2)(3 4 5)");
}

TEST_CASE("sign and cycle type") {
  CHECK(Perm().sign() == 1);
  CHECK(Perm::adjacent(1).sign() == -1);
  CHECK(Perm::cycle({1, 2, 3}).sign() == 1);
  CHECK(Perm().cycle_lengths(3) == std::vector<int>{1, 1, 1});
  CHECK(Perm::adjacent(1).cycle_lengths(2) == std::vector<int>{2});
  CHECK(Perm::adjacent(1).cycle_lengths(3) == std::vector<int>{2, 1});
  CHECK_THROWS(Perm::adjacent(3).cycle_lengths(2));
}

TEST_CASE("group law properties on S_6 samples") {
  auto s6 = symmetric_group(4);  // full S_4 associativity, signs multiplicative
  for (size_t a = 0; a < s6.size(); a += 3)
    for (size_t b = 1; b < s6.size(); b += 5)
      for (size_t c = 2; c < s6.size(); c += 7) {
        CHECK((s6[a] * s6[b]) * s6[c] == s6[a] * (s6[b] * s6[c]));
        CHECK((s6[a] * s6[b]).sign() == s6[a].sign() * s6[b].sign());
      }
  // A few S_6 spot checks.
  Perm x = Perm::cycle({1, 4, 6}), y = Perm::cycle({2, 5}), z = Perm::cycle({3, 6, 1, 2});
  CHECK((x * y) * z == x * (y * z));
  CHECK((x * z).sign() == x.sign() * z.sign());
}

TEST_CASE("alpha shift") {
  CHECK(Perm::adjacent(1).alpha(1) == Perm::adjacent(2));
  Perm c = Perm::cycle({1, 2, 3});
  CHECK(c.alpha(0) == c);
  CHECK(c.alpha(2) == Perm::cycle({3, 4, 5}));
  CHECK_THROWS(c.alpha(-1));
}

TEST_CASE("group algebra basics") {
  GAElem one = GAElem::unit();
  GAElem s1 = GAElem::of(Perm::adjacent(1));
  GAElem t = s1.scale(rat(1, 2)) + one.scale(rat(1, 2));
  CHECK(one * t == t);
  CHECK(s1 * s1 == one);
  CHECK(t * t == t);  // (1+s_1)/2 is idempotent
}

TEST_CASE("stabilizer idempotents") {
  CHECK(stabilizer_idempotent({1, 2}) == GAElem::unit());
  GAElem half = GAElem::unit().scale(rat(1, 2)) + GAElem::of(Perm::adjacent(1)).scale(rat(1, 2));
  CHECK(stabilizer_idempotent({1, 1}) == half);
  CHECK(stabilizer_idempotent({1, 1, 2}) == half);
  for (const auto& I : {std::vector<int>{1, 1, 1}, {2, 1, 2}, {3, 3, 1}}) {
    GAElem s = stabilizer_idempotent(I);
    CHECK(s * s == s);
  }
}

TEST_CASE("jucys-murphy elements") {
  CHECK(jucys_murphy(JMKind::X, 1, 4).is_zero());
  GAElem x3 = GAElem::of(Perm::transposition(1, 3)) + GAElem::of(Perm::transposition(2, 3));
  CHECK(jucys_murphy(JMKind::X, 3, 4) == x3);
  // epsilon^{-1} x_i epsilon = x-circ_i and alpha^{p-i}(y_i) = x-circ_i at p=4, i=3.
  GAElem eps = GAElem::of(Perm::reversal(4));
  CHECK(eps * jucys_murphy(JMKind::X, 3, 4) * eps == jucys_murphy(JMKind::XCirc, 3, 4));
  CHECK(jucys_murphy(JMKind::Y, 3, 4).alpha(1) == jucys_murphy(JMKind::XCirc, 3, 4));
  // Recurrence x_{i+1} = s_i x_i s_i + s_i for p <= 6.
  for (int p = 2; p <= 6; ++p)
    for (int i = 1; i < p; ++i) {
      GAElem s = GAElem::of(Perm::adjacent(i));
      CHECK(jucys_murphy(JMKind::X, i + 1, p) == s * jucys_murphy(JMKind::X, i, p) * s + s);
    }
}

TEST_CASE("characters by murnaghan-nakayama") {
  CHECK(character(Partition{1, 1}, Perm::adjacent(1), 2) == -1);
  CHECK(character(Partition{2, 1}, Perm(), 3) == 2);
  CHECK(character(Partition{2, 1}, Perm::cycle({1, 2, 3}), 3) == -1);
  CHECK(character_dim(Partition{2, 2}) == 2);
  CHECK(character_dim(Partition{3, 1, 1}) == 6);
  // chi(sigma) = chi(sigma^{-1}) for p <= 5.
  for (int p = 1; p <= 5; ++p)
    for (const auto& lambda : Partition::all(p))
      for (const auto& s : symmetric_group(p))
        CHECK(character(lambda, s, p) == character(lambda, s.inverse(), p));
}

TEST_CASE("character orthogonality") {
  // Column orthogonality: sum_lambda chi(sigma) chi(tau) = z * [sigma ~ tau].
  for (int p = 1; p <= 5; ++p) {
    auto sp = symmetric_group(p);
    for (size_t a = 0; a < sp.size(); a += 7)
      for (size_t b = 0; b < sp.size(); b += 5) {
        Partition ta(sp[a].cycle_lengths(p)), tb(sp[b].cycle_lengths(p));
        Rat sum = 0;
        for (const auto& lambda : Partition::all(p)) sum += character(lambda, ta) * character(lambda, tb);
        CHECK(sum == (ta == tb ? ta.z() : Rat(0)));
      }
  }
  // |S_n| chi(sigma)/chi(1) = sum_{sigma'} chi(sigma sigma'^{-1}) chi(sigma') for p <= 4.
  for (int p = 1; p <= 4; ++p) {
    auto sp = symmetric_group(p);
    for (const auto& lambda : Partition::all(p))
      for (const auto& s : sp) {
        Rat rhs = 0;
        for (const auto& s2 : sp) rhs += character(lambda, s * s2.inverse(), p) * character(lambda, s2, p);
        CHECK(rat_factorial(p) * character(lambda, s, p) / character_dim(lambda) == rhs);
      }
  }
}

TEST_CASE("chi_apply linearity") {
  CHECK(chi_apply(Partition{2}, GAElem::unit(), 2) == 1);
  CHECK(chi_apply(Partition{2}, GAElem::of(Perm::adjacent(1)), 2) == 1);
  CHECK(chi_apply(Partition{1, 1}, GAElem::unit() + GAElem::of(Perm::adjacent(1)), 2) == 0);
}

TEST_CASE("central basis elements") {
  GAElem half = GAElem::unit().scale(rat(1, 2)) + GAElem::of(Perm::adjacent(1)).scale(rat(1, 2));
  CHECK(central_basis(CentralKind::STilde, Partition{2}, 2) == half);
  CHECK(central_basis(CentralKind::PTilde, Partition{1, 1}, 2) == GAElem::unit());
  // Completeness (the expansion lemma at t = 1): sum chi(1) s~_lambda = 1.
  GAElem sum;
  for (const auto& lambda : Partition::all(3))
    sum = sum + central_basis(CentralKind::STilde, lambda, 3).scale(character_dim(lambda));
  CHECK(sum == GAElem::unit());
  // Orthogonality s~_la s~_mu = delta (1/chi(1)) s~_la; h~ and p~ central, p <= 5.
  for (int p = 1; p <= 5; ++p) {
    auto parts = Partition::all(p);
    for (const auto& la : parts) {
      GAElem sa = central_basis(CentralKind::STilde, la, p);
      CHECK(is_central(central_basis(CentralKind::HTilde, la, p), p));
      CHECK(is_central(central_basis(CentralKind::PTilde, la, p), p));
      for (const auto& mu : parts) {
        GAElem sb = central_basis(CentralKind::STilde, mu, p);
        CHECK(sa * sb == (la == mu ? sa.scale(1 / character_dim(la)) : GAElem()));
      }
    }
  }
  // The expansion lemma itself: t = sum chi_lambda(t) s~_lambda for central t.
  for (int p = 2; p <= 4; ++p) {
    GAElem t = central_basis(CentralKind::PTilde, Partition::all(p)[1], p) +
               central_basis(CentralKind::HTilde, Partition{p}, p).scale(rat(3, 2));
    GAElem expansion;
    for (const auto& lambda : Partition::all(p))
      expansion = expansion +
                  central_basis(CentralKind::STilde, lambda, p).scale(chi_apply(lambda, t, p));
    CHECK(expansion == t);
  }
}

TEST_CASE("is_central and central_decompose") {
  CHECK(is_central(central_basis(CentralKind::STilde, Partition{2, 1}, 3), 3));
  CHECK_FALSE(is_central(GAElem::of(Perm::adjacent(1)), 3));
  CHECK(is_central(jucys_murphy(JMKind::X, 2, 2), 2));  // x_2 = s_1 central in CS_2

  auto d1 = central_decompose(GAElem::unit(), 3);
  for (const auto& lambda : Partition::all(3)) CHECK(d1.at(lambda) == character_dim(lambda));
  auto d2 = central_decompose(central_basis(CentralKind::STilde, Partition{2, 1}, 3), 3);
  CHECK(d2.size() == 1);
  CHECK(d2.at(Partition{2, 1}) == 1);
  GAElem all;
  for (const auto& s : symmetric_group(3)) all = all + GAElem::of(s);
  auto d3 = central_decompose(all, 3);
  CHECK(d3.size() == 1);
  CHECK(d3.at(Partition{3}) == 6);
  CHECK_THROWS(central_decompose(GAElem::of(Perm::adjacent(1)), 3));
}

TEST_CASE("standard tableaux and contents") {
  CHECK(std_tableaux(Partition{2}).size() == 1);
  CHECK(std_tableaux(Partition{2, 1}).size() == 2);
  CHECK(std_tableaux(Partition{1, 1, 1}).size() == 1);
  Tableau t(Partition{2, 1}, {{1, 3}, {2}});
  CHECK(t.content(1) == 0);
  CHECK(t.content(2) == -1);
  CHECK(t.content(3) == 1);
  auto cs = diagram_contents(Partition{4, 3, 1});
  CHECK(cs == std::vector<int>{0, 1, 2, 3, -1, 0, 1, -2});
  for (const auto& T : std_tableaux(Partition{3, 2})) CHECK(T.content(1) == 0);
}

TEST_CASE("serialization round trips") {
  Perm p = Perm::parse("(1 3 2)(4 5)");
  CHECK(Perm::parse(p.cycles_str()) == p);
  CHECK(Partition::parse("4,3,1") == Partition{4, 3, 1});
  CHECK(rat_parse("-7/3") == rat(-7, 3));
  CHECK(rat_str(rat(-7, 3)) == "-7/3");
  CHECK(rat_str(rat(5)) == "5");
}
