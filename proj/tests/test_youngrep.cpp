#include <doctest.h>

#include "extensor/characters.hpp"
#include "extensor/youngrep.hpp"

using namespace extensor;

TEST_CASE("one-dimensional shapes") {
  CHECK(rho_gen(Partition{3}, 1) == RatMatrix::identity(1));
  CHECK(rho_gen(Partition{3}, 2) == RatMatrix::identity(1));
  RatMatrix sign = rho_gen(Partition{1, 1, 1}, 2);
  CHECK(sign.rows() == 1);
  CHECK(sign.at(0, 0) == -1);
}

TEST_CASE("two-dimensional shape (2,1)") {
  // Diagonal entries of rho(s_1) are 1/r_T(1) = +-1 matching the contents.
  RatMatrix m = rho_gen(Partition{2, 1}, 1);
  auto tabs = std_tableaux(Partition{2, 1});
  for (size_t t = 0; t < tabs.size(); ++t) {
    int d = tabs[t].content(2) - tabs[t].content(1);
    CHECK(m.at(static_cast<int>(t), static_cast<int>(t)) == Rat(1) / Rat(d));
  }
}

TEST_CASE("rho is a homomorphism") {
  for (const auto& lambda : {Partition{2, 1}, Partition{2, 2}, Partition{3, 1}}) {
    int p = lambda.weight();
    CHECK(rho(lambda, Perm()).is_identity());
    auto sp = symmetric_group(p);
    for (size_t a = 0; a < sp.size(); a += 3)
      for (size_t b = 0; b < sp.size(); b += 5)
        CHECK(rho(lambda, sp[a] * sp[b]) == rho(lambda, sp[a]) * rho(lambda, sp[b]));
  }
}

TEST_CASE("generator relations for all shapes up to weight 5") {
  for (int p = 2; p <= 5; ++p)
    for (const auto& lambda : Partition::all(p)) {
      int dim = static_cast<int>(std_tableaux(lambda).size());
      RatMatrix id = RatMatrix::identity(dim);
      for (int i = 1; i < p; ++i) {
        RatMatrix m = rho_gen(lambda, i);
        CHECK(m * m == id);
        if (i + 1 < p) {
          RatMatrix m2 = rho_gen(lambda, i + 1);
          CHECK(m * m2 * m == m2 * m * m2);
        }
        for (int j = i + 2; j < p; ++j) CHECK(m * rho_gen(lambda, j) == rho_gen(lambda, j) * m);
      }
    }
}

TEST_CASE("jucys-murphy spectrum equals contents") {
  for (int p = 1; p <= 5; ++p)
    for (const auto& lambda : Partition::all(p)) {
      auto tabs = std_tableaux(lambda);
      auto spec = jm_spectrum(lambda);
      for (size_t t = 0; t < tabs.size(); ++t)
        for (int i = 1; i <= p; ++i)
          CHECK(spec.at({static_cast<int>(t), i}) == Rat(tabs[t].content(i)));
    }
  // The cell of 4 in each standard tableau of (2,2).
  auto tabs = std_tableaux(Partition{2, 2});
  auto spec = jm_spectrum(Partition{2, 2});
  for (size_t t = 0; t < tabs.size(); ++t)
    CHECK(spec.at({static_cast<int>(t), 4}) == Rat(tabs[t].content(4)));
}

TEST_CASE("traces recover characters") {
  for (int p = 1; p <= 5; ++p)
    for (const auto& lambda : Partition::all(p))
      for (const auto& s : symmetric_group(p))
        CHECK(rho(lambda, s).trace() == character(lambda, s, p));
}

TEST_CASE("diagonal entries") {
  CHECK(diag_entry(Partition{2, 1}, 0, GAElem::unit()) == 1);
  auto tabs = std_tableaux(Partition{2, 1});
  for (size_t t = 0; t < tabs.size(); ++t) {
    Rat d = Rat(tabs[t].content(2) - tabs[t].content(1));
    CHECK(diag_entry(Partition{2, 1}, static_cast<int>(t), GAElem::of(Perm::adjacent(1))) ==
          1 / d);
  }
  // Sum of diagonal entries is the character.
  for (const auto& s : symmetric_group(3)) {
    Rat sum = 0;
    for (int t = 0; t < 2; ++t) sum += diag_entry(Partition{2, 1}, t, GAElem::of(s));
    CHECK(sum == character(Partition{2, 1}, s, 3));
  }
}

TEST_CASE("schur lemma scalar action of central elements") {
  for (int p = 2; p <= 4; ++p) {
    GAElem casimir;
    for (int a = 1; a <= p; ++a)
      for (int b = a + 1; b <= p; ++b) casimir.add_term(Perm::transposition(a, b), 1);
    for (const auto& lambda : Partition::all(p)) {
      Rat scalar = chi_apply(lambda, casimir, p) / character_dim(lambda);
      CHECK(rho_elem(lambda, casimir).is_scalar(scalar));
    }
  }
}

TEST_CASE("diagonal entries are conjugation-convention independent") {
  // A diagonally conjugated variant of the seminormal form has the same
  // diagonal entries for every group element (lambda |- 4).
  for (const auto& lambda : Partition::all(4)) {
    int dim = static_cast<int>(std_tableaux(lambda).size());
    RatMatrix D(dim, dim), Dinv(dim, dim);
    for (int t = 0; t < dim; ++t) {
      Rat g = rat(2 * t + 3, t + 1);  // arbitrary nonzero rationals
      D.at(t, t) = g;
      Dinv.at(t, t) = 1 / g;
    }
    for (const auto& s : symmetric_group(4)) {
      RatMatrix a = rho(lambda, s);
      RatMatrix b = D * a * Dinv;  // the conjugated variant
      for (int t = 0; t < dim; ++t) CHECK(a.at(t, t) == b.at(t, t));
    }
  }
}
