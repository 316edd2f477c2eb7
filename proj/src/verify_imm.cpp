#include "extensor/characters.hpp"
#include "extensor/ring_matrix.hpp"
#include "extensor/symfunc.hpp"
#include "extensor/verify.hpp"

namespace extensor {

namespace {
using KV = std::vector<std::pair<std::string, std::string>>;
std::string S(int v) { return std::to_string(v); }

RingMatrix<Rat> random_rat_matrix(Rng& rng, int rows, int cols) {
  RingMatrix<Rat> m(rows, cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) m.at(i, j) = rat(rng.range(-9, 9), rng.range(1, 3));
  return m;
}

RingMatrix<GAElem> random_ga_matrix(Rng& rng, int n, int group_p) {
  auto sp = symmetric_group(group_p);
  RingMatrix<GAElem> m(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      GAElem e;
      for (int t = 0; t < 2; ++t)
        e.add_term(sp[rng.range(0, static_cast<long>(sp.size()) - 1)], Rat(rng.range(-3, 3)));
      m.at(i, j) = e;
    }
  return m;
}

}  // namespace

std::vector<Report> verify_immanant_identities(std::uint64_t seed) {
  std::vector<Report> out;
  Rng rng(seed);

  // Four-way coincidence over a commutative ring, 20 seeded 3x3 matrices.
  for (int trial = 0; trial < 20; ++trial) {
    auto X = random_rat_matrix(rng, 3, 3);
    bool ok = true;
    for (const auto& lambda : Partition::all(3)) {
      Rat c = imm(ImmKind::Column, lambda, X);
      if (imm(ImmKind::Row, lambda, X) != c || imm(ImmKind::Double, lambda, X) != c ||
          imm(ImmKind::Symm, lambda, X) != c)
        ok = false;
    }
    out.push_back(Report::make("immanant-four-expressions-commutative",
                               {{"trial", S(trial)}, {"size", "3"}}, ok));
  }

  // Cauchy-Binet for immanants and preimmanants, p <= 3, sizes <= 3.
  for (int p = 1; p <= 3; ++p) {
    auto X = random_rat_matrix(rng, 3, 3);
    auto Y = random_rat_matrix(rng, 3, 3);
    bool ok_imm = true, ok_pre = true;
    std::vector<std::vector<int>> picks = {{}, {}};
    picks[0] = std::vector<int>(p, 1);
    for (int k = 0; k < p; ++k) picks[1].push_back(std::min(3, k + 1));
    for (const auto& I : picks)
      for (const auto& K : picks) {
        for (const auto& lambda : Partition::all(p))
          if (!cauchy_binet_imm(lambda, X, Y, I, K)) ok_imm = false;
        if (!cauchy_binet_preimm(X, Y, I, K)) ok_pre = false;
      }
    out.push_back(Report::make("cauchy-binet-immanant", {{"p", S(p)}}, ok_imm));
    out.push_back(Report::make("cauchy-binet-preimmanant", {{"p", S(p)}}, ok_pre));
  }

  // symm-imm invariance under simultaneous row/column permutation,
  // noncommutative entries.
  {
    auto X = random_ga_matrix(rng, 3, 3);
    bool ok = true;
    for (const auto& s : symmetric_group(3)) {
      auto conj = X.act_left(s.inverse()).act_right(s);
      for (const auto& lambda : Partition::all(3))
        if (!(imm(ImmKind::Symm, lambda, conj) == imm(ImmKind::Symm, lambda, X))) ok = false;
    }
    out.push_back(Report::make("symm-immanant-conjugation-invariance", {{"size", "3"}}, ok));
  }

  // Equivariance of the six preimmanants under the permutation actions.
  {
    auto X = random_ga_matrix(rng, 3, 3);
    bool ok = true;
    for (const auto& s : symmetric_group(3))
      for (const auto& s2 : symmetric_group(3)) {
        auto sX = X.act_left(s);
        auto Xs = X.act_right(s2);
        auto sXs = X.act_left(s).act_right(s2);
        auto lift = [](const Perm& g) { return GroupAlg<GAElem>::of(g, GAElem::unit()); };
        if (!(preimm(PreimmKind::Column, sX) == lift(s) * preimm(PreimmKind::Column, X))) ok = false;
        if (!(preimm(PreimmKind::Row, Xs) == preimm(PreimmKind::Row, X) * lift(s2))) ok = false;
        if (!(preimm(PreimmKind::Symm, sXs) == lift(s) * preimm(PreimmKind::Symm, X) * lift(s2)))
          ok = false;
        // The circ companions follow by applying the antiautomorphism, which
        // inverts the outer factors.
        if (!(preimm(PreimmKind::Column, sX, true) ==
              preimm(PreimmKind::Column, X, true) * lift(s.inverse())))
          ok = false;
        if (!(preimm(PreimmKind::Row, Xs, true) ==
              lift(s2.inverse()) * preimm(PreimmKind::Row, X, true)))
          ok = false;
        if (!(preimm(PreimmKind::Symm, sXs, true) ==
              lift(s2.inverse()) * preimm(PreimmKind::Symm, X, true) * lift(s.inverse())))
          ok = false;
      }
    out.push_back(Report::make("preimmanant-permutation-equivariance", {{"size", "3"}}, ok));
  }

  // Characters recover immanants from preimmanants.
  {
    auto X = random_ga_matrix(rng, 3, 3);
    bool ok = true;
    for (const auto& lambda : Partition::all(3)) {
      if (!(chi_apply(lambda, preimm(PreimmKind::Column, X), 3) == imm(ImmKind::Column, lambda, X)))
        ok = false;
      if (!(chi_apply(lambda, preimm(PreimmKind::Row, X), 3) == imm(ImmKind::Row, lambda, X)))
        ok = false;
      if (!(chi_apply(lambda, preimm(PreimmKind::Symm, X), 3) == imm(ImmKind::Symm, lambda, X)))
        ok = false;
    }
    out.push_back(Report::make("character-of-preimmanant", {{"size", "3"}}, ok));
  }

  // preimm of the transpose is the circ preimmanant (commutative case).
  {
    auto X = random_rat_matrix(rng, 3, 3);
    bool ok = preimm(PreimmKind::Column, X.transpose()) == preimm(PreimmKind::Column, X, true);
    out.push_back(Report::make("preimmanant-transpose-circ", {{"size", "3"}}, ok));
  }

  // imm_{lambda,p} X = s_lambda(diagonal) for triangular rational X.
  for (int n = 1; n <= 3; ++n)
    for (int p = 1; p <= 4; ++p) {
      auto X = random_rat_matrix(rng, n, n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) X.at(i, j) = 0;  // upper triangular
      std::vector<Rat> eig(n);
      for (int i = 1; i <= n; ++i) eig[i - 1] = X.at(i, i);
      bool ok = true;
      for (const auto& lambda : Partition::all(p)) {
        Rat lhs = imm_lambda_p(lambda, p, X);
        Rat lhs_reduced = imm_lambda_p(lambda, p, X, true);
        Rat rhs = sym_eval(SymKind::Schur, lambda, eig);
        if (lhs != rhs || lhs_reduced != rhs) ok = false;
      }
      out.push_back(Report::make("immanant-schur-of-eigenvalues", {{"n", S(n)}, {"p", S(p)}}, ok));
    }
  return out;
}

std::vector<Report> verify_preimm_expansions(std::uint64_t seed) {
  std::vector<Report> out;
  Rng rng(seed);

  // The six trace sums coincide over a commutative ring.
  for (int p = 1; p <= 3; ++p) {
    auto X = random_rat_matrix(rng, 2, 2);
    GAElem sums[6];
    for (const auto& I : index_words(2, p)) {
      auto XII = X.submatrix(I, I);
      sums[0] = sums[0] + preimm(PreimmKind::Column, XII);
      sums[1] = sums[1] + preimm(PreimmKind::Row, XII);
      sums[2] = sums[2] + preimm(PreimmKind::Symm, XII);
      sums[3] = sums[3] + preimm(PreimmKind::Column, XII, true);
      sums[4] = sums[4] + preimm(PreimmKind::Row, XII, true);
      sums[5] = sums[5] + preimm(PreimmKind::Symm, XII, true);
    }
    bool ok = true;
    for (int k = 1; k < 6; ++k)
      if (!(sums[k] == sums[0])) ok = false;
    out.push_back(Report::make("preimm-p-six-expressions-commutative", {{"n", "2"}, {"p", S(p)}}, ok));
  }
  // Over a noncommutative ring: column/row pairs coincide, the symmetrized
  // pair coincides, and the symmetrized sum is central. (The column and
  // symmetrized sums differ from degree 3 on.)
  for (int p = 1; p <= 3; ++p) {
    auto X = random_ga_matrix(rng, 2, 3);
    GroupAlg<GAElem> col, row, symm, colc, rowc, symmc;
    for (const auto& I : index_words(2, p)) {
      auto XII = X.submatrix(I, I);
      col = col + preimm(PreimmKind::Column, XII);
      row = row + preimm(PreimmKind::Row, XII);
      symm = symm + preimm(PreimmKind::Symm, XII);
      colc = colc + preimm(PreimmKind::Column, XII, true);
      rowc = rowc + preimm(PreimmKind::Row, XII, true);
      symmc = symmc + preimm(PreimmKind::Symm, XII, true);
    }
    bool pairs_ok = col == row && colc == rowc && symm == symmc;
    out.push_back(Report::make("preimm-p-trace-sum-pairs", {{"n", "2"}, {"p", S(p)}}, pairs_ok));
    auto pre = preimm_p(p, X);
    out.push_back(Report::make("preimm-p-centrality", {{"n", "2"}, {"p", S(p)}},
                               is_central(pre, p)));
  }

  // Conjugation invariance by a rational invertible g, noncommutative entries.
  for (int p = 1; p <= 3; ++p) {
    auto X = random_ga_matrix(rng, 2, 3);
    std::vector<std::vector<Rat>> g = {{1, 1}, {1, 2}}, ginv = {{2, -1}, {-1, 1}};
    auto conj = X.conjugate_rational(g, ginv);
    bool ok = preimm_p(p, conj) == preimm_p(p, X);
    out.push_back(Report::make("preimm-p-gl-invariance", {{"n", "2"}, {"p", S(p)}}, ok));
  }

  // Triple symmetric-function expansion for diagonal rational X.
  for (int n = 1; n <= 3; ++n)
    for (int p = 1; p <= 4; ++p) {
      RingMatrix<Rat> X(n, n);
      std::vector<Rat> a(n);
      for (int i = 1; i <= n; ++i) {
        X.at(i, i) = Rat(rng.range(-5, 5));
        a[i - 1] = X.at(i, i);
      }
      GAElem lhs = preimm_p(p, X);
      GAElem via_schur, via_monomial, via_powersum;
      for (const auto& lambda : Partition::all(p)) {
        via_schur = via_schur +
                    central_basis(CentralKind::STilde, lambda, p).scale(sym_eval(SymKind::Schur, lambda, a));
        via_monomial = via_monomial + central_basis(CentralKind::HTilde, lambda, p)
                                          .scale(sym_eval(SymKind::Monomial, lambda, a));
        via_powersum = via_powersum + central_basis(CentralKind::PTilde, lambda, p)
                                          .scale(sym_eval(SymKind::PowerSum, lambda, a) / lambda.z());
      }
      bool ok = lhs == via_schur && lhs == via_monomial && lhs == via_powersum;
      out.push_back(Report::make("preimm-p-symmetric-function-expansions",
                                 {{"n", S(n)}, {"p", S(p)}}, ok));
    }

  // chi_lambda(preimm_p X) = imm_{lambda,p} X over a noncommutative ring.
  for (int p = 1; p <= 3; ++p) {
    auto X = random_ga_matrix(rng, 2, 3);
    auto pre = preimm_p(p, X);
    bool ok = true;
    for (const auto& lambda : Partition::all(p))
      if (!(chi_apply(lambda, pre, p) == imm_lambda_p(lambda, p, X))) ok = false;
    out.push_back(Report::make("character-of-preimm-p", {{"n", "2"}, {"p", S(p)}}, ok));
  }
  return out;
}

}  // namespace extensor
