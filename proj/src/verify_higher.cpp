#include "extensor/characters.hpp"
#include "extensor/envelope.hpp"
#include "extensor/ring_matrix.hpp"
#include "extensor/slices.hpp"
#include "extensor/verify.hpp"
#include "extensor/weyl.hpp"

namespace extensor {

namespace {
using KV = std::vector<std::pair<std::string, std::string>>;
std::string S(int v) { return std::to_string(v); }

std::vector<int> reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

GroupAlg<WeylElem> pi_poly_ga(const GAPBW& u, int nprime) {
  GroupAlg<WeylElem> out;
  for (const auto& [s, c] : u.terms()) out.add_term(s, pi_poly(c, nprime));
  return out;
}

GroupAlg<LOp> pi_tensor_ga(const GAPBW& u, int n, int nprime) {
  GroupAlg<LOp> out;
  for (const auto& [s, c] : u.terms()) out.add_term(s, pi_tensor(c, n, nprime));
  return out;
}

}  // namespace

std::vector<Report> verify_higher_capelli_weyl(int n, int nprime, int pmax) {
  std::vector<Report> out;
  auto X = x_matrix(n, nprime);
  auto D = d_matrix(n, nprime);
  for (int p = 1; p <= pmax; ++p) {
    auto iwords = index_words(n, p);
    auto kwords = index_words(nprime, p);
    for (const auto& lambda : Partition::all(p)) {
      KV params{{"n", S(n)}, {"nprime", S(nprime)}, {"lambda", lambda.to_string()}};
      WeylElem lhs = pi_poly(quantum_immanant(QImmVariant::GCirc, lambda, n), nprime);

      WeylElem rhs;
      for (const auto& I : iwords)
        for (const auto& K : kwords)
          rhs = rhs + imm(ImmKind::Column, lambda, X.submatrix(I, K)) *
                          imm(ImmKind::Column, lambda, D.submatrix(I, K));
      rhs = rhs.scale(character_dim(lambda) / (rat_factorial(p) * rat_factorial(p)));
      out.push_back(Report::make("higher-capelli-weyl-immanant", params, lhs == rhs,
                                 static_cast<long>(lhs.term_count()),
                                 static_cast<long>(rhs.term_count())));

      // Single-sum variant: (1/p!) sum_{I,K,sigma} chi(sigma)
      //   x_{i_sigma(p) k_p} ... x_{i_sigma(1) k_1} d_{i_1 k_1} ... d_{i_p k_p}.
      WeylElem alt;
      for (const auto& I : iwords)
        for (const auto& K : kwords)
          for (const auto& s : symmetric_group(p)) {
            WeylElem prod = WeylElem::one();
            for (int k = p; k >= 1; --k) prod = prod * WeylElem::x(I[s(k) - 1], K[k - 1]);
            for (int k = 1; k <= p; ++k) prod = prod * WeylElem::d(I[k - 1], K[k - 1]);
            alt = alt + prod.scale(character(lambda, s, p));
          }
      alt = alt.scale(Rat(1) / rat_factorial(p));
      out.push_back(Report::make("higher-capelli-weyl-single-sum", params, lhs == alt,
                                 static_cast<long>(lhs.term_count()),
                                 static_cast<long>(alt.term_count())));
    }

    // Preimmanant form in CS_p (x) Weyl.
    KV params{{"n", S(n)}, {"nprime", S(nprime)}, {"p", S(p)}};
    GroupAlg<WeylElem> lhs = pi_poly_ga(quantum_preimmanant(QImmVariant::GCirc, p, n), nprime);
    GroupAlg<WeylElem> rhs;
    for (const auto& I : iwords)
      for (const auto& K : kwords)
        rhs = rhs + preimm(PreimmKind::Column, X.submatrix(I, K)) *
                        preimm(PreimmKind::Column, D.submatrix(I, K), true);
    rhs = rhs.scale(Rat(1) / (rat_factorial(p) * rat_factorial(p)));
    out.push_back(Report::make("higher-capelli-weyl-preimmanant", params, lhs == rhs,
                               static_cast<long>(lhs.term_count()),
                               static_cast<long>(rhs.term_count())));
  }
  return out;
}

std::vector<Report> verify_higher_capelli_t(int n, int nprime, int pmax) {
  std::vector<Report> out;
  int N0 = n * nprime;
  auto Z = RingMatrix<LOp>::from(n, nprime, [&](int i, int j) {
    LOp t = LOp::lop_zero(N0);
    t.add_term({tensor_index(i, j, nprime)}, Perm(), {}, Rat(1));
    return t;
  });
  auto Zs = RingMatrix<LOp>::from(n, nprime, [&](int i, int j) {
    LOp t = LOp::lop_zero(N0);
    t.add_term({}, Perm(), {tensor_index(i, j, nprime)}, Rat(1));
    return t;
  });
  for (int p = 1; p <= pmax; ++p) {
    auto iwords = index_words(n, p);
    auto kwords = index_words(nprime, p);
    for (const auto& lambda : Partition::all(p)) {
      KV params{{"n", S(n)}, {"nprime", S(nprime)}, {"lambda", lambda.to_string()}};
      LOp lhs = pi_tensor(quantum_immanant(QImmVariant::GCirc, lambda, n), n, nprime);
      LOp rhs = LOp::lop_zero(N0);
      for (const auto& I : iwords)
        for (const auto& K : kwords)
          rhs = rhs + imm(ImmKind::Column, lambda, Z.submatrix(reversed(I), reversed(K))) *
                          imm(ImmKind::Column, lambda, Zs.submatrix(I, K));
      rhs = rhs.scale(character_dim(lambda) / (rat_factorial(p) * rat_factorial(p)));
      bool normal_eq = lhs == rhs;
      bool matrix_eq = true;
      for (int m = p; m <= p + 1; ++m) {
        SliceBasis basis(N0, m, 0);
        if (!(lop_matrix(lhs, basis) == lop_matrix(rhs, basis))) matrix_eq = false;
      }
      out.push_back(Report::make("higher-capelli-tensor-immanant", params, normal_eq && matrix_eq,
                                 static_cast<long>(lhs.term_count()),
                                 static_cast<long>(rhs.term_count())));
    }

    KV params{{"n", S(n)}, {"nprime", S(nprime)}, {"p", S(p)}};
    GroupAlg<LOp> lhs = pi_tensor_ga(quantum_preimmanant(QImmVariant::GCirc, p, n), n, nprime);
    GroupAlg<LOp> rhs;
    for (const auto& I : iwords)
      for (const auto& K : kwords)
        rhs = rhs + preimm(PreimmKind::Column, Z.submatrix(reversed(I), reversed(K))) *
                        preimm(PreimmKind::Column, Zs.submatrix(I, K), true);
    rhs = rhs.scale(Rat(1) / (rat_factorial(p) * rat_factorial(p)));
    bool normal_eq = lhs == rhs;
    bool matrix_eq = true;
    {
      SliceBasis basis(N0, p + 1, 0);
      for (const auto& [s, opl] : lhs.terms()) {
        LOp opr = rhs.coeff(s);
        if (!(lop_matrix(opl, basis) == lop_matrix(opr, basis))) matrix_eq = false;
      }
    }
    out.push_back(Report::make("higher-capelli-tensor-preimmanant", params, normal_eq && matrix_eq));
  }
  return out;
}

}  // namespace extensor
