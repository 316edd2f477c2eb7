#include "extensor/characters.hpp"
#include "extensor/slices.hpp"
#include "extensor/tensor.hpp"
#include "extensor/verify.hpp"

namespace extensor {

namespace {
using KV = std::vector<std::pair<std::string, std::string>>;
std::string S(int v) { return std::to_string(v); }
std::string word_str(const Word& w) {
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s;
}
}  // namespace

std::vector<Report> verify_ccr(int n) {
  std::vector<Report> out;
  auto vec = [n](int a) { return LOp::lop_vec(n, a); };
  auto cov = [n](int a) { return LOp::lop_covec(n, a); };
  auto sg = [n](int i) { return LOp::lop_perm(n, Perm::adjacent(i)); };
  auto one = LOp::lop_one(n);

  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      LOp l1 = vec(b) * vec(a), r1 = vec(a) * vec(b) * sg(1);
      out.push_back(Report::make("creation-exchange", {{"n", S(n)}, {"a", S(a)}, {"b", S(b)}},
                                 l1 == r1, l1.term_count(), r1.term_count()));
      LOp l2 = cov(b) * cov(a), r2 = sg(1) * cov(a) * cov(b);
      out.push_back(Report::make("annihilation-exchange", {{"n", S(n)}, {"a", S(a)}, {"b", S(b)}},
                                 l2 == r2, l2.term_count(), r2.term_count()));
      LOp l3 = cov(b) * vec(a);
      LOp r3 = vec(a) * sg(1) * cov(b);
      if (a == b) r3 = r3 + one;
      out.push_back(Report::make("ccr-contraction", {{"n", S(n)}, {"a", S(a)}, {"b", S(b)}},
                                 l3 == r3, l3.term_count(), r3.term_count()));
    }
  for (int a = 1; a <= n; ++a)
    for (int i = 1; i <= 4; ++i) {
      LOp l4 = sg(i) * vec(a), r4 = vec(a) * sg(i + 1);
      out.push_back(Report::make("vector-shift", {{"n", S(n)}, {"a", S(a)}, {"i", S(i)}},
                                 l4 == r4, l4.term_count(), r4.term_count()));
      LOp l5 = cov(a) * sg(i), r5 = sg(i + 1) * cov(a);
      out.push_back(Report::make("covector-shift", {{"n", S(n)}, {"a", S(a)}, {"i", S(i)}},
                                 l5 == r5, l5.term_count(), r5.term_count()));
    }
  for (int i = 1; i <= 5; ++i) {
    LOp inv = sg(i) * sg(i);
    out.push_back(
        Report::make("adjacent-involution", {{"n", S(n)}, {"i", S(i)}}, inv == one, inv.term_count(), 1));
    LOp bl = sg(i) * sg(i + 1) * sg(i), br = sg(i + 1) * sg(i) * sg(i + 1);
    out.push_back(Report::make("braid", {{"n", S(n)}, {"i", S(i)}}, bl == br, bl.term_count(),
                               br.term_count()));
  }
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 2; j <= 5; ++j) {
      LOp cl = sg(i) * sg(j), cr = sg(j) * sg(i);
      out.push_back(Report::make("distant-commutation", {{"n", S(n)}, {"i", S(i)}, {"j", S(j)}},
                                 cl == cr, cl.term_count(), cr.term_count()));
    }
  return out;
}

namespace {

// L(e*_{w_1}) ... L(e*_{w_r}) applied to the e-word `word`.
TBar derivation_chain(int n, const Word& stars, const Word& word) {
  TBar cur = TBar::tbar_word(n, word);
  for (auto it = stars.rbegin(); it != stars.rend() && !cur.is_zero(); ++it)
    cur = derivation_apply(*it, cur);
  return cur;
}

}  // namespace

std::vector<Report> verify_pairing(int n, int pmax) {
  std::vector<Report> out;
  // <e*_{i_1}...e*_{i_p}, e_{i_p}...e_{i_1}> = I! s_I over all of [n]^p,
  // where I! is the stabilizer order (the word need not be sorted).
  for (int p = 1; p <= pmax; ++p) {
    for (const auto& I : all_words(n, p)) {
      TBar got = derivation_chain(n, I, I);
      Rat fact = Rat(static_cast<long>(word_stabilizer(I).size()));
      TBar want = TBar::tbar_ga(n, stabilizer_idempotent(I).scale(fact));
      out.push_back(Report::make("full-pairing-symmetrizer", {{"n", S(n)}, {"I", word_str(I)}},
                                 got == want, got.term_count(), want.term_count()));
    }
  }
  // Orthogonality for increasing sequences: r >= p and I != J gives zero.
  for (int r = 1; r <= pmax; ++r)
    for (int p = 1; p <= r; ++p)
      for (const auto& I : increasing_words(n, r, false))
        for (const auto& J : increasing_words(n, p, false)) {
          TBar got = derivation_chain(n, I, J);
          TBar want = TBar::tbar_zero(n);
          if (r == p && I == J)
            want = TBar::tbar_ga(n, stabilizer_idempotent(I).scale(word_multiplicity_factorial(I)));
          out.push_back(Report::make("pairing-orthogonality",
                                     {{"n", S(n)}, {"I", word_str(I)}, {"J", word_str(J)}},
                                     got == want, got.term_count(), want.term_count()));
        }
  return out;
}

std::vector<Report> verify_euler(int n, int totalmax) {
  std::vector<Report> out;
  LOp A = euler_op(n);
  for (int p = 0; p <= totalmax; ++p) {
    for (int q = 0; p + q <= totalmax; ++q) {
      SliceBasis basis(n, p, q);
      LOp Ap = euler_higher(n, p);
      bool euler_ok = true, higher_ok = true, poly_ok = true;
      for (int k = 0; k < basis.dim(); ++k) {
        TBar phi = basis.element(k);
        TBar a_phi = lop_apply(A, phi);
        if (!(a_phi == phi.scale(p))) euler_ok = false;
        TBar ap_phi = lop_apply(Ap, phi);
        if (!(ap_phi == phi)) higher_ok = false;
        // A_p = (A-p+1)(A-p+2)...A / p! as operators.
        TBar acc = a_phi - phi.scale(p - 1);
        if (p == 0) acc = phi;
        for (int c = 1; c < p; ++c) acc = lop_apply(A, acc) - acc.scale(p - 1 - c);
        acc = acc.scale(Rat(1) / rat_factorial(p));
        if (!(acc == ap_phi)) poly_ok = false;
      }
      KV params{{"n", S(n)}, {"p", S(p)}, {"q", S(q)}};
      KV dims{{"space", S(basis.dim())}};
      out.push_back(Report::make("euler-degree", params, euler_ok, basis.dim(), 0, dims));
      out.push_back(Report::make("higher-euler-identity", params, higher_ok, basis.dim(), 0, dims));
      out.push_back(Report::make("higher-euler-polynomial", params, poly_ok, basis.dim(), 0, dims));
    }
  }
  // Conjugation-sum identity: sum_I L(e_{i_r})..L(e_{i_1}) L(tau) L(e*_{i_1})..L(e*_{i_r})
  // acts as (1/(p-r)!) R(sum_sigma sigma^{-1} tau sigma) on T_p.
  int nn = std::min(n, 2);
  for (int p = 1; p <= 3; ++p) {
    SliceBasis basis(nn, p, 0);
    for (int r = 1; r <= p; ++r) {
      std::vector<Perm> taus = {Perm()};
      if (r >= 2) taus.push_back(Perm::adjacent(1));
      if (r >= 3) {
        std::vector<int> pts(r);
        for (int k = 0; k < r; ++k) pts[k] = k + 1;
        taus.push_back(Perm::cycle(pts));
      }
      for (const auto& tau : taus) {
        LOp lhs = LOp::lop_zero(nn);
        for (const auto& I : all_words(nn, r)) lhs.add_term(I, tau, I, Rat(1));
        GAElem classsum;
        for (const auto& s : symmetric_group(p)) classsum = classsum + GAElem::of(s.inverse() * tau * s);
        classsum = classsum.scale(Rat(1) / rat_factorial(p - r));
        bool ok = true;
        for (int k = 0; k < basis.dim(); ++k) {
          TBar phi = basis.element(k);
          if (!(lop_apply(lhs, phi) == phi.right_mul(classsum))) ok = false;
        }
        out.push_back(Report::make("vector-exchange-sum",
                                   {{"n", S(nn)}, {"p", S(p)}, {"r", S(r)}, {"tau", tau.cycles_str()}},
                                   ok, basis.dim(), 0));
      }
    }
  }
  return out;
}

}  // namespace extensor
