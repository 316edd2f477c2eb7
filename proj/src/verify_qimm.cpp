#include "extensor/characters.hpp"
#include "extensor/envelope.hpp"
#include "extensor/symfunc.hpp"
#include "extensor/verify.hpp"
#include "extensor/youngrep.hpp"

namespace extensor {

namespace {
using KV = std::vector<std::pair<std::string, std::string>>;
std::string S(int v) { return std::to_string(v); }
}  // namespace

std::vector<Report> verify_jm_spectrum(int pmax) {
  std::vector<Report> out;
  for (int p = 1; p <= pmax; ++p) {
    // Recurrence x_{i+1} = s_i x_i s_i + s_i in CS_p.
    bool rec_ok = true;
    for (int i = 1; i < p; ++i) {
      GAElem s = GAElem::of(Perm::adjacent(i));
      GAElem lhs = jucys_murphy(JMKind::X, i + 1, p);
      GAElem rhs = s * jucys_murphy(JMKind::X, i, p) * s + s;
      if (!(lhs == rhs)) rec_ok = false;
    }
    out.push_back(Report::make("jucys-murphy-recurrence", {{"p", S(p)}}, rec_ok));

    // Conjugation and shift relations tying x, x-circ and y together.
    bool link_ok = true;
    GAElem eps = GAElem::of(Perm::reversal(p));
    for (int i = 1; i <= p; ++i) {
      if (!(eps * jucys_murphy(JMKind::X, i, p) * eps == jucys_murphy(JMKind::XCirc, i, p)))
        link_ok = false;
      if (!(jucys_murphy(JMKind::Y, i, p).alpha(p - i) == jucys_murphy(JMKind::XCirc, i, p)))
        link_ok = false;
    }
    out.push_back(Report::make("jucys-murphy-variants", {{"p", S(p)}}, link_ok));

    for (const auto& lambda : Partition::all(p)) {
      auto tabs = std_tableaux(lambda);
      // Generator relations of the seminormal matrices.
      bool rep_ok = true;
      RatMatrix id = RatMatrix::identity(static_cast<int>(tabs.size()));
      for (int i = 1; i < p; ++i) {
        RatMatrix m = rho_gen(lambda, i);
        if (!(m * m == id)) rep_ok = false;
        if (i + 1 < p) {
          RatMatrix m2 = rho_gen(lambda, i + 1);
          if (!(m * m2 * m == m2 * m * m2)) rep_ok = false;
        }
        for (int j = i + 2; j < p; ++j) {
          RatMatrix m3 = rho_gen(lambda, j);
          if (!(m * m3 == m3 * m)) rep_ok = false;
        }
      }
      // Spectrum of the Jucys-Murphy elements = contents.
      bool spec_ok = true;
      auto spec = jm_spectrum(lambda);
      for (size_t t = 0; t < tabs.size(); ++t)
        for (int i = 1; i <= p; ++i)
          if (spec.at({static_cast<int>(t), i}) != Rat(tabs[t].content(i))) spec_ok = false;
      // Traces match the Murnaghan-Nakayama characters.
      bool trace_ok = true;
      for (const auto& s : symmetric_group(p))
        if (rho(lambda, s).trace() != character(lambda, s, p)) trace_ok = false;
      // Central elements act as scalars chi(t)/chi(1).
      bool schur_ok = true;
      GAElem casimir;  // class sum of transpositions, central
      for (int a = 1; a <= p; ++a)
        for (int b = a + 1; b <= p; ++b) casimir.add_term(Perm::transposition(a, b), 1);
      if (p >= 2 &&
          !rho_elem(lambda, casimir)
               .is_scalar(chi_apply(lambda, casimir, p) / character_dim(lambda)))
        schur_ok = false;
      KV params{{"p", S(p)}, {"lambda", lambda.to_string()}};
      out.push_back(Report::make("seminormal-generator-relations", params, rep_ok));
      out.push_back(Report::make("jucys-murphy-content-spectrum", params, spec_ok));
      out.push_back(Report::make("seminormal-trace-character", params, trace_ok));
      out.push_back(Report::make("central-element-scalar-action", params, schur_ok));
    }
  }
  return out;
}

std::vector<Report> verify_centrality(int n, int pmax) {
  std::vector<Report> out;
  for (int nn = 1; nn <= n; ++nn) {
    for (int r = 1; r <= nn; ++r)
      out.push_back(Report::make("capelli-element-central", {{"n", S(nn)}, {"r", S(r)}},
                                 is_central_u(capelli(r, nn), nn)));
    for (int p = 1; p <= pmax; ++p) {
      bool g_ok = is_central_u(quantum_preimmanant(QImmVariant::G, p, nn), nn, p);
      bool gc_ok = is_central_u(quantum_preimmanant(QImmVariant::GCirc, p, nn), nn, p);
      out.push_back(Report::make("quantum-preimmanant-central",
                                 {{"n", S(nn)}, {"p", S(p)}, {"variant", "G"}}, g_ok));
      out.push_back(Report::make("quantum-preimmanant-central",
                                 {{"n", S(nn)}, {"p", S(p)}, {"variant", "Gcirc"}}, gc_ok));
      for (const auto& lambda : Partition::all(p)) {
        bool gl_ok = is_central_u(quantum_immanant(QImmVariant::G, lambda, nn), nn);
        bool gcl_ok = is_central_u(quantum_immanant(QImmVariant::GCirc, lambda, nn), nn);
        out.push_back(Report::make("quantum-immanant-central",
                                   {{"n", S(nn)}, {"lambda", lambda.to_string()}}, gl_ok && gcl_ok));
      }
    }
  }
  return out;
}

std::vector<Report> verify_qimm_equalities(int n, int pmax) {
  std::vector<Report> out;
  for (int nn = 1; nn <= n; ++nn) {
    for (int p = 1; p <= pmax; ++p) {
      for (const auto& lambda : Partition::all(p)) {
        auto tabs = std_tableaux(lambda);
        KV params{{"n", S(nn)}, {"lambda", lambda.to_string()}};
        PBW g = quantum_immanant(QImmVariant::G, lambda, nn);
        PBW gp = quantum_immanant(QImmVariant::GPrime, lambda, nn);
        PBW gc = quantum_immanant(QImmVariant::GCirc, lambda, nn);
        PBW gcp = quantum_immanant(QImmVariant::GCircPrime, lambda, nn);
        // Independence of the chosen standard tableau.
        bool tab_ok = true;
        for (int t = 1; t < static_cast<int>(tabs.size()); ++t) {
          if (!(quantum_immanant(QImmVariant::G, lambda, nn, t) == g)) tab_ok = false;
          if (!(quantum_immanant(QImmVariant::GCirc, lambda, nn, t) == gc)) tab_ok = false;
        }
        out.push_back(Report::make("quantum-immanant-tableau-independence", params, tab_ok,
                                   static_cast<long>(tabs.size())));
        out.push_back(Report::make("quantum-immanant-two-expressions", params,
                                   g == gp && gc == gcp, g.term_count(), gp.term_count()));
      }
    }
    for (int p = 1; p <= std::min(pmax, 3); ++p) {
      KV params{{"n", S(nn)}, {"p", S(p)}};
      GAPBW g_p = quantum_preimmanant(QImmVariant::G, p, nn);
      GAPBW g_p2 = quantum_preimmanant(QImmVariant::GPrime, p, nn);
      GAPBW gc_p = quantum_preimmanant(QImmVariant::GCirc, p, nn);
      GAPBW gc_p2 = quantum_preimmanant(QImmVariant::GCircPrime, p, nn);
      out.push_back(Report::make("quantum-preimmanant-two-expressions", params,
                                 g_p == g_p2 && gc_p == gc_p2,
                                 static_cast<long>(g_p.term_count()),
                                 static_cast<long>(g_p2.term_count())));
      // chi_lambda(G_p) = G_lambda and the circ companion.
      bool chi_ok = true;
      for (const auto& lambda : Partition::all(p)) {
        if (!(chi_apply(lambda, g_p, p) == quantum_immanant(QImmVariant::G, lambda, nn))) chi_ok = false;
        if (!(chi_apply(lambda, gc_p, p) == quantum_immanant(QImmVariant::GCirc, lambda, nn)))
          chi_ok = false;
      }
      out.push_back(Report::make("character-of-quantum-preimmanant", params, chi_ok));

      // E_ij -> -E_ji carries G_p to (-1)^p G-circ_p.
      GAPBW mapped;
      for (const auto& [s, u] : g_p.terms())
        mapped.add_term(s, u.map_generators([](int i, int j) { return PBW::gen(j, i).scale(-1); }));
      bool auto_ok = mapped == gc_p.scale(p % 2 ? Rat(-1) : Rat(1));
      out.push_back(Report::make("quantum-preimmanant-sign-automorphism", params, auto_ok));

      // G-circ on the column shape is the Capelli element.
      PBW gcirc_col = quantum_immanant(QImmVariant::GCirc, Partition(std::vector<int>(p, 1)), nn);
      PBW cap = p <= nn ? capelli(p, nn) : PBW();
      out.push_back(Report::make("quantum-immanant-column-is-capelli", params, gcirc_col == cap,
                                 gcirc_col.term_count(), cap.term_count()));

      // Weakly-decreasing-index expression reproduces G-circ_lambda.
      bool decr_ok = true;
      for (const auto& lambda : Partition::all(p))
        if (!(quantum_immanant_decreasing(lambda, nn) ==
              quantum_immanant(QImmVariant::GCirc, lambda, nn)))
          decr_ok = false;
      out.push_back(Report::make("quantum-immanant-decreasing-expression", params, decr_ok));

      // Ad(g) fixes the central elements.
      RatMatrix g(nn, nn);
      for (int i = 0; i < nn; ++i) {
        g.at(i, i) = 1;
        if (i + 1 < nn) g.at(i, i + 1) = 2;
      }
      bool ad_ok = true;
      for (const auto& lambda : Partition::all(p)) {
        PBW gl = quantum_immanant(QImmVariant::GCirc, lambda, nn);
        if (!(adjoint_action(g, gl) == gl)) ad_ok = false;
      }
      out.push_back(Report::make("adjoint-fixes-quantum-immanants", params, ad_ok));
    }
  }
  return out;
}

std::vector<Report> verify_eigenvalues(int n, int wmax) {
  std::vector<Report> out;
  out.push_back(Report::make("capelli-eigenvalue-instance", {{"n", "2"}, {"mu", "1,1"}},
                             hc_eigenvalue(capelli(2, 2), Partition{1, 1}, 2) == Rat(2)));
  // Exactly one content-sum convention matches the Harish-Chandra eigenvalue
  // of G-circ_lambda uniformly over all |lambda|, |mu| <= wmax, n' <= n.
  bool a_all = true, b_all = true;
  for (int nn = 1; nn <= n; ++nn) {
    for (int pl = 1; pl <= wmax; ++pl)
      for (const auto& lambda : Partition::all(pl)) {
        PBW gc = quantum_immanant(QImmVariant::GCirc, lambda, nn);
        for (int pm = 0; pm <= wmax; ++pm)
          for (const auto& mu : Partition::all(pm)) {
            if (mu.rows() > nn) continue;
            Rat hc = hc_eigenvalue(gc, mu, nn);
            if (content_sum_eval(lambda, mu, nn, ContentConvention::A) != hc) a_all = false;
            if (content_sum_eval(lambda, mu, nn, ContentConvention::B) != hc) b_all = false;
          }
      }
  }
  bool exactly_one = a_all != b_all;
  out.push_back(Report::make("content-sum-convention-unique",
                             {{"n", S(n)}, {"wmax", S(wmax)}}, exactly_one));
  // Pinned: the shifted-Schur reading (convention B) is the matching one.
  out.push_back(Report::make("content-sum-convention-pinned-B", {{"n", S(n)}, {"wmax", S(wmax)}},
                             b_all && !a_all));
  return out;
}

}  // namespace extensor
