#include "extensor/envelope.hpp"

#include <stdexcept>

#include "extensor/characters.hpp"
#include "extensor/symfunc.hpp"
#include "extensor/youngrep.hpp"

namespace extensor {

RingMatrix<PBW> e_matrix(int n) {
  return RingMatrix<PBW>::from(n, n, [](int i, int j) { return PBW::gen(i, j); });
}

PBW capelli(int r, int n) {
  if (r < 1 || r > n) throw std::out_of_range("capelli: r out of range");
  std::vector<Rat> shifts(r);
  for (int k = 0; k < r; ++k) shifts[k] = r - 1 - k;
  RingMatrix<PBW> E = e_matrix(n);
  PBW out;
  for (const auto& I : index_words_increasing(n, r, true))
    out = out + column_det_shifted(E, I, I, shifts);
  return out;
}

namespace {

// E_{ab}(x_k) as an element of CS_p (x) U(gl_n).
GAPBW e_shifted_jm(int a, int b, int k, int p, bool negate) {
  GAPBW f = GAPBW::of(Perm(), PBW::gen(a, b));
  if (a == b) {
    GAElem x = jucys_murphy(JMKind::X, k, p);
    for (const auto& [s, c] : x.terms()) f.add_term(s, PBW::constant(negate ? -c : c));
  }
  return f;
}

}  // namespace

PBW quantum_immanant(QImmVariant v, const Partition& lambda, int n, int tab_index) {
  int p = lambda.weight();
  auto tabs = std_tableaux(lambda);
  if (tab_index < 0 || tab_index >= static_cast<int>(tabs.size()))
    throw std::out_of_range("quantum_immanant: tableau index");
  const Tableau& T = tabs[tab_index];
  std::vector<Rat> c(p + 1);
  for (int k = 1; k <= p; ++k) c[k] = Rat(T.content(k));

  bool use_inverse = (v == QImmVariant::GPrime || v == QImmVariant::GCirc);
  auto sp = symmetric_group(p);
  std::vector<Rat> entries;
  entries.reserve(sp.size());
  for (const auto& s : sp)
    entries.push_back(rho(lambda, use_inverse ? s.inverse() : s).at(tab_index, tab_index));

  PBW out;
  for (const auto& J : index_words(n, p)) {
    for (size_t si = 0; si < sp.size(); ++si) {
      if (rat_is_zero(entries[si])) continue;
      const Perm& s = sp[si];
      PBW prod = PBW::one();
      switch (v) {
        case QImmVariant::G:
          for (int k = 1; k <= p; ++k) prod = prod * PBW::gen_shifted(J[s(k) - 1], J[k - 1], c[k]);
          break;
        case QImmVariant::GPrime:
          for (int k = p; k >= 1; --k) prod = prod * PBW::gen_shifted(J[k - 1], J[s(k) - 1], c[k]);
          break;
        case QImmVariant::GCirc:
          for (int k = p; k >= 1; --k) prod = prod * PBW::gen_shifted(J[s(k) - 1], J[k - 1], -c[k]);
          break;
        case QImmVariant::GCircPrime:
          for (int k = 1; k <= p; ++k) prod = prod * PBW::gen_shifted(J[k - 1], J[s(k) - 1], -c[k]);
          break;
      }
      out = out + prod.scale(entries[si]);
    }
  }
  return out.scale(character_dim(lambda) / rat_factorial(p));
}

GAPBW quantum_preimmanant(QImmVariant v, int p, int n) {
  if (p < 1) throw std::invalid_argument("quantum_preimmanant: p must be positive");
  GAPBW out;
  for (const auto& J : index_words(n, p)) {
    for (const auto& s : symmetric_group(p)) {
      GAPBW prod = GAPBW::of(Perm(), PBW::one());
      switch (v) {
        case QImmVariant::G:
          for (int k = 1; k <= p; ++k) prod = prod * e_shifted_jm(J[s(k) - 1], J[k - 1], k, p, false);
          prod = GAPBW::of(s) * prod;
          break;
        case QImmVariant::GPrime:
          for (int k = p; k >= 1; --k) prod = prod * e_shifted_jm(J[k - 1], J[s(k) - 1], k, p, false);
          prod = prod * GAPBW::of(s.inverse());
          break;
        case QImmVariant::GCirc:
          for (int k = p; k >= 1; --k) prod = prod * e_shifted_jm(J[s(k) - 1], J[k - 1], k, p, true);
          prod = prod * GAPBW::of(s.inverse());
          break;
        case QImmVariant::GCircPrime:
          for (int k = 1; k <= p; ++k) prod = prod * e_shifted_jm(J[k - 1], J[s(k) - 1], k, p, true);
          prod = GAPBW::of(s) * prod;
          break;
      }
      out = out + prod;
    }
  }
  return out.scale(Rat(1) / rat_factorial(p));
}

PBW quantum_immanant_decreasing(const Partition& lambda, int n) {
  int p = lambda.weight();
  GAPBW acc;
  for (auto I : index_words_increasing(n, p, false)) {
    std::reverse(I.begin(), I.end());  // weakly decreasing words
    Rat w = Rat(1) / index_multiplicity(I);
    for (const auto& s : symmetric_group(p)) {
      GAPBW prod = GAPBW::of(s);
      for (int k = 1; k <= p; ++k) prod = prod * e_shifted_jm(I[k - 1], I[s(k) - 1], k, p, true);
      acc = acc + prod.scale(w);
    }
  }
  return chi_apply(lambda, acc, p);
}

bool is_central_u(const PBW& u, int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!u.commutator(PBW::gen(i, j)).is_zero()) return false;
  return true;
}

bool is_central_u(const GAPBW& u, int n, int p) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      GAPBW g = GAPBW::of(Perm(), PBW::gen(i, j));
      if (!(u * g == g * u)) return false;
    }
  for (int i = 1; i < p; ++i) {
    GAPBW s = GAPBW::of(Perm::adjacent(i));
    if (!(u * s == s * u)) return false;
  }
  return true;
}

Rat hc_eigenvalue(const PBW& u, const Partition& mu, int n) {
  if (mu.rows() > n) throw std::invalid_argument("hc_eigenvalue: mu has more than n parts");
  if (!is_central_u(u, n)) throw std::invalid_argument("hc_eigenvalue: element is not central");
  Rat out = 0;
  for (const auto& [m, c] : u.terms()) {
    bool raising = false;
    for (const auto& g : m)
      if (g.i < g.j) raising = true;
    if (raising) continue;
    // Zero weight and no raising factor force a pure Cartan monomial.
    Rat prod = c;
    for (const auto& g : m) {
      if (g.i != g.j) throw std::logic_error("hc_eigenvalue: non-Cartan survivor in a central element");
      prod *= mu.part(g.i - 1);
    }
    out += prod;
  }
  return out;
}

Rat content_sum_eval(const Partition& lambda, const Partition& mu, int n, ContentConvention conv) {
  Rat acc = 0;
  for (const auto& T : reverse_semistandard_tableaux(lambda, n)) {
    Rat prod = 1;
    size_t cell = 0;
    for (int r = 0; r < lambda.rows(); ++r)
      for (int col = 0; col < lambda[r]; ++col, ++cell) {
        int entry = T[cell];
        Rat value = (conv == ContentConvention::A) ? Rat(lambda.part(entry - 1)) : Rat(mu.part(entry - 1));
        prod *= value - Rat(col - r);
      }
    acc += prod;
  }
  return acc;
}

PBW adjoint_action(const RatMatrix& g, const PBW& u) {
  int n = g.rows();
  RatMatrix ginv = g.inverse();
  // Ad(g) E_ij = sum_{k,l} g_{ki} (g^{-1})_{jl} E_{kl}.
  return u.map_generators([&](int i, int j) {
    PBW out;
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) {
        Rat c = g.at(k - 1, i - 1) * ginv.at(j - 1, l - 1);
        if (!rat_is_zero(c)) out = out + PBW::gen(k, l).scale(c);
      }
    return out;
  });
}

}  // namespace extensor
