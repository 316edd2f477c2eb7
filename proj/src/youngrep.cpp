#include "extensor/youngrep.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace extensor {

namespace {

std::mutex g_rep_mutex;
std::map<Partition, std::vector<Tableau>> g_tabs;
std::map<std::pair<Partition, int>, RatMatrix> g_gens;

const std::vector<Tableau>& tableaux_of(const Partition& lambda) {
  auto it = g_tabs.find(lambda);
  if (it == g_tabs.end()) it = g_tabs.emplace(lambda, std_tableaux(lambda)).first;
  return it->second;
}

int tab_index_of(const std::vector<Tableau>& tabs, const Tableau& t) {
  auto it = std::lower_bound(tabs.begin(), tabs.end(), t);
  if (it == tabs.end() || !(*it == t))
    throw std::invalid_argument("tableau not standard of this shape");
  return static_cast<int>(it - tabs.begin());
}

const RatMatrix& rho_gen_impl(const Partition& lambda, int i) {
  auto key = std::make_pair(lambda, i);
  auto it = g_gens.find(key);
  if (it != g_gens.end()) return it->second;

  const auto& tabs = tableaux_of(lambda);
  int dim = static_cast<int>(tabs.size());
  RatMatrix m(dim, dim);
  for (int t = 0; t < dim; ++t) {
    const Tableau& T = tabs[t];
    Rat d = Rat(T.content(i + 1) - T.content(i));
    auto swapped = T.apply_adjacent(i);
    m.at(t, t) = Rat(1) / d;
    if (swapped) {
      int u = tab_index_of(tabs, *swapped);
      // Off-diagonal weight 1 on the d > 0 side, 1 - 1/d^2 on the other.
      m.at(u, t) = (d > 0) ? Rat(1) : (Rat(1) - Rat(1) / (d * d));
    }
  }
  return g_gens.emplace(std::move(key), std::move(m)).first->second;
}

RatMatrix rho_impl(const Partition& lambda, const Perm& sigma) {
  int p = lambda.weight();
  int dim = static_cast<int>(tableaux_of(lambda).size());
  RatMatrix m = RatMatrix::identity(dim);
  // Bubble decomposition: recording swaps that sort the one-line notation
  // gives sigma = s_{i_k} ... s_{i_1} for the recorded i_1, ..., i_k.
  std::vector<int> img(p);
  for (int k = 1; k <= p; ++k) img[k - 1] = sigma(k);
  std::vector<int> word;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i + 1 < p; ++i) {
      if (img[i] > img[i + 1]) {
        std::swap(img[i], img[i + 1]);
        word.push_back(i + 1);
        moved = true;
      }
    }
  }
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = m * rho_gen_impl(lambda, *it);
  return m;
}

}  // namespace

RatMatrix rho_gen(const Partition& lambda, int i) {
  int p = lambda.weight();
  if (i < 1 || i >= p) throw std::out_of_range("rho_gen: generator index out of range");
  std::lock_guard<std::mutex> lock(g_rep_mutex);
  return rho_gen_impl(lambda, i);
}

RatMatrix rho(const Partition& lambda, const Perm& sigma) {
  if (sigma.max_moved() > lambda.weight())
    throw std::invalid_argument("rho: sigma not supported in S_p");
  std::lock_guard<std::mutex> lock(g_rep_mutex);
  return rho_impl(lambda, sigma);
}

RatMatrix rho_elem(const Partition& lambda, const GAElem& t) {
  if (t.degree() > lambda.weight())
    throw std::invalid_argument("rho_elem: support exceeds S_p");
  std::lock_guard<std::mutex> lock(g_rep_mutex);
  int dim = static_cast<int>(tableaux_of(lambda).size());
  RatMatrix acc(dim, dim);
  for (const auto& [s, c] : t.terms()) acc = acc + rho_impl(lambda, s).scale(c);
  return acc;
}

Rat diag_entry(const Partition& lambda, int tab_index, const GAElem& t) {
  RatMatrix m = rho_elem(lambda, t);
  if (tab_index < 0 || tab_index >= m.rows())
    throw std::out_of_range("diag_entry: tableau index out of range");
  return m.at(tab_index, tab_index);
}

Rat diag_entry(const Partition& lambda, const Tableau& T, const GAElem& t) {
  if (!(T.shape() == lambda)) throw std::invalid_argument("diag_entry: shape mismatch");
  std::vector<Tableau> tabs;
  {
    std::lock_guard<std::mutex> lock(g_rep_mutex);
    tabs = tableaux_of(lambda);
  }
  return diag_entry(lambda, tab_index_of(tabs, T), t);
}

std::map<std::pair<int, int>, Rat> jm_spectrum(const Partition& lambda) {
  int p = lambda.weight();
  std::map<std::pair<int, int>, Rat> spec;
  for (int i = 1; i <= p; ++i) {
    RatMatrix m = rho_elem(lambda, jucys_murphy(JMKind::X, i, p));
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (r != c && !rat_is_zero(m.at(r, c)))
          throw std::logic_error("jm_spectrum: rho(x_i) is not diagonal");
    for (int t = 0; t < m.rows(); ++t) spec[{t, i}] = m.at(t, t);
  }
  return spec;
}

}  // namespace extensor
