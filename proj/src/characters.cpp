#include "extensor/characters.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace extensor {

namespace {

// Beta-set Murnaghan-Nakayama: removing a border strip of length k from
// lambda is subtracting k from one first-column hook length, keeping the set
// distinct; the height change is the number of betas jumped over.
Rat mn_recurse(std::vector<int> betas, std::vector<int> cycles,
               std::map<std::pair<std::vector<int>, std::vector<int>>, Rat>& memo) {
  if (cycles.empty()) return 1;
  auto key = std::make_pair(betas, cycles);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int k = cycles.back();  // remove the smallest cycle first (any fixed order works)
  std::vector<int> rest(cycles.begin(), cycles.end() - 1);
  Rat total = 0;
  for (size_t i = 0; i < betas.size(); ++i) {
    int target = betas[i] - k;
    if (target < 0) continue;
    bool clash = false;
    int jumped = 0;
    for (size_t j = 0; j < betas.size(); ++j) {
      if (j == i) continue;
      if (betas[j] == target) clash = true;
      if (betas[j] > target && betas[j] < betas[i]) ++jumped;
    }
    if (clash) continue;
    std::vector<int> nb = betas;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    Rat sub = mn_recurse(std::move(nb), rest, memo);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

std::vector<int> beta_set(const Partition& lambda) {
  int L = lambda.rows();
  std::vector<int> betas(L);
  for (int i = 0; i < L; ++i) betas[i] = lambda[i] + (L - 1 - i);
  return betas;
}

std::mutex g_char_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> g_char_memo;

}  // namespace

Rat character(const Partition& lambda, const Partition& type) {
  if (lambda.weight() != type.weight())
    throw std::invalid_argument("character: |lambda| != |cycle type|");
  if (lambda.weight() == 0) return 1;
  std::lock_guard<std::mutex> lock(g_char_mutex);
  return mn_recurse(beta_set(lambda), type.parts(), g_char_memo);
}

Rat character(const Partition& lambda, const Perm& sigma, int p) {
  if (sigma.max_moved() > p) throw std::invalid_argument("character: sigma not in S_p");
  return character(lambda, Partition(sigma.cycle_lengths(p)));
}

Rat character_dim(const Partition& lambda) {
  int p = lambda.weight();
  std::vector<int> ones(p, 1);
  return p == 0 ? Rat(1) : character(lambda, Partition(ones));
}

GAElem central_basis(CentralKind kind, const Partition& mu, int p) {
  if (mu.weight() != p) throw std::invalid_argument("central_basis: |mu| != p");
  GAElem r;
  switch (kind) {
    case CentralKind::STilde: {
      Rat w = Rat(1) / rat_factorial(p);
      for (const auto& s : symmetric_group(p)) r.add_term(s, w * character(mu, s, p));
      break;
    }
    case CentralKind::HTilde: {
      // Young subgroup S_mu on the consecutive blocks of {1..p}.
      std::vector<Perm> young = {Perm()};
      int offset = 0;
      for (int part : mu.parts()) {
        std::vector<Perm> next;
        for (const auto& blk : symmetric_group(part)) {
          Perm shifted = blk.alpha(offset);
          for (const auto& y : young) next.push_back(y * shifted);
        }
        young = std::move(next);
        offset += part;
      }
      Rat w = Rat(1) / (rat_factorial(p) * Rat(static_cast<long>(young.size())));
      for (const auto& s : symmetric_group(p)) {
        Perm si = s.inverse();
        for (const auto& tau : young) r.add_term(si * tau * s, w);
      }
      break;
    }
    case CentralKind::PTilde: {
      Rat w = mu.z() / rat_factorial(p);
      for (const auto& s : symmetric_group(p))
        if (Partition(s.cycle_lengths(p)) == mu) r.add_term(s, w);
      break;
    }
  }
  return r;
}

std::map<Partition, Rat> central_decompose(const GAElem& t, int p) {
  if (!is_central(t, p)) throw std::invalid_argument("central_decompose: element is not central");
  std::map<Partition, Rat> out;
  for (const auto& lambda : Partition::all(p)) {
    Rat c = chi_apply(lambda, t, p);
    if (!rat_is_zero(c)) out.emplace(lambda, c);
  }
  return out;
}

}  // namespace extensor
