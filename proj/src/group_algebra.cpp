#include "extensor/group_algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace extensor {

namespace {

std::vector<Perm> compute_word_stabilizer(const std::vector<int>& word) {
  // Positions grouped by letter value; the stabilizer is the direct product
  // of the symmetric groups on each block.
  std::map<int, std::vector<int>> blocks;
  for (size_t k = 0; k < word.size(); ++k) blocks[word[k]].push_back(static_cast<int>(k) + 1);
  std::vector<Perm> stab = {Perm()};
  for (const auto& [letter, pos] : blocks) {
    (void)letter;
    if (pos.size() < 2) continue;
    std::vector<int> arrange(pos.size());
    std::iota(arrange.begin(), arrange.end(), 0);
    std::vector<Perm> next;
    do {
      int m = static_cast<int>(word.size());
      std::vector<int> img(m);
      std::iota(img.begin(), img.end(), 1);
      for (size_t a = 0; a < pos.size(); ++a) img[pos[a] - 1] = pos[arrange[a]];
      Perm blockperm((img));
      for (const auto& s : stab) next.push_back(s * blockperm);
    } while (std::next_permutation(arrange.begin(), arrange.end()));
    stab = std::move(next);
  }
  return stab;
}

std::mutex g_stab_mutex;
std::map<std::vector<int>, std::vector<Perm>> g_stab_cache;

}  // namespace

const std::vector<Perm>& word_stabilizer(const std::vector<int>& word) {
  std::lock_guard<std::mutex> lock(g_stab_mutex);
  auto it = g_stab_cache.find(word);
  if (it == g_stab_cache.end())
    it = g_stab_cache.emplace(word, compute_word_stabilizer(word)).first;
  return it->second;
}

GAElem stabilizer_idempotent(const std::vector<int>& word) {
  if (word.empty()) throw std::invalid_argument("stabilizer_idempotent: empty word");
  auto stab = word_stabilizer(word);
  GAElem r;
  Rat w = Rat(1) / Rat(static_cast<long>(stab.size()));
  for (const auto& s : stab) r.add_term(s, w);
  return r;
}

GAElem jucys_murphy(JMKind kind, int k, int p) {
  if (k < 1 || k > p) throw std::out_of_range("jucys_murphy: k out of range");
  GAElem r;
  for (int i = 1; i <= k - 1; ++i) {
    switch (kind) {
      case JMKind::X:
        r.add_term(Perm::transposition(i, k), 1);
        break;
      case JMKind::XCirc:
        r.add_term(Perm::transposition(p - i + 1, p - k + 1), 1);
        break;
      case JMKind::Y:
        r.add_term(Perm::transposition(1, i + 1), 1);
        break;
    }
  }
  return r;
}

}  // namespace extensor
