#include "extensor/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace extensor {

namespace {

// Fills cells row-major; cmp_row/cmp_col encode the (reverse) SSYT rules.
void fill_ssyt(const Partition& shape, int n, size_t cell, std::vector<int>& flat,
               bool reverse, std::vector<std::vector<int>>& out) {
  int total = shape.weight();
  if (static_cast<int>(cell) == total) {
    out.push_back(flat);
    return;
  }
  // Locate (row, col) of this flat cell plus the indices of the left/up names.
  int row = 0, c = static_cast<int>(cell);
  while (c >= shape[row]) {
    c -= shape[row];
    ++row;
  }
  int left = (c > 0) ? flat[cell - 1] : 0;
  int up = 0;
  if (row > 0) {
    int upflat = 0;
    for (int r = 0; r + 1 < row; ++r) upflat += shape[r];
    up = flat[upflat + c];
  }
  for (int v = 1; v <= n; ++v) {
    if (!reverse) {
      if (c > 0 && v < left) continue;
      if (row > 0 && v <= up) continue;
    } else {
      if (c > 0 && v > left) continue;
      if (row > 0 && v >= up) continue;
    }
    flat[cell] = v;
    fill_ssyt(shape, n, cell + 1, flat, reverse, out);
  }
  flat[cell] = 0;
}

}  // namespace

std::vector<std::vector<int>> semistandard_tableaux(const Partition& lambda, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> flat(lambda.weight(), 0);
  fill_ssyt(lambda, n, 0, flat, false, out);
  return out;
}

std::vector<std::vector<int>> reverse_semistandard_tableaux(const Partition& lambda, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> flat(lambda.weight(), 0);
  fill_ssyt(lambda, n, 0, flat, true, out);
  return out;
}

Rat sym_eval(SymKind kind, const Partition& lambda, const std::vector<Rat>& values) {
  int n = static_cast<int>(values.size());
  switch (kind) {
    case SymKind::Schur: {
      Rat acc = 0;
      for (const auto& T : semistandard_tableaux(lambda, n)) {
        Rat prod = 1;
        for (int v : T) prod *= values[v - 1];
        acc += prod;
      }
      return acc;
    }
    case SymKind::Monomial: {
      std::vector<int> expo(lambda.parts());
      expo.resize(n, 0);
      if (lambda.rows() > n) return 0;
      std::sort(expo.begin(), expo.end());
      Rat acc = 0;
      do {
        Rat prod = 1;
        for (int i = 0; i < n; ++i)
          for (int e = 0; e < expo[i]; ++e) prod *= values[i];
        acc += prod;
      } while (std::next_permutation(expo.begin(), expo.end()));
      return acc;
    }
    case SymKind::PowerSum: {
      Rat acc = 1;
      for (int part : lambda.parts()) {
        Rat pk = 0;
        for (const auto& v : values) {
          Rat t = 1;
          for (int e = 0; e < part; ++e) t *= v;
          pk += t;
        }
        acc *= pk;
      }
      return acc;
    }
  }
  throw std::logic_error("sym_eval: unknown kind");
}

long kostka(const Partition& lambda, const Partition& mu) {
  int n = mu.rows();
  long count = 0;
  for (const auto& T : semistandard_tableaux(lambda, n)) {
    std::vector<int> content(n, 0);
    for (int v : T) ++content[v - 1];
    bool ok = true;
    for (int i = 0; i < n; ++i)
      if (content[i] != mu.part(i)) ok = false;
    if (ok) ++count;
  }
  return count;
}

}  // namespace extensor
