#include "extensor/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace extensor {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
      throw std::invalid_argument("Perm: images are not a bijection of {1..m}");
    seen[v - 1] = 1;
  }
  trim();
}

void Perm::trim() {
  while (!img_.empty() && img_.back() == static_cast<int>(img_.size())) img_.pop_back();
}

Perm Perm::transposition(int a, int b) {
  if (a < 1 || b < 1 || a == b) throw std::invalid_argument("Perm::transposition: bad points");
  std::vector<int> v(std::max(a, b));
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[a - 1], v[b - 1]);
  return Perm(std::move(v));
}

Perm Perm::cycle(const std::vector<int>& pts) {
  if (pts.empty()) return Perm();
  int m = *std::max_element(pts.begin(), pts.end());
  if (*std::min_element(pts.begin(), pts.end()) < 1)
    throw std::invalid_argument("Perm::cycle: points must be positive");
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  for (size_t k = 0; k < pts.size(); ++k) {
    int from = pts[k], to = pts[(k + 1) % pts.size()];
    if (v[from - 1] != from) throw std::invalid_argument("Perm::cycle: repeated point");
    v[from - 1] = to;
  }
  // Re-validate bijectivity through the checked constructor.
  return Perm(std::move(v));
}

Perm Perm::reversal(int p) {
  std::vector<int> v(p);
  for (int k = 1; k <= p; ++k) v[k - 1] = p + 1 - k;
  return Perm(std::move(v));
}

Perm Perm::parse(const std::string& s) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  while (i < s.size()) {
    if (s[i] != '(') throw std::invalid_argument("Perm::parse: expected '(' in '" + s + "'");
    ++i;
    std::vector<int> pts;
    while (true) {
      skip_ws();
      if (i < s.size() && s[i] == ')') { ++i; break; }
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw std::invalid_argument("Perm::parse: expected digit in '" + s + "'");
      pts.push_back(std::stoi(s.substr(i, j - i)));
      i = j;
    }
    if (!pts.empty()) cycles.push_back(std::move(pts));
    skip_ws();
  }
  Perm r;
  for (const auto& c : cycles) r = r * Perm::cycle(c);
  return r;
}

Perm Perm::operator*(const Perm& o) const {
  int m = std::max(max_moved(), o.max_moved());
  std::vector<int> v(m);
  for (int k = 1; k <= m; ++k) v[k - 1] = (*this)(o(k));
  Perm r;
  r.img_ = std::move(v);
  r.trim();
  return r;
}

Perm Perm::inverse() const {
  std::vector<int> v(img_.size());
  for (int k = 1; k <= static_cast<int>(img_.size()); ++k) v[img_[k - 1] - 1] = k;
  Perm r;
  r.img_ = std::move(v);
  return r;
}

int Perm::sign() const {
  int inv = 0;
  for (size_t a = 0; a < img_.size(); ++a)
    for (size_t b = a + 1; b < img_.size(); ++b)
      if (img_[a] > img_[b]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

Perm Perm::alpha(int k) const {
  if (k < 0) throw std::invalid_argument("Perm::alpha: negative shift");
  if (img_.empty() || k == 0) {
    if (k == 0) return *this;
  }
  std::vector<int> v(img_.size() + k);
  for (int j = 1; j <= k; ++j) v[j - 1] = j;
  for (size_t j = 0; j < img_.size(); ++j) v[k + j] = img_[j] + k;
  Perm r;
  r.img_ = std::move(v);
  r.trim();
  return r;
}

std::vector<int> Perm::cycle_lengths(int p) const {
  if (max_moved() > p) throw std::invalid_argument("Perm::cycle_lengths: moves a point > p");
  std::vector<char> seen(p, 0);
  std::vector<int> lens;
  for (int k = 1; k <= p; ++k) {
    if (seen[k - 1]) continue;
    int len = 0, j = k;
    do {
      seen[j - 1] = 1;
      ++len;
      j = (*this)(j);
    } while (j != k);
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::string Perm::cycles_str() const {
  if (is_identity()) return "()";
  std::ostringstream os;
  int m = max_moved();
  std::vector<char> seen(m, 0);
  for (int k = 1; k <= m; ++k) {
    if (seen[k - 1] || (*this)(k) == k) continue;
    os << '(' << k;
    seen[k - 1] = 1;
    for (int j = (*this)(k); j != k; j = (*this)(j)) {
      seen[j - 1] = 1;
      os << ' ' << j;
    }
    os << ')';
  }
  return os.str();
}

std::vector<Perm> symmetric_group(int p) {
  std::vector<int> v(p);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace extensor
