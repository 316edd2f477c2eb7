#include "extensor/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace extensor {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  int w = 0;
  for (int x : parts_) w += x;
  return w;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; parts_.empty() ? false : j <= parts_[0]; ++j) {
    int cnt = 0;
    for (int x : parts_)
      if (x >= j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

Rat Partition::z() const {
  Rat r = 1;
  int run = 0, prev = -1;
  for (int x : parts_) {
    if (x == prev) {
      ++run;
    } else {
      prev = x;
      run = 1;
    }
    r *= x * run;  // accumulates k^{m_k} * m_k!
  }
  return r;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

static void gen_partitions(int rest, int maxpart, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (rest == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int k = std::min(rest, maxpart); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(rest - k, k, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> Partition::all(int p) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(p, p, cur, out);
  return out;
}

}  // namespace extensor
