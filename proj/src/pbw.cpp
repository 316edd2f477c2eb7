#include "extensor/pbw.hpp"

#include <functional>
#include <sstream>

namespace extensor {

PBW PBW::constant(const Rat& c) {
  PBW x;
  x.add_term({}, c);
  return x;
}

PBW PBW::gen(int i, int j) {
  PBW x;
  x.add_term({PBWGen{i, j}}, 1);
  return x;
}

PBW PBW::gen_shifted(int i, int j, const Rat& u) {
  PBW x = gen(i, j);
  if (i == j) x.add_term({}, u);
  return x;
}

Rat PBW::coeff(const PBWMono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rat(0) : it->second;
}

void PBW::add_term(PBWMono m, const Rat& c) {
  if (rat_is_zero(c)) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (rat_is_zero(it->second)) t_.erase(it);
  }
}

PBW PBW::operator+(const PBW& o) const {
  PBW r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

PBW PBW::operator-(const PBW& o) const {
  PBW r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

PBW PBW::scale(const Rat& c) const {
  PBW r;
  if (rat_is_zero(c)) return r;
  for (const auto& [m, v] : t_) r.t_.emplace(m, v * c);
  return r;
}

PBW PBW::normal_order(const std::vector<PBWGen>& word, const Rat& coeff) {
  PBW out;
  std::vector<std::pair<PBWMono, Rat>> work;
  work.emplace_back(word, coeff);
  while (!work.empty()) {
    auto [seq, c] = std::move(work.back());
    work.pop_back();
    bool terminal = true;
    for (size_t k = 0; k + 1 < seq.size(); ++k) {
      const PBWGen a = seq[k], b = seq[k + 1];
      if (!(b < a)) continue;
      // E_ij E_kl = E_kl E_ij + delta_jk E_il - delta_li E_kj.
      terminal = false;
      if (a.j == b.i) {
        PBWMono m;
        m.reserve(seq.size() - 1);
        m.insert(m.end(), seq.begin(), seq.begin() + k);
        m.push_back(PBWGen{a.i, b.j});
        m.insert(m.end(), seq.begin() + k + 2, seq.end());
        work.emplace_back(std::move(m), c);
      }
      if (b.j == a.i) {
        PBWMono m;
        m.reserve(seq.size() - 1);
        m.insert(m.end(), seq.begin(), seq.begin() + k);
        m.push_back(PBWGen{b.i, a.j});
        m.insert(m.end(), seq.begin() + k + 2, seq.end());
        work.emplace_back(std::move(m), -c);
      }
      std::swap(seq[k], seq[k + 1]);
      work.emplace_back(std::move(seq), c);
      break;
    }
    if (terminal) out.add_term(std::move(seq), c);
  }
  return out;
}

PBW PBW::operator*(const PBW& o) const {
  PBW r;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) {
      PBWMono w = m1;
      w.insert(w.end(), m2.begin(), m2.end());
      r = r + normal_order(w, c1 * c2);
    }
  return r;
}

PBW PBW::map_generators(const std::function<PBW(int, int)>& image) const {
  PBW r;
  for (const auto& [m, c] : t_) {
    PBW prod = constant(c);
    for (const auto& g : m) prod = prod * image(g.i, g.j);
    r = r + prod;
  }
  return r;
}

std::vector<int> PBW::monomial_weight(const PBWMono& m, int n) {
  std::vector<int> w(n, 0);
  for (const auto& g : m) {
    ++w[g.i - 1];
    --w[g.j - 1];
  }
  return w;
}

std::string PBW::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit_coeff = (a == 1) && !m.empty();
    if (!unit_coeff) os << rat_str(a);
    for (size_t k = 0; k < m.size(); ++k) {
      if (k > 0 || !unit_coeff) os << ' ';
      os << 'E' << m[k].i << m[k].j;
    }
  }
  return os.str();
}

}  // namespace extensor
