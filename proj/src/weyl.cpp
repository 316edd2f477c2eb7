#include "extensor/weyl.hpp"

#include <sstream>

namespace extensor {

namespace {

Rat binom_rat(int a, int b) {
  if (b < 0 || b > a) return 0;
  Rat r = 1;
  for (int k = 1; k <= b; ++k) r *= Rat(a - k + 1) / Rat(k);
  return r;
}

// Enumerates componentwise contractions E <= min(B, C) with the weight
// prod_v binom(B_v, E_v) binom(C_v, E_v) E_v!.
void contractions(const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& common,
                  size_t idx, WeylMono::Expo cur, Rat w,
                  std::vector<std::pair<WeylMono::Expo, Rat>>& out) {
  if (idx == common.size()) {
    out.emplace_back(std::move(cur), w);
    return;
  }
  auto [var, bc] = common[idx];
  auto [bv, cv] = bc;
  int top = std::min(bv, cv);
  for (int e = 0; e <= top; ++e) {
    Rat we = w * binom_rat(bv, e) * binom_rat(cv, e) * rat_factorial(e);
    WeylMono::Expo next = cur;
    if (e > 0) next[var] = e;
    contractions(common, idx + 1, std::move(next), we, out);
  }
}

void add_expo(WeylMono::Expo& a, const WeylMono::Expo& b, int sign = 1) {
  for (const auto& [v, e] : b) {
    auto it = a.find(v);
    int ne = (it == a.end() ? 0 : it->second) + sign * e;
    if (ne == 0) {
      if (it != a.end()) a.erase(it);
    } else if (it == a.end()) {
      a.emplace(v, ne);
    } else {
      it->second = ne;
    }
  }
}

}  // namespace

WeylElem WeylElem::constant(const Rat& c) {
  WeylElem w;
  w.add_term(WeylMono{}, c);
  return w;
}

WeylElem WeylElem::x(int i, int k) {
  WeylMono m;
  m.xs[{i, k}] = 1;
  WeylElem w;
  w.add_term(std::move(m), 1);
  return w;
}

WeylElem WeylElem::d(int i, int k) {
  WeylMono m;
  m.ds[{i, k}] = 1;
  WeylElem w;
  w.add_term(std::move(m), 1);
  return w;
}

void WeylElem::add_term(WeylMono m, const Rat& c) {
  if (rat_is_zero(c)) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (rat_is_zero(it->second)) t_.erase(it);
  }
}

WeylElem WeylElem::operator+(const WeylElem& o) const {
  WeylElem r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

WeylElem WeylElem::operator-(const WeylElem& o) const {
  WeylElem r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

WeylElem WeylElem::scale(const Rat& c) const {
  WeylElem r;
  if (rat_is_zero(c)) return r;
  for (const auto& [m, v] : t_) r.t_.emplace(m, v * c);
  return r;
}

WeylElem WeylElem::operator*(const WeylElem& o) const {
  // (x^A d^B)(x^C d^D): d^B x^C = sum_E (B ch E)(C ch E) E! x^{C-E} d^{B-E}.
  WeylElem r;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) {
      std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> common;
      for (const auto& [v, bv] : m1.ds) {
        auto it = m2.xs.find(v);
        if (it != m2.xs.end()) common.push_back({v, {bv, it->second}});
      }
      std::vector<std::pair<WeylMono::Expo, Rat>> cons;
      contractions(common, 0, {}, c1 * c2, cons);
      for (auto& [E, w] : cons) {
        WeylMono m;
        m.xs = m1.xs;
        add_expo(m.xs, m2.xs);
        add_expo(m.xs, E, -1);
        m.ds = m2.ds;
        add_expo(m.ds, m1.ds);
        add_expo(m.ds, E, -1);
        r.add_term(std::move(m), w);
      }
    }
  return r;
}

std::string WeylElem::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (const auto& [v, e] : m.xs) {
      os << " x" << v.first << v.second;
      if (e > 1) os << '^' << e;
    }
    for (const auto& [v, e] : m.ds) {
      os << " d" << v.first << v.second;
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

WeylElem pi_poly(const PBW& u, int nprime) {
  WeylElem out;
  for (const auto& [mono, c] : u.terms()) {
    WeylElem prod = WeylElem::constant(c);
    for (const auto& g : mono) {
      WeylElem pe;
      for (int k = 1; k <= nprime; ++k) pe = pe + WeylElem::x(g.i, k) * WeylElem::d(g.j, k);
      prod = prod * pe;
    }
    out = out + prod;
  }
  return out;
}

RingMatrix<WeylElem> x_matrix(int n, int nprime) {
  return RingMatrix<WeylElem>::from(n, nprime, [](int i, int j) { return WeylElem::x(i, j); });
}

RingMatrix<WeylElem> d_matrix(int n, int nprime) {
  return RingMatrix<WeylElem>::from(n, nprime, [](int i, int j) { return WeylElem::d(i, j); });
}

}  // namespace extensor
