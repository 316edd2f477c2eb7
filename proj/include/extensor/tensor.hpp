#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "extensor/group_algebra.hpp"
#include "extensor/partition.hpp"
#include "extensor/perm.hpp"
#include "extensor/ring.hpp"

namespace extensor {

using Word = std::vector<int>;

// Thrown when a normal ordering exceeds the configured term budget.
struct TermBudgetExceeded : std::runtime_error {
  TermBudgetExceeded() : std::runtime_error("normal ordering exceeded the term budget") {}
};

// 0 disables the guard. Thread-local so parallel suite runs stay independent.
void set_term_budget(std::size_t max_terms);
std::size_t term_budget();

namespace detail {
inline void charge_budget(std::size_t count) {
  if (std::size_t b = term_budget(); b && count > b) throw TermBudgetExceeded();
}
}  // namespace detail

// Coupling table <f_b, e_a> = c_{ab} of the two-sided algebra T'(V,W):
// zero gives the graded algebra T(V,W); the Kronecker table gives L(V).
struct CouplingSpec {
  enum class Kind { Zero, Delta, General };
  Kind kind = Kind::Zero;
  int m = 0, n = 0;            // dims of V and W (for General)
  std::vector<Rat> table;      // row-major m x n, General only

  static CouplingSpec zero() { return {}; }
  static CouplingSpec delta() { return {Kind::Delta, 0, 0, {}}; }
  static CouplingSpec general(int m, int n, std::vector<Rat> t) {
    return {Kind::General, m, n, std::move(t)};
  }
  Rat value(int a, int b) const {  // <f_b, e_a>, 1-based
    switch (kind) {
      case Kind::Zero: return Rat(0);
      case Kind::Delta: return Rat(a == b ? 1 : 0);
      case Kind::General: return table[static_cast<size_t>(a - 1) * n + (b - 1)];
    }
    return Rat(0);
  }
  bool operator==(const CouplingSpec& o) const {
    return kind == o.kind && (kind != Kind::General || (m == o.m && n == o.n && table == o.table));
  }
};

// An element of the extended two-sided tensor algebra T'(V,W) (x) R.
//
// Canonical term: (left word I, sigma, right word J) with both words weakly
// increasing; a stored left word (i_1,...,i_p) denotes the product
// e_{i_p} ... e_{i_1} (the paper's right-to-left numbering), a stored right
// word (j_1,...,j_q) denotes f_{j_1} ... f_{j_q}.  The flattened coefficient
// map carries the two-sided symmetrizer projections s_I t s_J, which makes
// equality a plain map comparison.
//
// Specializations by shape:
//   T-bar(V)        : right words empty
//   T-bar-circ(W)   : left words empty
//   L(V)            : coupling Delta, right letters read as covectors e*.
template <class R = Rat>
class Tensor {
 public:
  struct Key {
    Word left;
    Perm mid;
    Word right;
    bool operator<(const Key& o) const {
      if (left != o.left) return left < o.left;
      if (!(mid == o.mid)) return mid < o.mid;
      return right < o.right;
    }
    bool operator==(const Key& o) const {
      return left == o.left && mid == o.mid && right == o.right;
    }
  };

  Tensor() = default;
  Tensor(int nleft, int nright, CouplingSpec c = CouplingSpec::zero())
      : nleft_(nleft), nright_(nright), coupling_(std::move(c)) {}

  // ---- factories ---------------------------------------------------------

  static Tensor tbar_zero(int n) { return Tensor(n, 0); }
  // e_a in T-bar(V).
  static Tensor tbar_gen(int n, int a) { return tbar_word(n, {a}); }
  // e_{i_p} ... e_{i_1} for stored word I (any order; canonicalized).
  static Tensor tbar_word(int n, const Word& I) {
    Tensor t(n, 0);
    t.add_term(I, Perm(), {}, ring_one<R>());
    return t;
  }
  static Tensor tbar_perm(int n, const Perm& s) { return tbar_ga(n, GAElem::of(s)); }
  static Tensor tbar_ga(int n, const GAElem& g) {
    Tensor t(n, 0);
    for (const auto& [s, c] : g.terms()) t.add_term({}, s, {}, ring_scale(ring_one<R>(), c));
    return t;
  }
  static Tensor tbar_scalar(int n, const R& c) {
    Tensor t(n, 0);
    t.add_term({}, Perm(), {}, c);
    return t;
  }

  // sigma' f_{j_1} ... f_{j_q} in T-bar-circ(W).
  static Tensor opp_word(int n, const Word& J, const Perm& s = Perm()) {
    Tensor t(0, n);
    t.add_term({}, s, J, ring_one<R>());
    return t;
  }

  static Tensor lop_zero(int n) { return Tensor(n, n, CouplingSpec::delta()); }
  // L(e_a).
  static Tensor lop_vec(int n, int a) {
    Tensor t = lop_zero(n);
    t.add_term({a}, Perm(), {}, ring_one<R>());
    return t;
  }
  // L(e*_b).
  static Tensor lop_covec(int n, int b) {
    Tensor t = lop_zero(n);
    t.add_term({}, Perm(), {b}, ring_one<R>());
    return t;
  }
  static Tensor lop_perm(int n, const Perm& s) {
    Tensor t = lop_zero(n);
    t.add_term({}, s, {}, ring_one<R>());
    return t;
  }
  static Tensor lop_one(int n) { return lop_perm(n, Perm()); }
  static Tensor lop_ga(int n, const GAElem& g) {
    Tensor t = lop_zero(n);
    for (const auto& [s, c] : g.terms()) t.add_term({}, s, {}, ring_scale(ring_one<R>(), c));
    return t;
  }
  // pi(E_ij) = L(e_i) L(e*_j).
  static Tensor polarization(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("polarization: index range");
    Tensor t = lop_zero(n);
    t.add_term({i}, Perm(), {j}, ring_one<R>());
    return t;
  }

  static Tensor tvw_zero(int m, int n, CouplingSpec c = CouplingSpec::zero()) {
    return Tensor(m, n, std::move(c));
  }

  // ---- raw term insertion (canonicalizes) --------------------------------

  // Adds coeff * e[leftRaw] sigma f[rightRaw], sorting both words and
  // applying both symmetrizer projections.
  void add_term(const Word& leftRaw, const Perm& sigma, const Word& rightRaw, const R& coeff) {
    if (ring_is_zero(coeff)) return;
    auto [lw, lsort] = sort_word(leftRaw);
    auto [rw, rsort] = sort_word(rightRaw);
    // word(I) t = word(J) (sigma_I^{-1} t); t star(D) = (t sigma_D) star(J_D).
    Perm core = lsort.inverse() * sigma * rsort;
    const auto& lstab = word_stabilizer(lw);
    const auto& rstab = word_stabilizer(rw);
    Rat w = Rat(1) / Rat(static_cast<long>(lstab.size() * rstab.size()));
    R scaled = ring_scale(coeff, w);
    detail::charge_budget(terms_.size());
    for (const auto& t1 : lstab) {
      Perm pre = t1 * core;
      for (const auto& t2 : rstab) insert(Key{lw, pre * t2, rw}, scaled);
    }
  }

  void add_ga_term(const Word& leftRaw, const GAElem& t, const Word& rightRaw, const R& coeff) {
    for (const auto& [s, c] : t.terms()) add_term(leftRaw, s, rightRaw, ring_scale(coeff, c));
  }

  // Fast path for terms already in canonical form (words sorted, two-sided
  // symmetrizer projections applied across the inserted family). Used by the
  // operator-application routines, which only rescale canonical families.
  void add_canonical_term(const Key& k, const R& coeff) { insert(k, coeff); }

  // ---- ring structure ----------------------------------------------------

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Key, R>& terms() const { return terms_; }
  int nleft() const { return nleft_; }
  int nright() const { return nright_; }
  const CouplingSpec& coupling() const { return coupling_; }

  bool operator==(const Tensor& o) const { return terms_ == o.terms_; }
  bool operator!=(const Tensor& o) const { return !(terms_ == o.terms_); }

  Tensor operator+(const Tensor& o) const {
    Tensor r = *this;
    r.unify_shape(o);
    for (const auto& [k, c] : o.terms_) r.insert(k, c);
    return r;
  }
  Tensor operator-(const Tensor& o) const {
    Tensor r = *this;
    r.unify_shape(o);
    for (const auto& [k, c] : o.terms_) r.insert(k, ring_scale(c, Rat(-1)));
    return r;
  }
  Tensor scale(const Rat& c) const {
    Tensor r(nleft_, nright_, coupling_);
    if (rat_is_zero(c)) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, ring_scale(v, c));
    return r;
  }
  Tensor scale_ring(const R& c) const {  // coefficient multiplication on the right
    Tensor r(nleft_, nright_, coupling_);
    for (const auto& [k, v] : terms_) r.insert(k, v * c);
    return r;
  }

  // Full normal-ordered product via the straightening relations
  //   e_b e_a = e_a e_b s_1,  f_b f_a = s_1 f_a f_b,  f_b e_a = e_a s_1 f_b + c_{ab},
  //   sigma e_a = e_a alpha(sigma),  f_a sigma = alpha(sigma) f_a.
  Tensor operator*(const Tensor& o) const {
    Tensor r(std::max(nleft_, o.nleft_), std::max(nright_, o.nright_),
             terms_.empty() ? o.coupling_ : coupling_);
    if (!terms_.empty() && !o.terms_.empty() && !(coupling_ == o.coupling_))
      throw std::invalid_argument("Tensor: coupling mismatch in product");
    for (const auto& [k1, c1] : terms_)
      for (const auto& [k2, c2] : o.terms_) mul_terms(r, k1, k2, c1 * c2);
    return r;
  }

  // Right multiplication by the group algebra (degree-lazy S_infinity action).
  Tensor right_mul(const GAElem& g) const {
    Tensor r(nleft_, nright_, coupling_);
    for (const auto& [k, c] : terms_)
      for (const auto& [s, w] : g.terms()) r.add_term_sorted(k.left, k.mid * s, k.right, ring_scale(c, w));
    return r;
  }
  // Left multiplication by sigma in S_infinity: sigma word(I) = word(I) alpha^p(sigma).
  Tensor left_mul(const GAElem& g) const {
    Tensor r(nleft_, nright_, coupling_);
    for (const auto& [k, c] : terms_) {
      int p = static_cast<int>(k.left.size());
      for (const auto& [s, w] : g.terms())
        r.add_term_sorted(k.left, s.alpha(p) * k.mid, k.right, ring_scale(c, w));
    }
    return r;
  }

  // ---- degree bookkeeping --------------------------------------------------

  // Largest left-word length.
  int vector_degree() const {
    int p = 0;
    for (const auto& [k, c] : terms_) p = std::max(p, static_cast<int>(k.left.size()));
    return p;
  }
  // Smallest q with the term in T^{(q)}_p: max(0, deg(mid) - p) per term.
  int q_degree() const {
    int q = 0;
    for (const auto& [k, c] : terms_) {
      int p = static_cast<int>(k.left.size());
      q = std::max(q, std::max(0, k.mid.max_moved() - p));
    }
    return q;
  }
  // Restriction to terms of left-degree p (grading projection).
  Tensor component(int p) const {
    Tensor r(nleft_, nright_, coupling_);
    for (const auto& [k, c] : terms_)
      if (static_cast<int>(k.left.size()) == p) r.terms_.emplace(k, c);
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const char* rprefix = coupling_.kind == CouplingSpec::Kind::Delta ? "e*" : "f";
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << ring_str(c) << " * ";
      bool any = false;
      for (auto it = k.left.rbegin(); it != k.left.rend(); ++it) {
        os << (any ? " " : "") << "e" << *it;
        any = true;
      }
      if (!k.mid.is_identity() || (k.left.empty() && k.right.empty())) {
        os << (any ? " . " : "") << k.mid.cycles_str();
        any = true;
      }
      bool started_right = false;
      for (int j : k.right) {
        os << (any && !started_right ? " . " : started_right ? " " : "") << rprefix << j;
        any = started_right = true;
      }
    }
    return os.str();
  }

 private:
  void unify_shape(const Tensor& o) {
    nleft_ = std::max(nleft_, o.nleft_);
    nright_ = std::max(nright_, o.nright_);
    if (terms_.empty() && coupling_.kind == CouplingSpec::Kind::Zero) coupling_ = o.coupling_;
  }

  void insert(const Key& k, const R& c) {
    if (ring_is_zero(c)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      detail::charge_budget(terms_.size());
    } else {
      it->second = it->second + c;
      if (ring_is_zero(it->second)) terms_.erase(it);
    }
  }

  // For words already weakly increasing: only reprojects.
  void add_term_sorted(const Word& lw, const Perm& mid, const Word& rw, const R& coeff) {
    add_term(lw, mid, rw, coeff);
  }

  // Stable sorting permutation: returns (sorted word J, sigma) with
  // sigma(I) = J, i.e. J_k = I_{sigma(k)}.
  static std::pair<Word, Perm> sort_word(const Word& I) {
    int p = static_cast<int>(I.size());
    std::vector<int> idx(p);
    std::iota(idx.begin(), idx.end(), 1);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return I[a - 1] < I[b - 1]; });
    Word J(p);
    for (int k = 0; k < p; ++k) J[k] = I[idx[k] - 1];
    return {std::move(J), Perm(std::move(idx))};
  }

  // ---- straightening engine ----------------------------------------------

  struct Atom {
    char kind;  // 'E', 'F', 'S'
    int a = 0;
    Perm s;
  };

  void mul_terms(Tensor& out, const Key& k1, const Key& k2, const R& coeff) const {
    std::vector<Atom> seq;
    seq.reserve(k1.left.size() + k1.right.size() + k2.left.size() + k2.right.size() + 2);
    auto push_left = [&](const Word& w) {
      for (auto it = w.rbegin(); it != w.rend(); ++it) seq.push_back(Atom{'E', *it, Perm()});
    };
    auto push_mid = [&](const Perm& s) {
      if (!s.is_identity()) seq.push_back(Atom{'S', 0, s});
    };
    auto push_right = [&](const Word& w) {
      for (int j : w) seq.push_back(Atom{'F', j, Perm()});
    };
    push_left(k1.left);
    push_mid(k1.mid);
    push_right(k1.right);
    push_left(k2.left);
    push_mid(k2.mid);
    push_right(k2.right);
    straighten(out, std::move(seq), coeff);
  }

  void straighten(Tensor& out, std::vector<Atom> seq0, const R& coeff0) const {
    std::vector<std::pair<std::vector<Atom>, R>> work;
    work.emplace_back(std::move(seq0), coeff0);
    while (!work.empty()) {
      detail::charge_budget(work.size() + out.terms_.size());
      auto [seq, coeff] = std::move(work.back());
      work.pop_back();
      bool terminal = true;
      for (size_t k = 0; k + 1 < seq.size(); ++k) {
        const Atom& x = seq[k];
        const Atom& y = seq[k + 1];
        if (x.kind == 'S' && y.kind == 'S') {
          Perm merged = x.s * y.s;
          seq.erase(seq.begin() + k + 1);
          if (merged.is_identity())
            seq.erase(seq.begin() + k);
          else
            seq[k] = Atom{'S', 0, merged};
          work.emplace_back(std::move(seq), std::move(coeff));
          terminal = false;
          break;
        }
        if (x.kind == 'S' && y.kind == 'E') {  // sigma e_a = e_a alpha(sigma)
          Atom e = y;
          seq[k + 1] = Atom{'S', 0, x.s.alpha(1)};
          seq[k] = e;
          work.emplace_back(std::move(seq), std::move(coeff));
          terminal = false;
          break;
        }
        if (x.kind == 'F' && y.kind == 'S') {  // f_a sigma = alpha(sigma) f_a
          Atom f = x;
          seq[k] = Atom{'S', 0, y.s.alpha(1)};
          seq[k + 1] = f;
          work.emplace_back(std::move(seq), std::move(coeff));
          terminal = false;
          break;
        }
        if (x.kind == 'F' && y.kind == 'E') {  // f_b e_a = e_a s_1 f_b + c_{ab}
          Rat c = coupling_.value(y.a, x.a);
          if (!rat_is_zero(c)) {
            std::vector<Atom> contracted;
            contracted.reserve(seq.size() - 2);
            contracted.insert(contracted.end(), seq.begin(), seq.begin() + k);
            contracted.insert(contracted.end(), seq.begin() + k + 2, seq.end());
            work.emplace_back(std::move(contracted), ring_scale(coeff, c));
          }
          Atom f = x, e = y;
          seq[k] = e;
          seq[k + 1] = Atom{'S', 0, Perm::adjacent(1)};
          seq.insert(seq.begin() + k + 2, f);
          work.emplace_back(std::move(seq), std::move(coeff));
          terminal = false;
          break;
        }
      }
      if (!terminal) continue;
      // Terminal shape E^a [S] F^b: collect and canonicalize.
      Word lw, rw;
      Perm mid;
      for (const auto& at : seq) {
        if (at.kind == 'E') lw.push_back(at.a);
        else if (at.kind == 'S') mid = at.s;
        else rw.push_back(at.a);
      }
      std::reverse(lw.begin(), lw.end());  // product order back to stored order
      out.add_term(lw, mid, rw, coeff);
    }
  }

  int nleft_ = 0, nright_ = 0;
  CouplingSpec coupling_{};
  std::map<Key, R> terms_;
};

template <class R>
struct RingTraits<Tensor<R>> {
  static Tensor<R> one() {
    Tensor<R> t;
    t.add_term({}, Perm(), {}, ring_one<R>());
    return t;
  }
  static bool is_zero(const Tensor<R>& t) { return t.is_zero(); }
  static Tensor<R> scale(const Tensor<R>& t, const Rat& c) { return t.scale(c); }
  static std::string str(const Tensor<R>& t) { return t.to_string(); }
};

using TBar = Tensor<Rat>;
using LOp = Tensor<Rat>;

// ---- operators on T-bar ----------------------------------------------------

// L(e*_j) phi: sum_k <e*_j, v_k> v_p ... v_k-hat ... v_1 (p p-1 ... k) t.
template <class R>
Tensor<R> derivation_apply(int j, const Tensor<R>& phi) {
  Tensor<R> out(phi.nleft(), phi.nright(), phi.coupling());
  for (const auto& [k, c] : phi.terms()) {
    if (!k.right.empty()) throw std::invalid_argument("derivation_apply: not an element of T-bar(V)");
    int p = static_cast<int>(k.left.size());
    for (int pos = 1; pos <= p; ++pos) {
      if (k.left[pos - 1] != j) continue;
      Word w = k.left;
      w.erase(w.begin() + (pos - 1));
      Perm cyc;
      if (pos < p) {
        std::vector<int> pts;
        for (int x = p; x >= pos; --x) pts.push_back(x);
        cyc = Perm::cycle(pts);
      }
      out.add_term(w, cyc * k.mid, {}, c);
    }
  }
  return out;
}

namespace detail {
// Multiset containment of two weakly increasing words.
inline bool word_submultiset(const Word& sub, const Word& super) {
  size_t i = 0;
  for (int x : super) {
    if (i == sub.size()) return true;
    if (sub[i] == x) ++i;
    else if (sub[i] < x) return false;
  }
  return i == sub.size();
}
}  // namespace detail

// Applies a normal-ordered operator (Delta coupling) to phi in T-bar(V).
template <class R>
Tensor<R> lop_apply(const Tensor<R>& op, const Tensor<R>& phi) {
  Tensor<R> out(std::max(op.nleft(), phi.nleft()), 0);
  for (const auto& [ok, oc] : op.terms()) {
    // The derivation chain annihilates a term unless every covector letter
    // occurs in the word; filtering whole canonical families keeps the
    // intermediate tensors merged.
    Tensor<R> cur(phi.nleft(), 0);
    for (const auto& [fk, fc] : phi.terms()) {
      if (!fk.right.empty()) throw std::invalid_argument("lop_apply: operand not in T-bar(V)");
      if (!detail::word_submultiset(ok.right, fk.left)) continue;
      cur.add_canonical_term(fk, oc * fc);
    }
    // Covectors, rightmost factor first.
    for (auto it = ok.right.rbegin(); it != ok.right.rend() && !cur.is_zero(); ++it)
      cur = derivation_apply(*it, cur);
    if (cur.is_zero()) continue;
    if (!ok.mid.is_identity()) cur = cur.left_mul(GAElem::of(ok.mid));
    for (const auto& [ck, cc] : cur.terms()) {
      Word w = ck.left;
      w.insert(w.end(), ok.left.begin(), ok.left.end());
      out.add_term(w, ck.mid, {}, cc);
    }
  }
  return out;
}

// <sigma' v*_1 ... v*_p, v_p ... v_1 sigma> in CS_infinity (x) R.
template <class R>
GroupAlg<R> pairing(const Tensor<R>& phistar, const Tensor<R>& phi) {
  GroupAlg<R> out;
  for (const auto& [ak, ac] : phistar.terms()) {
    if (!ak.left.empty()) throw std::invalid_argument("pairing: left factor not in T-bar-circ(V*)");
    for (const auto& [bk, bc] : phi.terms()) {
      if (!bk.right.empty()) throw std::invalid_argument("pairing: right factor not in T-bar(V)");
      if (ak.right.size() != bk.left.size()) throw std::invalid_argument("pairing: degree mismatch");
      Tensor<R> cur(std::max(phistar.nright(), phi.nleft()), 0);
      cur.add_term(bk.left, bk.mid, {}, ac * bc);
      for (auto it = ak.right.rbegin(); it != ak.right.rend() && !cur.is_zero(); ++it)
        cur = derivation_apply(*it, cur);
      for (const auto& [ck, cc] : cur.terms()) out.add_term(ak.mid * ck.mid, cc);
    }
  }
  return out;
}

// (u_p...u_1 sigma v*_1...v*_q) diamond (v_q...v_1 sigma' w_1...w_r).
template <class R>
Tensor<R> diamond(const Tensor<R>& a, const Tensor<R>& b) {
  Tensor<R> out(a.nleft(), b.nright());
  for (const auto& [ak, ac] : a.terms()) {
    for (const auto& [bk, bc] : b.terms()) {
      if (ak.right.size() != bk.left.size()) throw std::invalid_argument("diamond: degree mismatch");
      Tensor<Rat> mid(std::max(a.nright(), b.nleft()), 0);
      mid.add_term(bk.left, bk.mid, {}, Rat(1));
      for (auto it = ak.right.rbegin(); it != ak.right.rend() && !mid.is_zero(); ++it)
        mid = derivation_apply(*it, mid);
      // The chain already carries bk.mid on its right, so the middle is
      // ak.mid * <v*word, vword> * sigma'.
      R prod = ac * bc;
      for (const auto& [mk, mc] : mid.terms())
        out.add_term(ak.left, ak.mid * mk.mid, bk.right, ring_scale(prod, mc));
    }
  }
  return out;
}

inline std::vector<Word> all_words(int n, int p);

// <Phi> = (1/p!) sum_I e*_{i_1}...e*_{i_p} diamond Phi diamond e_{i_p}...e_{i_1}.
template <class R>
GroupAlg<R> bracket(const Tensor<R>& Phi, int p) {
  int n = Phi.nleft();
  GroupAlg<R> out;
  for (const Word& I : all_words(n, p)) {
    Tensor<R> right = Tensor<R>::tbar_word(n, I);
    Tensor<R> left(0, n);
    left.add_term({}, Perm(), I, ring_one<R>());
    Tensor<R> d2 = diamond(left, diamond(Phi, right));
    for (const auto& [k, c] : d2.terms()) out.add_term(k.mid, c);
  }
  return out.scale(Rat(1) / rat_factorial(p));
}

// <Phi>_lambda = chi_lambda(<Phi>) for rational coefficients.
Rat bracket_lambda(const Tensor<Rat>& Phi, const Partition& lambda, int p);

enum class QuotientKind { Symmetric, Antisymmetric };

// Ring quotients T-bar(V)/(sigma - 1) = S(V) and /(sigma - sgn sigma) = Lambda(V).
// Keys are sorted words: commutative monomials resp. strictly increasing wedges.
template <class R>
std::map<Word, R> quotient_project(const Tensor<R>& phi, QuotientKind kind) {
  std::map<Word, R> out;
  auto add = [&out](const Word& w, const R& c) {
    if (ring_is_zero(c)) return;
    auto it = out.find(w);
    if (it == out.end()) {
      out.emplace(w, c);
    } else {
      it->second = it->second + c;
      if (ring_is_zero(it->second)) out.erase(it);
    }
  };
  for (const auto& [k, c] : phi.terms()) {
    if (!k.right.empty()) throw std::invalid_argument("quotient_project: not in T-bar(V)");
    if (kind == QuotientKind::Symmetric) {
      add(k.left, c);
    } else {
      bool repeats = false;
      for (size_t i = 0; i + 1 < k.left.size(); ++i)
        if (k.left[i] == k.left[i + 1]) repeats = true;
      if (repeats) continue;
      int p = static_cast<int>(k.left.size());
      int rev = ((p * (p - 1) / 2) % 2 == 0) ? 1 : -1;  // e_{i_p}...e_{i_1} vs ascending wedge
      add(k.left, ring_scale(c, Rat(k.mid.sign() * rev)));
    }
  }
  return out;
}

// ---- standard operators -----------------------------------------------------

// A = sum_i L(e_i) L(e*_i); acts as p id on T-bar_p.
template <class R = Rat>
Tensor<R> euler_op(int n) {
  Tensor<R> t = Tensor<R>::lop_zero(n);
  for (int i = 1; i <= n; ++i) t.add_term({i}, Perm(), {i}, ring_one<R>());
  return t;
}

// A_p = (1/p!) sum_{I in [n]^p} L(e_{i_p})...L(e_{i_1}) L(e*_{i_1})...L(e*_{i_p}).
template <class R = Rat>
Tensor<R> euler_higher(int n, int p) {
  if (p < 0) throw std::invalid_argument("euler_higher: negative degree");
  Tensor<R> t = Tensor<R>::lop_zero(n);
  if (p == 0) return Tensor<R>::lop_one(n);
  Word I(p, 1);
  Rat w = Rat(1) / rat_factorial(p);
  while (true) {
    t.add_term(I, Perm(), I, ring_scale(ring_one<R>(), w));
    int pos = p - 1;
    while (pos >= 0 && I[pos] == n) --pos;
    if (pos < 0) break;
    ++I[pos];
    for (int k = pos + 1; k < p; ++k) I[k] = 1;
  }
  return t;
}

// Iterates over all words in [n]^p in lexicographic order.
inline std::vector<Word> all_words(int n, int p) {
  std::vector<Word> out;
  Word I(p, 1);
  if (p == 0) {
    out.push_back(I);
    return out;
  }
  while (true) {
    out.push_back(I);
    int pos = p - 1;
    while (pos >= 0 && I[pos] == n) --pos;
    if (pos < 0) break;
    ++I[pos];
    for (int k = pos + 1; k < p; ++k) I[k] = 1;
  }
  return out;
}

inline std::vector<Word> increasing_words(int n, int p, bool strict) {
  std::vector<Word> out;
  Word I;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(I.size()) == p) {
      out.push_back(I);
      return;
    }
    for (int v = start; v <= n; ++v) {
      I.push_back(v);
      self(self, strict ? v + 1 : v);
      I.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline Rat word_multiplicity_factorial(const Word& I) {  // I!
  Rat r = 1;
  int run = 1;
  for (size_t k = 1; k < I.size(); ++k) {
    if (I[k] == I[k - 1]) r *= ++run;
    else run = 1;
  }
  return r;
}

}  // namespace extensor
