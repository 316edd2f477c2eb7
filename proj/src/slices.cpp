#include "extensor/slices.hpp"

#include <stdexcept>

namespace extensor {

SliceBasis::SliceBasis(int N, int p, int q) : N_(N), p_(p), q_(q) {
  auto spq = symmetric_group(p + q);
  for (const auto& I : increasing_words(N, p, false)) {
    auto stab = word_stabilizer(I);
    stabs_.emplace(I, stab);
    for (const auto& s : spq) {
      // Keep s iff it is the minimal element of (S_p)_I s.
      bool minimal = true;
      for (const auto& t : stab) {
        if (t.is_identity()) continue;
        if (t * s < s) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        index_.emplace(std::make_pair(I, s), static_cast<int>(elems_.size()));
        elems_.emplace_back(I, s);
      }
    }
  }
}

TBar SliceBasis::element(int k) const {
  const auto& [I, rep] = elems_[k];
  TBar t = TBar::tbar_zero(N_);
  const auto& stab = stabs_.at(I);
  Rat w = Rat(1) / Rat(static_cast<long>(stab.size()));
  for (const auto& s : stab) t.add_term(I, s * rep, {}, w);
  return t;
}

std::vector<Rat> SliceBasis::coords(const TBar& phi) const {
  std::vector<Rat> v(dim(), Rat(0));
  for (const auto& [key, c] : phi.terms()) {
    if (!key.right.empty()) throw std::invalid_argument("SliceBasis::coords: not in T-bar");
    if (static_cast<int>(key.left.size()) != p_ || key.mid.max_moved() > p_ + q_)
      throw std::invalid_argument("SliceBasis::coords: element escapes the slice");
    auto it = index_.find(std::make_pair(key.left, key.mid));
    if (it == index_.end()) continue;  // non-representative member of the coset
    v[it->second] = c * word_multiplicity_factorial(key.left);
  }
  return v;
}

RatMatrix matrixize(const std::function<TBar(const TBar&)>& op, const SliceBasis& domain,
                    const SliceBasis& codomain) {
  RatMatrix m(codomain.dim(), domain.dim());
  for (int k = 0; k < domain.dim(); ++k) {
    auto img = codomain.coords(op(domain.element(k)));
    for (int r = 0; r < codomain.dim(); ++r) m.at(r, k) = img[r];
  }
  return m;
}

RatMatrix right_mult_matrix(const GAElem& t, const SliceBasis& basis) {
  return matrixize([&](const TBar& phi) { return phi.right_mul(t); }, basis, basis);
}

RatMatrix lop_matrix(const LOp& op, const SliceBasis& domain, const SliceBasis& codomain) {
  return matrixize([&](const TBar& phi) { return lop_apply(op, phi); }, domain, codomain);
}

LOp pi_tensor_gen(int n, int nprime, int i, int j) {
  int N = n * nprime;
  LOp t = LOp::lop_zero(N);
  for (int a = 1; a <= nprime; ++a)
    t.add_term({tensor_index(i, a, nprime)}, Perm(), {tensor_index(j, a, nprime)}, Rat(1));
  return t;
}

LOp pi_tensor(const PBW& u, int n, int nprime) {
  int N = n * nprime;
  LOp out = LOp::lop_zero(N);
  for (const auto& [mono, c] : u.terms()) {
    LOp prod = LOp::lop_one(N).scale(c);
    for (const auto& g : mono) prod = prod * pi_tensor_gen(n, nprime, g.i, g.j);
    out = out + prod;
  }
  return out;
}

std::vector<std::vector<Rat>> sl_invariants(int n, int nprime, int p) {
  SliceBasis basis(n * nprime, p, 0);
  RowBasis rb;
  auto add_op_rows = [&](const RatMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
      SparseVec v;
      for (int j = 0; j < m.cols(); ++j)
        if (!rat_is_zero(m.at(i, j))) v.emplace_back(j, m.at(i, j));
      if (!v.empty()) rb.insert(std::move(v));
    }
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) add_op_rows(lop_matrix(pi_tensor_gen(n, nprime, i, j), basis));
  for (int i = 1; i < n; ++i)
    add_op_rows(lop_matrix(pi_tensor_gen(n, nprime, i, i), basis) -
                lop_matrix(pi_tensor_gen(n, nprime, i + 1, i + 1), basis));
  return rb.kernel(basis.dim());
}

}  // namespace extensor
