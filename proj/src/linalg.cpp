#include "extensor/linalg.hpp"

#include <stdexcept>

namespace extensor {

SparseVec to_sparse(const std::vector<Rat>& dense) {
  SparseVec v;
  for (size_t i = 0; i < dense.size(); ++i)
    if (!rat_is_zero(dense[i])) v.emplace_back(static_cast<int>(i), dense[i]);
  return v;
}

std::vector<Rat> to_dense(const SparseVec& v, int n) {
  std::vector<Rat> d(n, Rat(0));
  for (const auto& [i, c] : v) d[i] = c;
  return d;
}

SparseVec sparse_axpy(const SparseVec& a, const Rat& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rat v = c * b[j].second;
      if (!rat_is_zero(v)) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      Rat v = a[i].second + c * b[j].second;
      if (!rat_is_zero(v)) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec RowBasis::reduce(SparseVec v) const {
  size_t k = 0;
  while (k < v.size()) {
    auto it = rows_.find(v[k].first);
    if (it == rows_.end()) {
      ++k;
      continue;
    }
    // Pivot hit: eliminate. Entries before k are untouched (their columns
    // are non-pivot or already processed).
    v = sparse_axpy(v, -v[k].second, it->second);
  }
  return v;
}

bool RowBasis::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  int pivot = v.front().first;
  Rat inv = 1 / v.front().second;
  for (auto& [i, c] : v) c *= inv;
  // Back-substitution keeps the form fully reduced.
  for (auto& [p, row] : rows_) {
    (void)p;
    for (const auto& [i, c] : row) {
      if (i == pivot) {
        row = sparse_axpy(row, -c, v);
        break;
      }
      if (i > pivot) break;
    }
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<std::vector<Rat>> RowBasis::kernel(int n) const {
  std::vector<std::vector<Rat>> out;
  std::vector<char> is_pivot(n, 0);
  for (const auto& [p, row] : rows_) {
    (void)row;
    is_pivot[p] = 1;
  }
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[j] = 1;
    for (const auto& [p, row] : rows_) {
      for (const auto& [i, c] : row)
        if (i == j) {
          v[p] = -c;
          break;
        }
    }
    out.push_back(std::move(v));
  }
  return out;
}

int span_rank(const std::vector<std::vector<Rat>>& a) {
  RowBasis rb;
  for (const auto& v : a) rb.insert(to_sparse(v));
  return rb.rank();
}

bool span_contains(const std::vector<std::vector<Rat>>& b, const std::vector<std::vector<Rat>>& a) {
  RowBasis rb;
  for (const auto& v : b) rb.insert(to_sparse(v));
  for (const auto& v : a)
    if (!rb.contains(to_sparse(v))) return false;
  return true;
}

bool same_span(const std::vector<std::vector<Rat>>& a, const std::vector<std::vector<Rat>>& b) {
  return span_rank(a) == span_rank(b) && span_contains(a, b);
}

std::vector<Rat> mat_to_vec(const RatMatrix& m) {
  std::vector<Rat> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

namespace {

void insert_commutator_rows(RowBasis& rb, const RatMatrix& g, int N) {
  auto col = [N](int r, int c) { return r * N + c; };
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      // (F g)_{rc} - (g F)_{rc} = sum_k F_{rk} g_{kc} - g_{rk} F_{kc}.
      std::map<int, Rat> row;
      for (int k = 0; k < N; ++k) {
        if (!rat_is_zero(g.at(k, c))) row[col(r, k)] += g.at(k, c);
        if (!rat_is_zero(g.at(r, k))) row[col(k, c)] -= g.at(r, k);
      }
      SparseVec v;
      for (const auto& [i, val] : row)
        if (!rat_is_zero(val)) v.emplace_back(i, val);
      if (!v.empty()) rb.insert(std::move(v));
    }
}

std::vector<RatMatrix> kernel_matrices(const RowBasis& rb, int N) {
  std::vector<RatMatrix> out;
  for (const auto& vec : rb.kernel(N * N)) {
    RatMatrix m(N, N);
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) m.at(r, c) = vec[static_cast<size_t>(r) * N + c];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<RatMatrix> commutant(const std::vector<RatMatrix>& gens, int N) {
  RowBasis rb;
  for (const auto& g : gens) insert_commutator_rows(rb, g, N);
  return kernel_matrices(rb, N);
}

std::vector<RatMatrix> commutant_of_span(const std::vector<RatMatrix>& ops, int N) {
  RowBasis rb;
  size_t prefix = std::min<size_t>(ops.size(), 4);
  for (size_t i = 0; i < prefix; ++i) insert_commutator_rows(rb, ops[i], N);
  std::vector<RatMatrix> K = kernel_matrices(rb, N);
  for (size_t i = prefix; i < ops.size(); ++i) {
    bool commutes = true;
    for (const auto& F : K)
      if (!(F * ops[i] == ops[i] * F)) {
        commutes = false;
        break;
      }
    if (!commutes) {
      insert_commutator_rows(rb, ops[i], N);
      K = kernel_matrices(rb, N);
    }
  }
  return K;
}

int algebra_closure_dim(const std::vector<RatMatrix>& seed, const std::vector<RatMatrix>& ambient) {
  if (ambient.empty()) return seed.empty() ? 0 : -1;
  int N = ambient.front().rows();
  int dim = N * N;
  // Coordinates of x relative to the ambient basis via one shared RREF.
  RowBasis amb;
  std::vector<std::vector<Rat>> amb_rows;
  for (const auto& m : ambient) {
    amb_rows.push_back(mat_to_vec(m));
    amb.insert(to_sparse(amb_rows.back()));
  }
  auto in_ambient = [&](const RatMatrix& m) { return amb.contains(to_sparse(mat_to_vec(m))); };

  std::vector<RatMatrix> basis;  // of the growing span, kept independent
  RowBasis span;
  auto add = [&](const RatMatrix& m) {
    if (!in_ambient(m)) return -1;
    if (span.insert(to_sparse(mat_to_vec(m)))) {
      basis.push_back(m);
      return 1;
    }
    return 0;
  };
  for (const auto& m : seed)
    if (add(m) < 0) return -1;
  // Grow by products to the fixed point; pairs with both factors below
  // `frontier` are already processed.
  size_t frontier = 0;
  while (frontier < basis.size()) {
    size_t sz = basis.size();
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = (i < frontier ? frontier : size_t{0}); j < sz; ++j)
        if (add(basis[i] * basis[j]) < 0) return -1;
    frontier = sz;
  }
  (void)dim;
  return static_cast<int>(basis.size());
}

}  // namespace extensor
