#include "extensor/envelope.hpp"
#include "extensor/linalg.hpp"
#include "extensor/ring_matrix.hpp"
#include "extensor/slices.hpp"
#include "extensor/tensor.hpp"
#include "extensor/verify.hpp"

namespace extensor {

namespace {
using KV = std::vector<std::pair<std::string, std::string>>;
std::string S(int v) { return std::to_string(v); }

std::vector<std::vector<Rat>> vectorize(const std::vector<RatMatrix>& ms) {
  std::vector<std::vector<Rat>> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(mat_to_vec(m));
  return out;
}

// Spanning operators of L^{(q)}_l on T^{(q)}_p: e[u] sigma e*[w] with
// u, w weakly increasing in [n]^l and sigma in S_{l+q}.
std::vector<RatMatrix> lql_span(int n, int p, int q, int l, const SliceBasis& basis) {
  std::vector<RatMatrix> ops;
  auto words = increasing_words(n, l, false);
  auto slq = symmetric_group(l + q);
  for (const auto& u : words)
    for (const auto& w : words)
      for (const auto& s : slq) {
        LOp op = LOp::lop_zero(n);
        op.add_term(u, s, w, Rat(1));
        ops.push_back(lop_matrix(op, basis));
      }
  (void)p;
  return ops;
}

}  // namespace

std::vector<Report> verify_schur_weyl(int n, int p, int q) {
  std::vector<Report> out;
  SliceBasis basis(n, p, q);
  int N = basis.dim();
  KV params{{"n", S(n)}, {"p", S(p)}, {"q", S(q)}};

  std::vector<RatMatrix> rgens;
  for (int i = 1; i < p + q; ++i) rgens.push_back(right_mult_matrix(GAElem::of(Perm::adjacent(i)), basis));
  std::vector<RatMatrix> rspan;
  for (const auto& s : symmetric_group(p + q)) rspan.push_back(right_mult_matrix(GAElem::of(s), basis));

  auto lspan_mats = lql_span(n, p, q, p, basis);
  auto lspan = vectorize(lspan_mats);

  // (ii) R(CS_{p+q})' = L^{(q)}_p.
  auto rcomm = vectorize(commutant(rgens, N));
  bool dir1 = same_span(rcomm, lspan);
  out.push_back(Report::make("schur-weyl-commutant-of-permutations", params, dir1,
                             static_cast<long>(rcomm.size()), span_rank(lspan),
                             {{"space", S(N)}, {"commutant", S(static_cast<int>(rcomm.size()))}}));

  // (ii) reverse: (L^{(q)}_p)' = R(CS_{p+q}).
  auto lcomm = vectorize(commutant_of_span(lspan_mats, N));
  bool dir2 = same_span(lcomm, vectorize(rspan));
  out.push_back(Report::make("schur-weyl-commutant-of-operators", params, dir2,
                             static_cast<long>(lcomm.size()), span_rank(vectorize(rspan)),
                             {{"space", S(N)}, {"commutant", S(static_cast<int>(lcomm.size()))}}));

  // (i) filtration L^{(q)}_0 < ... < L^{(q)}_p and L^{(q)}_l = 0 for l > p.
  bool filtration = true;
  std::vector<std::vector<Rat>> prev;
  for (int l = 0; l <= p; ++l) {
    auto cur = vectorize(lql_span(n, p, q, l, basis));
    if (l > 0 && !span_contains(cur, prev)) filtration = false;
    prev = std::move(cur);
  }
  bool vanish = true;
  for (const auto& m : lql_span(n, p, q, p + 1, basis))
    if (!m.is_zero()) vanish = false;
  out.push_back(Report::make("schur-weyl-filtration", params, filtration && vanish));
  return out;
}

std::vector<Report> verify_howe(int n, int nprime, int p, int q) {
  std::vector<Report> out;
  int N0 = n * nprime;
  SliceBasis basis(N0, p, q);
  int N = basis.dim();
  KV params{{"n", S(n)}, {"nprime", S(nprime)}, {"p", S(p)}, {"q", S(q)}};

  // Q1 generators: the gl_n action and the right S_{p+q} multiplications.
  std::vector<RatMatrix> q1gens = {RatMatrix::identity(N)};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      q1gens.push_back(lop_matrix(pi_tensor_gen(n, nprime, i, j), basis));
  for (int i = 1; i < p + q; ++i)
    q1gens.push_back(right_mult_matrix(GAElem::of(Perm::adjacent(i)), basis));

  // Q2 spanning set: sum_I L(w_{i_p a_p})..L(w_{i_1 a_1}) sigma L(w*_{i_1 b_1})..L(w*_{i_p b_p}).
  std::vector<RatMatrix> q2ops;
  for (const auto& A : all_words(nprime, p))
    for (const auto& B : all_words(nprime, p))
      for (const auto& s : symmetric_group(p + q)) {
        LOp op = LOp::lop_zero(N0);
        for (const auto& I : all_words(n, p)) {
          Word u(p), w(p);
          for (int k = 0; k < p; ++k) {
            u[k] = tensor_index(I[k], A[k], nprime);
            w[k] = tensor_index(I[k], B[k], nprime);
          }
          op.add_term(u, s, w, Rat(1));
        }
        q2ops.push_back(lop_matrix(op, basis));
      }
  auto q2span = vectorize(q2ops);

  // Q1' = span(Q2).
  auto q1comm = vectorize(commutant(q1gens, N));
  bool dir1 = same_span(q1comm, q2span);
  out.push_back(Report::make("howe-commutant-of-group-action", params, dir1,
                             static_cast<long>(q1comm.size()), span_rank(q2span),
                             {{"space", S(N)}, {"commutant", S(static_cast<int>(q1comm.size()))}}));

  // Q2' equals the algebra generated by Q1.
  // A basis of span(Q2) keeps the commutant computation small.
  std::vector<RatMatrix> q2basis;
  {
    RowBasis rb;
    for (const auto& m : q2ops)
      if (rb.insert(to_sparse(mat_to_vec(m)))) q2basis.push_back(m);
  }
  auto q2comm = commutant_of_span(q2basis, N);
  bool gens_inside = true;
  for (const auto& g : q1gens)
    if (!span_contains(vectorize(q2comm), {mat_to_vec(g)})) gens_inside = false;
  int closure = algebra_closure_dim(q1gens, q2comm);
  bool dir2 = gens_inside && closure == static_cast<int>(q2comm.size());
  out.push_back(Report::make("howe-commutant-of-invariant-operators", params, dir2,
                             static_cast<long>(q2comm.size()), closure,
                             {{"space", S(N)}, {"closure", S(closure)}}));
  return out;
}

namespace {

RingMatrix<LOp> z_matrix(int n, int nprime) {
  int N = n * nprime;
  return RingMatrix<LOp>::from(n, nprime, [&](int i, int j) {
    LOp t = LOp::lop_zero(N);
    t.add_term({tensor_index(i, j, nprime)}, Perm(), {}, Rat(1));
    return t;
  });
}

RingMatrix<LOp> zstar_matrix(int n, int nprime) {
  int N = n * nprime;
  return RingMatrix<LOp>::from(n, nprime, [&](int i, int j) {
    LOp t = LOp::lop_zero(N);
    t.add_term({}, Perm(), {tensor_index(i, j, nprime)}, Rat(1));
    return t;
  });
}

std::vector<int> reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<Report> verify_capelli_t(int n, int nprime, int p, int r) {
  std::vector<Report> out;
  KV params{{"n", S(n)}, {"nprime", S(nprime)}, {"p", S(p)}, {"r", S(r)}};
  LOp lhs = pi_tensor(capelli(r, n), n, nprime);

  auto Z = z_matrix(n, nprime);
  auto Zs = zstar_matrix(n, nprime);
  int N0 = n * nprime;
  LOp rhs1 = LOp::lop_zero(N0);
  for (const auto& I : index_words_increasing(n, r, true))
    for (const auto& J : index_words_increasing(nprime, r, false)) {
      LOp term = column_det(Z.submatrix(reversed(I), reversed(J))) * column_det(Zs.submatrix(I, J));
      rhs1 = rhs1 + term.scale(Rat(1) / index_multiplicity(J));
    }
  LOp rhs2 = LOp::lop_zero(N0);
  for (const auto& I : index_words(n, r))
    for (const auto& J : index_words(nprime, r))
      rhs2 = rhs2 + column_det(Z.submatrix(reversed(I), reversed(J))) * column_det(Zs.submatrix(I, J));
  rhs2 = rhs2.scale(Rat(1) / (rat_factorial(r) * rat_factorial(r)));

  out.push_back(Report::make("capelli-on-tensor-normal-form", params, lhs == rhs1 && lhs == rhs2,
                             lhs.term_count(), rhs1.term_count()));

  for (int q = 0; q <= 1; ++q) {
    SliceBasis basis(N0, p, q);
    RatMatrix ml = lop_matrix(lhs, basis);
    RatMatrix m1 = lop_matrix(rhs1, basis);
    RatMatrix m2 = lop_matrix(rhs2, basis);
    KV pq = params;
    pq.emplace_back("q", S(q));
    out.push_back(Report::make("capelli-on-tensor-matrixized", pq, ml == m1 && ml == m2, 0, 0,
                               {{"space", S(basis.dim())}}));
  }
  return out;
}

std::vector<Report> verify_fft_sl(int n, int nprime, int p) {
  std::vector<Report> out;
  KV params{{"n", S(n)}, {"nprime", S(nprime)}, {"p", S(p)}};
  int N0 = n * nprime;
  SliceBasis basis(N0, p, 0);
  int N = basis.dim();
  auto kernel = sl_invariants(n, nprime, p);

  // Candidate span: products of column-determinants of Y times S_p.
  std::vector<std::vector<Rat>> candidates;
  if (p % n == 0) {
    int k = p / n;
    auto Y = RingMatrix<TBar>::from(n, nprime, [&](int i, int j) {
      return TBar::tbar_gen(N0, tensor_index(i, j, nprime));
    });
    std::vector<int> In(n);
    for (int i = 0; i < n; ++i) In[i] = n - i;  // I_n reversed
    std::vector<TBar> gens;
    for (const auto& J : index_words_increasing(nprime, n, false))
      gens.push_back(column_det(Y.submatrix(In, reversed(J))));
    std::vector<TBar> products = {TBar::tbar_perm(N0, Perm())};
    for (int step = 0; step < k; ++step) {
      std::vector<TBar> next;
      for (const auto& prod : products)
        for (const auto& g : gens) next.push_back(prod * g);
      products = std::move(next);
    }
    for (const auto& prod : products)
      for (const auto& s : symmetric_group(p)) candidates.push_back(basis.coords(prod.right_mul(GAElem::of(s))));
  }
  bool contained = span_contains(kernel, candidates);
  bool equal = contained && span_rank(candidates) == static_cast<int>(kernel.size());
  out.push_back(Report::make("sl-invariants-first-fundamental-theorem", params, equal,
                             static_cast<long>(kernel.size()), span_rank(candidates),
                             {{"space", S(N)}, {"invariants", S(static_cast<int>(kernel.size()))}}));
  return out;
}

}  // namespace extensor
