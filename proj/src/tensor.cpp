#include "extensor/tensor.hpp"

#include "extensor/characters.hpp"

namespace extensor {

namespace {
thread_local std::size_t g_term_budget = 0;
}

void set_term_budget(std::size_t max_terms) { g_term_budget = max_terms; }
std::size_t term_budget() { return g_term_budget; }

Rat bracket_lambda(const Tensor<Rat>& Phi, const Partition& lambda, int p) {
  return chi_apply(lambda, bracket(Phi, p), p);
}

}  // namespace extensor
