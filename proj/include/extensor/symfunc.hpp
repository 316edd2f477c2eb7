#pragma once

#include <vector>

#include "extensor/partition.hpp"
#include "extensor/rational.hpp"

namespace extensor {

// Semistandard tableaux of shape lambda with entries in 1..n (rows weakly
// increasing, columns strictly increasing), as flat row-by-row fillings.
std::vector<std::vector<int>> semistandard_tableaux(const Partition& lambda, int n);
// Reverse semistandard: rows weakly decreasing, columns strictly decreasing.
std::vector<std::vector<int>> reverse_semistandard_tableaux(const Partition& lambda, int n);

enum class SymKind { Schur, Monomial, PowerSum };

// Evaluation at the given values (schur via the tableau sum).
Rat sym_eval(SymKind kind, const Partition& lambda, const std::vector<Rat>& values);

// Kostka number K_{lambda,mu}: semistandard tableaux of shape lambda and
// content mu.
long kostka(const Partition& lambda, const Partition& mu);

}  // namespace extensor
