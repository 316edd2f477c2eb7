#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extensor/partition.hpp"

namespace extensor {

// A standard tableau: filling of the Young diagram of `shape` by 1..p,
// strictly increasing along rows and down columns.
class Tableau {
 public:
  Tableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.weight(); }
  int entry(int r, int c) const { return rows_[r][c]; }  // 0-based cell

  // (row, col) of the cell holding k, 0-based.
  std::pair<int, int> cell_of(int k) const;
  // Content c_T(k) = col - row of the cell holding k (0-based difference).
  int content(int k) const;

  // Swaps entries i and i+1; nullopt when the result is not standard.
  std::optional<Tableau> apply_adjacent(int i) const;

  // Entries read row by row, used as the deterministic sort key.
  std::vector<int> row_word() const;

  bool operator==(const Tableau& o) const { return shape_ == o.shape_ && rows_ == o.rows_; }
  bool operator<(const Tableau& o) const;

  std::string to_string() const;  // "[1 3 / 2]"

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

// All standard tableaux of shape lambda, sorted by row word (lexicographic).
std::vector<Tableau> std_tableaux(const Partition& lambda);

// Content multiset of a diagram: j - i over cells (i,j), row by row.
std::vector<int> diagram_contents(const Partition& lambda);

}  // namespace extensor
