#include "extensor/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace extensor {

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw std::invalid_argument("Tableau: row count mismatch");
  int p = shape_.weight();
  std::vector<char> seen(p, 0);
  for (int r = 0; r < shape_.rows(); ++r) {
    if (static_cast<int>(rows_[r].size()) != shape_[r])
      throw std::invalid_argument("Tableau: row length mismatch");
    for (int c = 0; c < shape_[r]; ++c) {
      int v = rows_[r][c];
      if (v < 1 || v > p || seen[v - 1]) throw std::invalid_argument("Tableau: not a bijection");
      seen[v - 1] = 1;
      if (c > 0 && rows_[r][c - 1] >= v) throw std::invalid_argument("Tableau: row not increasing");
      if (r > 0 && rows_[r - 1][c] >= v)
        throw std::invalid_argument("Tableau: column not increasing");
    }
  }
}

std::pair<int, int> Tableau::cell_of(int k) const {
  for (int r = 0; r < shape_.rows(); ++r)
    for (int c = 0; c < shape_[r]; ++c)
      if (rows_[r][c] == k) return {r, c};
  throw std::out_of_range("Tableau::cell_of: entry out of range");
}

int Tableau::content(int k) const {
  auto [r, c] = cell_of(k);
  return c - r;
}

std::optional<Tableau> Tableau::apply_adjacent(int i) const {
  auto [r1, c1] = cell_of(i);
  auto [r2, c2] = cell_of(i + 1);
  if (r1 == r2 || c1 == c2) return std::nullopt;  // swap breaks standardness
  auto rows = rows_;
  std::swap(rows[r1][c1], rows[r2][c2]);
  try {
    return Tableau(shape_, std::move(rows));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::vector<int> Tableau::row_word() const {
  std::vector<int> w;
  for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
  return w;
}

bool Tableau::operator<(const Tableau& o) const {
  if (!(shape_ == o.shape_)) return shape_ < o.shape_;
  return row_word() < o.row_word();
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) os << " / ";
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) os << ' ';
      os << rows_[r][c];
    }
  }
  os << ']';
  return os.str();
}

static void fill_tableaux(const Partition& shape, int next, std::vector<std::vector<int>>& rows,
                          std::vector<int>& filled, std::vector<Tableau>& out) {
  int p = shape.weight();
  if (next > p) {
    out.push_back(Tableau(shape, rows));
    return;
  }
  for (int r = 0; r < shape.rows(); ++r) {
    int c = filled[r];
    if (c >= shape[r]) continue;
    if (r > 0 && filled[r - 1] <= c) continue;  // cell above must be filled
    rows[r][c] = next;
    ++filled[r];
    fill_tableaux(shape, next + 1, rows, filled, out);
    --filled[r];
  }
}

std::vector<Tableau> std_tableaux(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < lambda.rows(); ++r) rows.push_back(std::vector<int>(lambda[r], 0));
  std::vector<int> filled(lambda.rows(), 0);
  std::vector<Tableau> out;
  fill_tableaux(lambda, 1, rows, filled, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> diagram_contents(const Partition& lambda) {
  std::vector<int> cs;
  for (int r = 0; r < lambda.rows(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cs.push_back(c - r);
  return cs;
}

}  // namespace extensor
