#pragma once

#include <string>
#include <vector>

#include "extensor/rational.hpp"

namespace extensor {

// A partition: weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  int weight() const;               // sum of parts
  int rows() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[i]; }  // 0-based
  // Part with zero-padding beyond the last row.
  int part(int i) const { return i < rows() ? parts_[i] : 0; }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  // z_lambda = prod k^{m_k} m_k! (order of the centralizer of the class).
  Rat z() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string to_string() const;  // "2,1"
  static Partition parse(const std::string& s);

  // All partitions of p, deterministic (decreasing lexicographic) order.
  static std::vector<Partition> all(int p);

 private:
  std::vector<int> parts_;
};

}  // namespace extensor
