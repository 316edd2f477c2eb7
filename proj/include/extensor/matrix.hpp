#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "extensor/rational.hpp"

namespace extensor {

// Dense exact-rational matrix.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scale(const Rat& c) const;
  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  Rat trace() const;
  RatMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_scalar(const Rat& c) const;  // c * identity

  // Gauss-Jordan inverse; throws on singular input.
  RatMatrix inverse() const;

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

}  // namespace extensor
