#include "extensor/matrix.hpp"

#include <sstream>

namespace extensor {

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: size mismatch in product");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (rat_is_zero(v)) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& w = o.at(k, j);
        if (!rat_is_zero(w)) r.at(i, j) += v * w;
      }
    }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: size mismatch");
  RatMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: size mismatch");
  RatMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

RatMatrix RatMatrix::scale(const Rat& c) const {
  RatMatrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

Rat RatMatrix::trace() const {
  Rat t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!rat_is_zero(x)) return false;
  return true;
}

bool RatMatrix::is_identity() const { return is_scalar(Rat(1)); }

bool RatMatrix::is_scalar(const Rat& c) const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? c : Rat(0))) return false;
  return true;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("RatMatrix::inverse: not square");
  int n = rows_;
  RatMatrix a = *this, inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!rat_is_zero(a.at(r, col))) { piv = r; break; }
    if (piv < 0) throw std::invalid_argument("RatMatrix::inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rat d = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || rat_is_zero(a.at(r, col))) continue;
      Rat f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << rat_str(at(i, j));
    }
  }
  os << "]";
  return os.str();
}

}  // namespace extensor
