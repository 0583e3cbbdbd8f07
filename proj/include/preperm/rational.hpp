#pragma once
// Exact scalars over Q and the few dense kernels the geometry needs:
// rank, linear solve, inverse. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace preperm {

using Rational = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row major

inline int rat_rank(RatMat m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

// Row echelon form that can be grown one vector at a time. Each stored row
// is already reduced against the earlier ones, so pivots are distinct and
// reduce() can run in insertion order.
class Echelon {
 public:
  explicit Echelon(int width) : width_(width) {}

  RatVec reduce(RatVec v) const {
    if (static_cast<int>(v.size()) != width_)
      throw std::invalid_argument("Echelon: vector width mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int p = pivots_[r];
      if (v[p] == 0) continue;
      const Rational f = v[p] / rows_[r][p];
      for (int c = p; c < width_; ++c) v[c] -= f * rows_[r][c];
    }
    return v;
  }

  bool contains(const RatVec& v) const { return first_nonzero(reduce(v)) < 0; }

  // true if v enlarged the span
  bool add(const RatVec& v) {
    RatVec rem = reduce(v);
    const int p = first_nonzero(rem);
    if (p < 0) return false;
    rows_.push_back(std::move(rem));
    pivots_.push_back(p);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  static int first_nonzero(const RatVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) return static_cast<int>(i);
    return -1;
  }

  int width_;
  std::vector<RatVec> rows_;
  std::vector<int> pivots_;
};

inline RatMat rat_inverse(const RatMat& a) {
  const int n = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("rat_inverse: matrix not square");
  RatMat m(n, RatVec(2 * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = a[r][c];
    m[r][n + r] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) throw std::invalid_argument("rat_inverse: matrix is singular");
    std::swap(m[col], m[pivot]);
    const Rational d = m[col][col];
    for (int c = col; c < 2 * n; ++c) m[col][c] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int c = col; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  RatMat inv(n, RatVec(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv[r][c] = m[r][n + c];
  return inv;
}

inline RatVec mat_vec(const RatMat& m, const RatVec& v) {
  RatVec out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (m[r][c] != 0 && v[c] != 0) acc += m[r][c] * v[c];
    out[r] = acc;
  }
  return out;
}

}  // namespace preperm
