#pragma once
// Cones attached to chains, realized in Z^{n-1} with e_n = -(e_1+...+e_{n-1}).
// The ray of a nonempty proper subset alpha is e_alpha = sum_{i in alpha} e_i;
// these vectors are 0/±1 and primitive. sigma_C is generated by e_i for
// i in alpha_0 together with e_{alpha_j} for j >= 1, and is simplicial.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chain.hpp"
#include "rational.hpp"

namespace preperm {

struct Cone {
  int n = 0;
  std::vector<std::vector<long long>> generators;  // vectors in Z^{n-1}

  friend bool operator==(const Cone&, const Cone&) = default;
};

inline std::vector<long long> ray_vector(Subset alpha, int n) {
  if (alpha == 0 || alpha == full_set(n))
    throw std::invalid_argument("rays correspond to nonempty proper subsets");
  std::vector<long long> v(n - 1, 0);
  const long long drop = subset_contains(alpha, n) ? 1 : 0;
  for (int m = 1; m < n; ++m)
    v[m - 1] = (subset_contains(alpha, m) ? 1 : 0) - drop;
  return v;
}

inline Cone cone_of_chain(const Chain& c) {
  Cone co;
  co.n = c.n;
  for (int i : subset_elements(c.alpha0))
    co.generators.push_back(ray_vector(element_bit(i), c.n));
  for (Subset s : c.upper_sets()) co.generators.push_back(ray_vector(s, c.n));
  return co;
}

// Coefficients of `point` in the generators of a simplicial cone, or nullopt
// when the point is outside their span. Exact over Q.
inline std::optional<RatVec> cone_coordinates(const Cone& co, const RatVec& point) {
  const int D = co.n - 1;
  if (static_cast<int>(point.size()) != D)
    throw std::invalid_argument("point has wrong dimension");
  const int d = static_cast<int>(co.generators.size());
  RatMat m(D, RatVec(d + 1));
  for (int r = 0; r < D; ++r) {
    for (int c = 0; c < d; ++c) m[r][c] = co.generators[c][r];
    m[r][d] = point[r];
  }
  int row = 0;
  std::vector<int> pivot_row(d, -1);
  for (int col = 0; col < d; ++col) {
    int pr = -1;
    for (int r = row; r < D; ++r)
      if (m[r][col] != 0) { pr = r; break; }
    if (pr < 0) throw std::invalid_argument("cone generators are linearly dependent");
    std::swap(m[row], m[pr]);
    for (int r = row + 1; r < D; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[row][col];
      for (int c2 = col; c2 <= d; ++c2) m[r][c2] -= f * m[row][c2];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (int r = row; r < D; ++r)
    if (m[r][d] != 0) return std::nullopt;
  RatVec x(d);
  for (int col = d - 1; col >= 0; --col) {
    const int r = pivot_row[col];
    Rational acc = m[r][d];
    for (int c2 = col + 1; c2 < d; ++c2) acc -= m[r][c2] * x[c2];
    x[col] = acc / m[r][col];
  }
  return x;
}

inline bool cone_membership(const RatVec& point, const Cone& co) {
  const auto x = cone_coordinates(co, point);
  if (!x) return false;
  for (const Rational& v : *x)
    if (v < 0) return false;
  return true;
}

inline bool cone_membership(const RatVec& point, const Chain& c) {
  return cone_membership(point, cone_of_chain(c));
}

inline RatVec to_rational(const std::vector<long long>& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

inline int cone_rank(const Cone& co) {
  RatMat m;
  m.reserve(co.generators.size());
  for (const auto& g : co.generators) m.push_back(to_rational(g));
  return rat_rank(std::move(m));
}

// generator list sorted lexicographically, for comparing cones as sets
inline std::vector<std::vector<long long>> canonical_generators(Cone co) {
  std::sort(co.generators.begin(), co.generators.end());
  return std::move(co.generators);
}

}  // namespace preperm
