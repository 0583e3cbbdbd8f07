#pragma once
// Characteristic series of the dot action and chromatic quasisymmetric
// functions. A(n,k) collects ch H^{2j}(X_k^{n-1}) t^j and satisfies
//
//   A(n,k) = h_n [n]_t + sum_{i=0}^{k-1} h_{n-1-i} A_i t [n-i-2]_t,
//
// A_i the series of the full space of dimension i (A_0 = h_1). The same
// series falls out of the code orbits (Frobenius characteristic of a
// permutation module is the h of its stabilizer type), and omega of the
// lollipop graph's chromatic quasisymmetric function reproduces
// [n-k-1]_t! * A(n,k), the Hessenberg characteristic series.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "betti.hpp"
#include "codes.hpp"
#include "symfunc.hpp"
#include "tpoly.hpp"

namespace preperm {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted, unique

  friend bool operator==(const Graph&, const Graph&) = default;
};

inline Graph path_graph(int m) {
  if (m < 1) throw std::invalid_argument("path_graph: need m >= 1");
  Graph g;
  g.n = m;
  for (int i = 1; i < m; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

inline Graph complete_graph(int m) {
  if (m < 1) throw std::invalid_argument("complete_graph: need m >= 1");
  Graph g;
  g.n = m;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) g.edges.emplace_back(i, j);
  return g;
}

// Edges {i,j} with i < j <= h_k(i): a path 1-2-...-(k+1) glued to the
// complete graph on {k+1,...,n}. k = 0 degenerates to K_n.
inline Graph lollipop_graph(int n, int k) {
  if (n < 2 || k < 0 || k > n - 2)
    throw std::invalid_argument("lollipop_graph: need 0 <= k <= n-2");
  Graph g;
  g.n = n;
  for (int i = 1; i <= k; ++i) g.edges.emplace_back(i, i + 1);
  for (int i = k + 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.edges.emplace_back(i, j);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline SymSeries series_a(int n, int k);

// A_d, the series of the full space of dimension d
inline SymSeries perm_series(int d) {
  if (d < 0) throw std::invalid_argument("perm_series: need d >= 0");
  return d == 0 ? sym_term(SymBasis::h, {1}) : series_a(d + 1, d - 1);
}

inline SymSeries series_a(int n, int k) {
  if (n == 1 && k == 0) return sym_term(SymBasis::h, {1});  // the S_1 base case
  require_stage(n, k);
  SymSeries s = q_int(n) * sym_term(SymBasis::h, {n});
  for (int i = 0; i < k; ++i) {
    const TPoly shifts = TPoly::t() * q_int(n - i - 2);
    s += shifts * (sym_term(SymBasis::h, {n - 1 - i}) * perm_series(i));
  }
  return s;
}

// Frobenius characteristic read off the code orbits with mu >= n-k
inline SymSeries ch_from_codes(int n, int k) {
  require_stage(n, k);
  SymSeries s;
  s.basis = SymBasis::h;
  for (const OrbitDatum& od : orbits(n, n - k)) {
    Partition lam = od.stabilizer_type;
    s.terms[lam] += TPoly::t(od.representative.ind());
  }
  s.normalize();
  return s;
}

// X_G(x,t) = sum over proper colorings kappa: V -> {1..n} of t^{asc} x_kappa,
// asc = #{edges {i,j}, i<j, kappa(i) < kappa(j)}. Exact, n variables.
inline MonomialExpansion csf_bruteforce(const Graph& g, bool t_graded = true) {
  const int n = g.n;
  if (n > 7) throw std::invalid_argument("coloring enumeration is capped at n <= 7");
  MonomialExpansion out;
  std::vector<int> kappa(n, 1);
  while (true) {
    bool proper = true;
    int asc = 0;
    for (const auto& [i, j] : g.edges) {
      if (kappa[i - 1] == kappa[j - 1]) { proper = false; break; }
      if (kappa[i - 1] < kappa[j - 1]) ++asc;
    }
    if (proper) {
      std::vector<int> expo(n, 0);
      for (int v : kappa) ++expo[v - 1];
      out[expo] += TPoly::t(t_graded ? asc : 0);
    }
    int pos = n - 1;
    while (pos >= 0 && kappa[pos] == n) kappa[pos--] = 1;
    if (pos < 0) break;
    ++kappa[pos];
  }
  return out;
}

// X of the path on m vertices: omega of the full series of dimension m-1
inline SymSeries path_csf(int m) {
  if (m < 1) throw std::invalid_argument("path_csf: need m >= 1");
  return omega(perm_series(m - 1));
}

// X_{L_{n-k,k}}(x,t) = [n-k-1]_t!([n]_t e_n
//                        + sum_{i=0}^{k-1} t [n-k+i-1]_t X_{P_{k-i}} e_{n-k+i})
inline SymSeries csf_lollipop(int n, int k) {
  if (n < 4 || k < 1 || k > n - 3)
    throw std::invalid_argument("csf_lollipop: need 1 <= k <= n-3");
  SymSeries inner = q_int(n) * sym_term(SymBasis::e, {n});
  for (int i = 0; i < k; ++i) {
    const TPoly shifts = TPoly::t() * q_int(n - k + i - 1);
    inner += shifts * (path_csf(k - i) * sym_term(SymBasis::e, {n - k + i}));
  }
  return q_factorial(n - k - 1) * inner;
}

inline bool verify_identity(int n, int k) {
  return omega(csf_lollipop(n, k)) == q_factorial(n - k - 1) * series_a(n, k);
}

// sum_j ch H^{2j}(Hess) t^j = [n-k-1]_t! * A(n,k)
inline SymSeries hess_char_series(int n, int k) {
  if (n < 4 || k < 1 || k > n - 3)
    throw std::invalid_argument("hess_char_series: need 1 <= k <= n-3");
  return q_factorial(n - k - 1) * series_a(n, k);
}

}  // namespace preperm
