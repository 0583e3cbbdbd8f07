#pragma once
// Euler characteristics, Betti numbers three independent ways, and Poincare
// polynomials of the stage-k spaces X_k (dimension n-1) and of the
// associated Hessenberg spaces.
//
//  * descents:  beta_{2i} counts (k+1)-permutations of [n] with i descents,
//    where a descent is a_j > a_{j+1} or a > a_1 for a in the unused set.
//  * recursion: H*(X_k) = H*(P^{n-1}) (+) sum over 1<=j<=k, |alpha|=j,
//    1<=i<=n-j-1 of H*(X^{j-1}) shifted up by 2i, X^d the full stage
//    (d = k boundary) space of dimension d.
//  * codes:     beta_{2i} counts codes of length n, mu >= n-k, ind = i.

#include <stdexcept>
#include <vector>

#include "codes.hpp"
#include "intmath.hpp"
#include "tpoly.hpp"

namespace preperm {

struct BettiTable {
  int n = 0;
  int k = 0;
  std::vector<long long> betti;  // beta_0, beta_2, ..., beta_{2(n-1)}

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

inline void require_stage(int n, int k) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (k < 0 || k > n - 2) throw std::invalid_argument("k out of range 0..n-2");
}

inline long long euler_characteristic(int n, int k) {
  require_stage(n, k);
  return falling_factorial(n, k + 1);
}

inline BettiTable betti_via_descents(int n, int k) {
  require_stage(n, k);
  std::vector<long long> b(n, 0);
  std::vector<int> word;
  word.reserve(k + 1);
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(word.size()) == k + 1) {
      int d = 0;
      for (std::size_t j = 0; j + 1 < word.size(); ++j)
        if (word[j] > word[j + 1]) ++d;
      for (int a = word.front() + 1; a <= n; ++a)
        if (!used[a]) ++d;
      ++b[d];
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      word.push_back(v);
      self(self);
      word.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return BettiTable{n, k, std::move(b)};
}

inline TPoly stage_poincare_poly(int n, int k);

// Poincare polynomial of the full space of complex dimension d
inline TPoly permutohedral_poincare(int d) {
  if (d < 0) throw std::invalid_argument("negative dimension");
  if (d == 0) return TPoly::one();
  return stage_poincare_poly(d + 1, d - 1);
}

inline TPoly stage_poincare_poly(int n, int k) {
  require_stage(n, k);
  TPoly p = q_int(n);
  for (int j = 1; j <= k; ++j) {
    const TPoly shifts = TPoly::t() * q_int(n - j - 1);  // t + t^2 + ... + t^{n-j-1}
    p += binomial(n, j) * (shifts * permutohedral_poincare(j - 1));
  }
  return p;
}

inline BettiTable betti_via_recursion(int n, int k) {
  const TPoly p = stage_poincare_poly(n, k);
  std::vector<long long> b(n, 0);
  for (int i = 0; i < n; ++i) b[i] = p.coeff(i);
  return BettiTable{n, k, std::move(b)};
}

inline BettiTable betti_via_codes(int n, int k) {
  require_stage(n, k);
  std::vector<long long> b(n, 0);
  for (const Code& c : enumerate_codes(n, n - k)) ++b[c.ind()];
  return BettiTable{n, k, std::move(b)};
}

inline TPoly poincare_poly(int n, int k) { return stage_poincare_poly(n, k); }

// rank count of the free module H*(Hess) over H*(X_k): the fiber contributes
// the q-factorial [n-k-1]_t!
inline TPoly hess_poincare(int n, int k) {
  if (n < 4 || k < 1 || k > n - 3)
    throw std::invalid_argument("hess_poincare: need 1 <= k <= n-3");
  return q_factorial(n - k - 1) * poincare_poly(n, k);
}

}  // namespace preperm
