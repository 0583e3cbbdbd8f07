#pragma once
// Exact-rational checks for Krylov flags under a diagonal operator S with
// distinct entries. The rank of [v, Sv, ..., S^{m-1}v] is min(m, #nonzero
// coordinates of v): Vandermonde independence one way, the coefficients of
// prod (z - s_i) over the support the other. Flags built from the Krylov
// spans satisfy the one-step Hessenberg condition S V_i <= V_{i+1} by
// construction, and dim<V_k u S V_k> drops to k exactly on support size k.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rational.hpp"
#include "rng.hpp"

namespace preperm {

struct DiagonalOperator {
  RatVec entries;

  int n() const { return static_cast<int>(entries.size()); }

  RatVec apply(const RatVec& v) const {
    if (v.size() != entries.size()) throw std::invalid_argument("apply: size mismatch");
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = entries[i] * v[i];
    return out;
  }

  static DiagonalOperator standard(int n) {
    DiagonalOperator s;
    s.entries.resize(n);
    for (int i = 0; i < n; ++i) s.entries[i] = i + 1;
    return s;
  }
};

inline DiagonalOperator make_diagonal(RatVec entries) {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (entries[i] == entries[j])
        throw std::invalid_argument("diagonal entries must be pairwise distinct");
  return DiagonalOperator{std::move(entries)};
}

// ranks[m] = rank of the n x m matrix [v, Sv, ..., S^{m-1}v], m = 0..m_max
inline std::vector<int> krylov_rank_profile(const DiagonalOperator& S, const RatVec& v,
                                            int m_max) {
  if (static_cast<int>(v.size()) != S.n()) throw std::invalid_argument("vector size mismatch");
  if (m_max < 0 || m_max > S.n()) throw std::invalid_argument("depth out of range");
  std::vector<int> ranks{0};
  Echelon ech(S.n());
  RatVec cur = v;
  for (int m = 1; m <= m_max; ++m) {
    ech.add(cur);
    ranks.push_back(ech.rank());
    if (m < m_max) cur = S.apply(cur);
  }
  return ranks;
}

inline int krylov_rank(const DiagonalOperator& S, const RatVec& v, int m) {
  return krylov_rank_profile(S, v, m).back();
}

struct FlagSpec {
  int n = 0;
  std::vector<RatVec> basis;  // V_i = span of the first i vectors

  int length() const { return static_cast<int>(basis.size()); }
};

inline FlagSpec build_krylov_flag(const DiagonalOperator& S, const RatVec& v, int depth) {
  if (depth < 1 || depth > S.n()) throw std::invalid_argument("depth out of range");
  if (krylov_rank(S, v, depth) != depth)
    throw std::invalid_argument("Krylov vectors are dependent: degenerate flag");
  FlagSpec f;
  f.n = S.n();
  RatVec cur = v;
  for (int i = 0; i < depth; ++i) {
    f.basis.push_back(cur);
    if (i + 1 < depth) cur = S.apply(cur);
  }
  return f;
}

// S(V_i) <= V_{h(i)} for every i up to the flag length. h(i) = n is trivially
// satisfied; a target strictly between the flag length and n is undecidable
// from the data and rejected.
inline bool check_hessenberg(const FlagSpec& flag, const DiagonalOperator& S,
                             const std::vector<int>& h) {
  const int d = flag.length();
  const int n = flag.n;
  if (n != S.n()) throw std::invalid_argument("flag and operator size mismatch");
  if (static_cast<int>(h.size()) < d) throw std::invalid_argument("h shorter than the flag");
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] < static_cast<int>(i) + 1 || h[i] > n)
      throw std::invalid_argument("not a Hessenberg function: need i <= h(i) <= n");
    if (i + 1 < h.size() && h[i] > h[i + 1])
      throw std::invalid_argument("not a Hessenberg function: must be non-decreasing");
  }
  {
    Echelon ech(n);
    for (const RatVec& b : flag.basis)
      if (!ech.add(b)) throw std::invalid_argument("basis vectors do not form a flag");
  }
  for (int i = 1; i <= d; ++i) {
    const int target = h[i - 1];
    if (target >= n) continue;
    if (target > d)
      throw std::invalid_argument("h refers to a space beyond the flag");
    Echelon ech(n);
    for (int b = 0; b < target; ++b) ech.add(flag.basis[b]);
    for (int b = 0; b < i; ++b)
      if (!ech.contains(S.apply(flag.basis[b]))) return false;
  }
  return true;
}

inline RatVec random_vector_with_support(TrialRng& rng, int n, int support_size) {
  RatVec v(n, Rational(0));
  for (int i : rng.sample(n, support_size)) v[i - 1] = rng.nonzero_rational();
  return v;
}

struct ForgetfulReport {
  int n = 0;
  int k = 0;
  int trials = 0;
  long long violations = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const ForgetfulReport&, const ForgetfulReport&) = default;
};

// dim<V_k u S V_k> is k or k+1, and k exactly when v has support size k
inline ForgetfulReport forgetful_dim_check(const DiagonalOperator& S, int k, int trials,
                                           std::uint64_t seed) {
  const int n = S.n();
  if (k < 1 || k > n - 1) throw std::invalid_argument("k out of range 1..n-1");
  ForgetfulReport rep{n, k, trials, 0, seed};
  for (int trial = 0; trial < trials; ++trial) {
    TrialRng rng(seed, static_cast<std::uint64_t>(trial));
    const int support = k + rng.range(0, n - k);
    const RatVec v = random_vector_with_support(rng, n, support);
    const auto ranks = krylov_rank_profile(S, v, k + 1);
    const int joined = ranks[k + 1];
    const bool ok = ranks[k] == k && (support == k ? joined == k : joined == k + 1);
    if (!ok) ++rep.violations;
  }
  return rep;
}

struct LemmaReport {
  int n = 0;
  int trials = 0;
  long long checks = 0;
  long long violations = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const LemmaReport&, const LemmaReport&) = default;
};

// krylov_rank(S, v, m) == min(m, support size) across controlled zero patterns
inline LemmaReport krylov_lemma_check(const DiagonalOperator& S, int trials,
                                      std::uint64_t seed) {
  const int n = S.n();
  LemmaReport rep{n, trials, 0, 0, seed};
  for (int support = 0; support <= n; ++support) {
    for (int trial = 0; trial < trials; ++trial) {
      TrialRng rng(seed, (static_cast<std::uint64_t>(support) << 32) + trial);
      const RatVec v = random_vector_with_support(rng, n, support);
      const auto ranks = krylov_rank_profile(S, v, n);
      for (int m = 1; m <= n; ++m) {
        ++rep.checks;
        if (ranks[m] != std::min(m, support)) ++rep.violations;
      }
    }
  }
  return rep;
}

}  // namespace preperm
