#pragma once
// The stage-k fan two independent ways, and the consistency checks between
// them. Route one lists the cones of all valid chains; route two starts from
// the fan of P^{n-1} (maximal cones sigma_alpha, |alpha| = n-1) and star
// subdivides at the ray e_beta for |beta| = n-1, n-2, ..., n-k, mirroring
// the blowups of the coordinate subspaces of dimensions 0..k-1.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "chain.hpp"
#include "cone.hpp"
#include "rng.hpp"

namespace preperm {

using GeneratorSet = std::vector<std::vector<long long>>;

inline std::vector<GeneratorSet> fan_from_chains(int n, int k) {
  std::vector<GeneratorSet> out;
  for (const Chain& c : enumerate_chains(n, k, n - 1))
    out.push_back(canonical_generators(cone_of_chain(c)));
  std::sort(out.begin(), out.end());
  return out;
}

// Star subdivision at a ray v: cones not containing v survive; a cone
// containing v is replaced by cone(v, F) for each facet F not containing v.
// With independent generators, v lies on the facet missing g exactly when
// the coefficient of g in v vanishes, so one new cone is formed per
// positive-coefficient generator by dropping it and adjoining v.
inline std::vector<GeneratorSet> build_fan_by_subdivision(int n, int k) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (k < 0 || k > n - 2) throw std::invalid_argument("k out of range 0..n-2");
  const Subset full = full_set(n);

  std::vector<GeneratorSet> cones;
  for (int i = 1; i <= n; ++i) {
    GeneratorSet g;
    for (int j : subset_elements(full & ~element_bit(i)))
      g.push_back(ray_vector(element_bit(j), n));
    cones.push_back(g);
  }

  for (int size = n - 1; size >= n - k; --size) {
    for (Subset beta = 1; beta < full; ++beta) {
      if (subset_size(beta) != size) continue;
      const auto v = ray_vector(beta, n);
      const auto vq = to_rational(v);
      std::vector<GeneratorSet> next;
      for (const auto& g : cones) {
        const auto coords = cone_coordinates(Cone{n, g}, vq);
        bool inside = coords.has_value();
        if (inside)
          for (const Rational& c : *coords)
            if (c < 0) { inside = false; break; }
        if (!inside) {
          next.push_back(g);
          continue;
        }
        for (std::size_t idx = 0; idx < g.size(); ++idx) {
          if ((*coords)[idx] <= 0) continue;
          GeneratorSet h;
          h.reserve(g.size());
          for (std::size_t j = 0; j < g.size(); ++j)
            if (j != idx) h.push_back(g[j]);
          h.push_back(v);
          next.push_back(std::move(h));
        }
      }
      cones = std::move(next);
    }
  }

  for (auto& g : cones) std::sort(g.begin(), g.end());
  std::sort(cones.begin(), cones.end());
  return cones;
}

struct FanReport {
  int n = 0;
  int k = 0;
  long long maximal_cone_count = 0;
  bool simplicial_ok = false;
  bool completeness_ok = false;
  bool intersection_ok = false;
  bool star_ok = false;
  std::uint64_t seed = 0;
  int trials = 0;

  bool all_ok() const { return simplicial_ok && completeness_ok && intersection_ok && star_ok; }
  friend bool operator==(const FanReport&, const FanReport&) = default;
};

// Exhaustive check of the ordering condition: tau_C contained in sigma_C'
// forces C' >= C, and dim(tau_C) equals the ascent count. Containment is
// tested generator by generator with exact membership.
inline bool star_condition_check(int n, int k) {
  std::vector<Chain> maximal = enumerate_chains(n, k, n - 1);
  std::sort(maximal.begin(), maximal.end(),
            [](const Chain& a, const Chain& b) { return compare_chains(a, b) < 0; });
  std::vector<Cone> cones;
  cones.reserve(maximal.size());
  for (const auto& c : maximal) cones.push_back(cone_of_chain(c));
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    const Chain tau = tau_chain(maximal[i]);
    const Cone tco = cone_of_chain(tau);
    if (static_cast<int>(tco.generators.size()) != count_ascents(maximal[i])) return false;
    for (std::size_t j = 0; j < maximal.size(); ++j) {
      bool contained = true;
      for (const auto& g : tco.generators)
        if (!cone_membership(to_rational(g), cones[j])) { contained = false; break; }
      if (contained && compare_chains(maximal[j], maximal[i]) < 0) return false;
    }
  }
  return true;
}

inline FanReport verify_fan(int n, int k, int trials = 500, std::uint64_t seed = 1) {
  FanReport rep;
  rep.n = n;
  rep.k = k;
  rep.seed = seed;
  rep.trials = trials;

  const auto chains = enumerate_chains(n, k);
  rep.simplicial_ok = true;
  for (const Chain& c : chains) {
    const Cone co = cone_of_chain(c);
    if (cone_rank(co) != static_cast<int>(co.generators.size())) rep.simplicial_ok = false;
  }

  std::vector<Chain> maximal;
  for (const auto& c : chains)
    if (is_maximal_chain(c)) maximal.push_back(c);
  std::sort(maximal.begin(), maximal.end(),
            [](const Chain& a, const Chain& b) { return compare_chains(a, b) < 0; });
  rep.maximal_cone_count = static_cast<long long>(maximal.size());
  if (!rep.simplicial_ok) return rep;

  const int D = n - 1;
  const std::size_t M = maximal.size();
  std::vector<Cone> cones(M);
  std::vector<RatMat> inv(M);  // exact inverses of the generator matrices
  for (std::size_t i = 0; i < M; ++i) {
    cones[i] = cone_of_chain(maximal[i]);
    RatMat a(D, RatVec(D));
    for (int r = 0; r < D; ++r)
      for (int c = 0; c < D; ++c) a[r][c] = cones[i].generators[c][r];
    inv[i] = rat_inverse(a);
  }

  auto classify = [&](std::size_t idx, const RatVec& pt, bool& member, bool& boundary) {
    member = true;
    boundary = false;
    for (const Rational& c : mat_vec(inv[idx], pt)) {
      if (c < 0) { member = false; return; }
      if (c == 0) boundary = true;
    }
  };

  // completeness: a generic rational point lies in exactly one maximal cone
  rep.completeness_ok = true;
  for (int trial = 0; trial < trials && rep.completeness_ok; ++trial) {
    TrialRng rng(seed, static_cast<std::uint64_t>(trial));
    bool resolved = false;
    for (int attempt = 0; attempt < 64 && !resolved; ++attempt) {
      RatVec pt(D);
      for (int i = 0; i < D; ++i) pt[i] = rng.generic_coordinate();
      int hits = 0;
      bool on_boundary = false;
      for (std::size_t i = 0; i < M; ++i) {
        bool member = false, boundary = false;
        classify(i, pt, member, boundary);
        if (member) { ++hits; on_boundary |= boundary; }
      }
      if (hits == 0) { rep.completeness_ok = false; break; }  // a gap in the fan
      resolved = hits == 1 && !on_boundary;
      // otherwise: boundary hit, resample from the same trial stream
    }
    if (!resolved) rep.completeness_ok = false;
  }

  // intersections: points of sigma_{C∩C'} lie in both cones, and points of
  // sigma_C that pass the sigma_C' test pass the sigma_{C∩C'} test
  rep.intersection_ok = true;
  for (int trial = 0; trial < trials && rep.intersection_ok; ++trial) {
    TrialRng rng(seed, (std::uint64_t{1} << 32) + static_cast<std::uint64_t>(trial));
    const std::size_t i = static_cast<std::size_t>(rng.below(M));
    const std::size_t j = static_cast<std::size_t>(rng.below(M));
    const Chain meet = intersect_chains(maximal[i], maximal[j]);
    const Cone mco = cone_of_chain(meet);

    RatVec pt(D, Rational(0));
    for (const auto& g : mco.generators) {
      const Rational w = rng.cone_weight();
      for (int r = 0; r < D; ++r) pt[r] += w * g[r];
    }
    bool mi = false, mj = false, bd = false;
    classify(i, pt, mi, bd);
    classify(j, pt, mj, bd);
    if (!mi || !mj) { rep.intersection_ok = false; break; }

    RatVec pt2(D, Rational(0));
    for (const auto& g : cones[i].generators) {
      if (!rng.coin()) continue;
      const Rational w = rng.cone_weight() + 1;
      for (int r = 0; r < D; ++r) pt2[r] += w * g[r];
    }
    bool in_j = false;
    classify(j, pt2, in_j, bd);
    if (in_j && !cone_membership(pt2, mco)) { rep.intersection_ok = false; break; }
  }

  rep.star_ok = star_condition_check(n, k);
  return rep;
}

}  // namespace preperm
