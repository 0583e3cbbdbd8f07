#pragma once
// Deterministic randomness for the verification suites. Every draw is
// derived from (seed, trial index), so trials are order independent and a
// fixed seed reproduces the run byte for byte. mt19937_64 and the rejection
// sampler below are fully specified, so results are platform stable.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace preperm {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial)
      : eng_(splitmix64(splitmix64(seed) ^ trial)) {}

  std::uint64_t next() { return eng_(); }

  // uniform in [0, bound), unbiased via rejection
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("TrialRng::below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return next() & 1u; }

  // generic point coordinate: odd numerator and denominator, both <= 997,
  // so sampled points avoid the coordinate walls of the fans
  Rational generic_coordinate() {
    long long num = 2 * static_cast<long long>(below(499)) + 1;
    const long long den = 2 * static_cast<long long>(below(499)) + 1;
    if (coin()) num = -num;
    return Rational(num, den);
  }

  // nonnegative combination weight, zero allowed
  Rational cone_weight() {
    return Rational(static_cast<long long>(below(21)),
                    2 * static_cast<long long>(below(10)) + 1);
  }

  Rational nonzero_rational(long long bound = 1000) {
    long long num = 1 + static_cast<long long>(below(static_cast<std::uint64_t>(bound)));
    const long long den = 1 + static_cast<long long>(below(static_cast<std::uint64_t>(bound)));
    if (coin()) num = -num;
    return Rational(num, den);
  }

  // distinct elements of 1..n, via partial Fisher-Yates
  std::vector<int> sample(int n, int count) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    for (int i = 0; i < count; ++i) {
      const int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
  }

  std::vector<int> permutation(int n) { return sample(n, n); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace preperm
