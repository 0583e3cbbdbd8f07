#pragma once

#include <stdexcept>
#include <vector>

namespace preperm {

inline long long factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial: out of range");
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// P(n, m) = n! / (n-m)!
inline long long falling_factorial(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("falling_factorial: out of range");
  long long p = 1;
  for (int i = n - m + 1; i <= n; ++i) p *= i;
  return p;
}

}  // namespace preperm
