#pragma once
// Univariate polynomials in t with integer coefficients: Poincare
// polynomials, q-integers [m]_t = 1 + t + ... + t^{m-1} and q-factorials.

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace preperm {

struct TPoly {
  std::vector<long long> c;  // ascending powers of t, no trailing zeros

  TPoly() = default;
  TPoly(std::initializer_list<long long> v) : c(v) { trim(); }
  explicit TPoly(std::vector<long long> v) : c(std::move(v)) { trim(); }

  static TPoly zero() { return TPoly{}; }
  static TPoly one() { return TPoly{1}; }
  static TPoly t(int power = 1) {
    TPoly p;
    p.c.assign(power + 1, 0);
    p.c[power] = 1;
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  long long coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0;
  }
  long long at_one() const {
    long long s = 0;
    for (long long v : c) s += v;
    return s;
  }
  bool palindromic() const {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != c[c.size() - 1 - i]) return false;
    return true;
  }

  TPoly& operator+=(const TPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }

  TPoly& operator-=(const TPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
  }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }

  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly{};
    TPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.trim();
    return out;
  }
  friend TPoly operator*(long long s, TPoly a) {
    for (long long& v : a.c) v *= s;
    a.trim();
    return a;
  }

  friend bool operator==(const TPoly&, const TPoly&) = default;
  friend auto operator<=>(const TPoly&, const TPoly&) = default;

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
      const long long v = c[i];
      if (v == 0) continue;
      if (!out.empty()) out += v > 0 ? " + " : " - ";
      else if (v < 0) out += "-";
      const long long a = v < 0 ? -v : v;
      if (i == 0) {
        out += std::to_string(a);
      } else {
        if (a != 1) out += std::to_string(a) + "*";
        out += i == 1 ? "t" : "t^" + std::to_string(i);
      }
    }
    return out;
  }
};

inline TPoly q_int(int m) {
  if (m < 0) throw std::invalid_argument("q_int: need m >= 0");
  TPoly p;
  p.c.assign(m, 1);
  return p;
}

inline TPoly q_factorial(int m) {
  if (m < 0) throw std::invalid_argument("q_factorial: need m >= 0");
  TPoly p = TPoly::one();
  for (int j = 1; j <= m; ++j) p = p * q_int(j);
  return p;
}

}  // namespace preperm
