#pragma once
// Codes: admissible marked sequences (a, f). The sequence a has nonnegative
// entries with positive support exactly {1,...,max(a)}, and the marking f
// picks 1 <= f(j) < m_j(a) for each positive value j (m_j = multiplicity of
// j). Displayed with a hat on the (f(j)+1)-st occurrence of j, e.g.
// 1 2 0 1 2^ 1^ 2 has f(1) = 2, f(2) = 1. A code of length n with
// mu(a) = m_{max}(a) >= n-k indexes a one dimensional piece of the stage-k
// cohomology in degree 2*ind(a,f), ind = sum of the marks; removing all
// occurrences of max(a) peels one blowup level off.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "intmath.hpp"

namespace preperm {

struct Code {
  std::vector<int> a;
  std::vector<int> marks;  // marks[v-1] = f(v), v = 1..max(a)

  int length() const { return static_cast<int>(a.size()); }
  int max_value() const {
    int m = 0;
    for (int v : a) m = std::max(m, v);
    return m;
  }
  std::vector<int> value_counts() const {  // counts[v] = m_v(a)
    std::vector<int> counts(max_value() + 1, 0);
    for (int v : a) ++counts[v];
    return counts;
  }
  int mu() const { return value_counts()[max_value()]; }
  int ind() const {
    int s = 0;
    for (int m : marks) s += m;
    return s;
  }

  friend bool operator==(const Code&, const Code&) = default;
  friend auto operator<=>(const Code&, const Code&) = default;
};

inline bool is_admissible(const std::vector<int>& a) {
  int mx = 0;
  for (int v : a) {
    if (v < 0) return false;
    mx = std::max(mx, v);
  }
  std::vector<bool> seen(mx + 1, false);
  for (int v : a) seen[v] = true;
  for (int v = 1; v <= mx; ++v)
    if (!seen[v]) return false;
  return true;
}

inline void validate_code(const Code& c) {
  if (c.a.empty()) throw std::invalid_argument("code: empty sequence");
  if (!is_admissible(c.a)) throw std::invalid_argument("code: sequence not admissible");
  const auto counts = c.value_counts();
  const int mx = c.max_value();
  if (static_cast<int>(c.marks.size()) != mx)
    throw std::invalid_argument("code: marking size must equal max value");
  for (int v = 1; v <= mx; ++v)
    if (c.marks[v - 1] < 1 || c.marks[v - 1] >= counts[v])
      throw std::invalid_argument("code: mark out of range 1 <= f(v) < m_v");
}

// "1 2 0 1 2^ 1^ 2" with ^ on the (f(v)+1)-st occurrence of v
inline std::string format_code(const Code& c) {
  const int mx = c.max_value();
  std::vector<int> occurrence(mx + 1, 0);
  std::string out;
  for (int v : c.a) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
    if (v > 0 && ++occurrence[v] == c.marks[v - 1] + 1) out += '^';
  }
  return out;
}

// Every code of length n with mu >= min_mu, sequences in lexicographic
// order, markings in odometer order.
inline std::vector<Code> enumerate_codes(int n, int min_mu) {
  if (n < 1 || n > 9) throw std::invalid_argument("code enumeration supports 1 <= n <= 9");
  if (min_mu < 1 || min_mu > n) throw std::invalid_argument("min_mu out of range 1..n");
  std::vector<Code> out;
  std::vector<int> a(n, 0);
  const int vmax = n / 2;  // every positive value needs at least two occurrences
  while (true) {
    [&] {
      if (!is_admissible(a)) return;
      const int mx = *std::max_element(a.begin(), a.end());
      std::vector<int> counts(mx + 1, 0);
      for (int v : a) ++counts[v];
      if (counts[mx] < min_mu) return;
      for (int v = 1; v <= mx; ++v)
        if (counts[v] < 2) return;  // no admissible marking exists
      std::vector<int> marks(mx, 1);
      while (true) {
        out.push_back(Code{a, marks});
        int i = mx - 1;
        while (i >= 0 && marks[i] + 1 >= counts[i + 1]) --i;
        if (i < 0) break;
        ++marks[i];
        for (int j = i + 1; j < mx; ++j) marks[j] = 1;
      }
    }();
    int pos = n - 1;
    while (pos >= 0 && a[pos] == vmax) a[pos--] = 0;
    if (pos < 0) break;
    ++a[pos];
  }
  return out;
}

// Remove every occurrence of max(a); the marking restricts to the remaining
// values. Empty result (all-0 or all-1 input) comes back as nullopt.
inline std::optional<Code> reduce(const Code& c) {
  validate_code(c);
  const int mx = c.max_value();
  Code out;
  for (int v : c.a)
    if (v != mx) out.a.push_back(v);
  if (out.a.empty()) return std::nullopt;
  out.marks = c.marks;
  if (mx >= 1) out.marks.pop_back();
  return out;
}

// One level of the blowup decomposition: a code with mu < n points into the
// summand indexed by (j, alpha, shift) and recurses through reduce().
struct DecodeStep {
  int j = 0;                // length of the reduced code = n - mu
  std::vector<int> alpha;   // positions with a_i < max(a); complement = coordinates set to 0
  int shift = 0;            // f(max): degree shift 2*shift

  friend bool operator==(const DecodeStep&, const DecodeStep&) = default;
  friend auto operator<=>(const DecodeStep&, const DecodeStep&) = default;
};

struct Decoding {
  std::vector<DecodeStep> steps;  // outermost first
  int base_length = 0;            // length of the terminal all-0/all-1 code
  int base_shift = 0;             // its index: degree 2*base_shift in H*(P^{base_length-1})
  int degree = 0;                 // total cohomological degree = 2*ind

  friend bool operator==(const Decoding&, const Decoding&) = default;
  friend auto operator<=>(const Decoding&, const Decoding&) = default;
};

inline Decoding decode(const Code& c) {
  validate_code(c);
  Decoding d;
  d.degree = 2 * c.ind();
  Code cur = c;
  while (cur.mu() < cur.length()) {
    const int mx = cur.max_value();
    DecodeStep st;
    st.j = cur.length() - cur.mu();
    st.shift = cur.marks[mx - 1];
    for (int i = 1; i <= cur.length(); ++i)
      if (cur.a[i - 1] < mx) st.alpha.push_back(i);
    d.steps.push_back(std::move(st));
    cur = *reduce(cur);
  }
  d.base_length = cur.length();
  d.base_shift = cur.ind();
  return d;
}

// (w a)_i = a_{w^{-1}(i)}; the marking travels with occurrence ranks.
inline Code act(const std::vector<int>& w, const Code& c) {
  const int n = c.length();
  if (static_cast<int>(w.size()) != n) throw std::invalid_argument("act: size mismatch");
  std::vector<bool> seen(n + 1, false);
  for (int v : w) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("act: not a permutation");
    seen[v] = true;
  }
  Code out;
  out.a.assign(n, 0);
  for (int i = 1; i <= n; ++i) out.a[w[i - 1] - 1] = c.a[i - 1];
  out.marks = c.marks;
  return out;
}

struct OrbitDatum {
  Code representative;              // lexicographically smallest sequence
  long long orbit_size = 0;
  std::vector<int> stabilizer_type;  // value class sizes, sorted descending

  friend bool operator==(const OrbitDatum&, const OrbitDatum&) = default;
};

// S_n orbits of the code set. The action permutes positions and keeps f, so
// an orbit is exactly "all rearrangements of the multiset a with this f" and
// the stabilizer of the sorted representative is the Young subgroup of the
// value classes.
inline std::vector<OrbitDatum> orbits(int n, int min_mu) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, long long> groups;
  for (const Code& c : enumerate_codes(n, min_mu)) {
    auto key = std::make_pair(c.a, c.marks);
    std::sort(key.first.begin(), key.first.end());
    ++groups[key];
  }
  std::vector<OrbitDatum> out;
  for (const auto& [key, seen] : groups) {
    OrbitDatum od;
    od.representative = Code{key.first, key.second};
    std::vector<int> type;
    long long stab = 1;
    const auto counts = od.representative.value_counts();
    for (int m : counts)
      if (m > 0) {
        type.push_back(m);
        stab *= factorial(m);
      }
    std::sort(type.rbegin(), type.rend());
    od.stabilizer_type = std::move(type);
    od.orbit_size = factorial(n) / stab;
    if (od.orbit_size != seen)
      throw std::logic_error("orbits: enumeration does not match the orbit size formula");
    out.push_back(std::move(od));
  }
  return out;
}

}  // namespace preperm
