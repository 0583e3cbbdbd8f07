#pragma once
// Chains of nested proper subsets of [n] = {1,...,n} in bar separated list
// notation, e.g. for n = 9
//
//     ({1,4} < {1,2,3,4} < {1,2,3,4,6,7,9})  <->  [[1,4|2,3|6,7,9|5,8]]
//
// The first block is alpha_0 (possibly empty), each later block extends the
// previous set, and the trailing block [n] \ alpha_p completes the partition
// of [n]. A chain with |alpha_0| <= n-k-1 and |alpha_j| >= n-k for j >= 1
// indexes a cone of the fan of the stage-k blowup of P^{n-1}; maximal chains
// (dimension n-1) are exactly those whose blocks past alpha_0 are singletons
// a_{n-k},...,a_n, and those singleton entries carry the descent/ascent
// statistics and the reverse lexicographic order used throughout.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace preperm {

using Subset = std::uint32_t;  // bit i-1  <->  element i

inline int subset_size(Subset s) { return std::popcount(s); }

inline Subset full_set(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("ambient size out of range");
  return (Subset{1} << n) - 1;
}

inline Subset element_bit(int i) { return Subset{1} << (i - 1); }

inline bool subset_contains(Subset s, int i) { return (s >> (i - 1)) & 1u; }

inline std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int i = 1; s; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

struct Chain {
  int n = 0;
  Subset alpha0 = 0;
  std::vector<Subset> blocks;  // difference blocks; the last one is [n] \ alpha_p

  int p() const { return static_cast<int>(blocks.size()) - 1; }
  int dim() const { return subset_size(alpha0) + p(); }

  // alpha_0, alpha_1, ..., alpha_p
  std::vector<Subset> sets() const {
    std::vector<Subset> out{alpha0};
    Subset cur = alpha0;
    for (std::size_t j = 0; j + 1 < blocks.size(); ++j) {
      cur |= blocks[j];
      out.push_back(cur);
    }
    return out;
  }

  std::vector<Subset> upper_sets() const {
    auto all = sets();
    return {all.begin() + 1, all.end()};
  }

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;  // structural, for containers
};

inline Chain make_chain(int n, Subset alpha0, const std::vector<Subset>& uppers) {
  const Subset full = full_set(n);
  if (alpha0 & ~full) throw std::invalid_argument("alpha_0 is not a subset of [n]");
  Chain c;
  c.n = n;
  c.alpha0 = alpha0;
  Subset prev = alpha0;
  for (Subset s : uppers) {
    if (s & ~full) throw std::invalid_argument("chain set is not a subset of [n]");
    if ((s & prev) != prev || s == prev)
      throw std::invalid_argument("chain sets must be strictly nested");
    if (s == full) throw std::invalid_argument("chain sets must be proper subsets of [n]");
    c.blocks.push_back(s & ~prev);
    prev = s;
  }
  if (prev == full) throw std::invalid_argument("chain sets must be proper subsets of [n]");
  c.blocks.push_back(full & ~prev);
  return c;
}

inline Chain parse_chain(const std::string& text, int n) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto strip = [&s](const std::string& open, const std::string& close) {
    if (s.size() >= open.size() + close.size() && s.compare(0, open.size(), open) == 0 &&
        s.compare(s.size() - close.size(), close.size(), close) == 0) {
      s = s.substr(open.size(), s.size() - open.size() - close.size());
      return true;
    }
    return false;
  };
  strip("\xE2\x9F\xA6", "\xE2\x9F\xA7") || strip("[[", "]]");

  std::vector<std::string> parts{""};
  for (char ch : s) {
    if (ch == '|')
      parts.emplace_back();
    else
      parts.back() += ch;
  }
  if (parts.size() < 2)
    throw std::invalid_argument("chain notation must contain at least one '|'");

  const Subset full = full_set(n);
  Subset seen = 0;
  std::vector<Subset> masks;
  for (std::size_t idx = 0; idx < parts.size(); ++idx) {
    Subset m = 0;
    const std::string& part = parts[idx];
    std::size_t pos = 0;
    while (pos < part.size()) {
      std::size_t next = part.find(',', pos);
      if (next == std::string::npos) next = part.size();
      const std::string tok = part.substr(pos, next - pos);
      if (tok.empty()) throw std::invalid_argument("empty entry in chain block");
      int v = 0;
      try {
        std::size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("not a number in chain notation: '" + tok + "'");
      }
      if (v < 1 || v > n)
        throw std::invalid_argument("element out of range 1..n: " + tok);
      if (subset_contains(seen | m, v))
        throw std::invalid_argument("duplicate element: " + tok);
      m |= element_bit(v);
      pos = next + 1;
    }
    if (m == 0 && idx > 0) throw std::invalid_argument("empty non-leading block");
    seen |= m;
    masks.push_back(m);
  }
  if (seen != full) throw std::invalid_argument("chain does not cover all of [n]");

  std::vector<Subset> uppers;
  Subset cur = masks[0];
  for (std::size_t j = 1; j + 1 < masks.size(); ++j) {
    cur |= masks[j];
    uppers.push_back(cur);
  }
  return make_chain(n, masks[0], uppers);
}

inline std::string format_chain(const Chain& c, bool ascii = false) {
  std::string out = ascii ? "[[" : "\xE2\x9F\xA6";
  bool first_block = true;
  auto append_block = [&](Subset m) {
    if (!first_block) out += '|';
    first_block = false;
    bool first = true;
    for (int v : subset_elements(m)) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(v);
    }
  };
  append_block(c.alpha0);
  for (Subset b : c.blocks) append_block(b);
  out += ascii ? "]]" : "\xE2\x9F\xA7";
  return out;
}

// membership of the chain in the fan of the stage-k blowup
inline bool chain_valid_for(const Chain& c, int k) {
  if (k < 0 || k > c.n - 2) return false;
  if (subset_size(c.alpha0) > c.n - k - 1) return false;
  for (Subset s : c.upper_sets())
    if (subset_size(s) < c.n - k) return false;
  return true;
}

inline bool is_maximal_chain(const Chain& c) { return c.dim() == c.n - 1; }

// The entries a_{n-k},...,a_n of a maximal chain. Every block of a maximal
// chain is a singleton: the upper set sizes strictly increase by exactly one
// once |alpha_0| + p = n-1.
inline std::vector<int> chain_entries(const Chain& c) {
  if (!is_maximal_chain(c)) throw std::invalid_argument("chain is not maximal");
  std::vector<int> out;
  out.reserve(c.blocks.size());
  for (Subset b : c.blocks) out.push_back(subset_elements(b).front());
  return out;
}

// All chains of the stage-k fan, optionally restricted to one cone dimension.
inline std::vector<Chain> enumerate_chains(int n, int k,
                                           std::optional<int> dim_filter = std::nullopt) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (k < 0 || k > n - 2) throw std::invalid_argument("k out of range 0..n-2");
  const Subset full = full_set(n);
  const int min_upper = n - k;
  std::vector<Chain> out;
  std::vector<Subset> uppers;

  std::function<void(Subset, Subset)> grow = [&](Subset a0, Subset last) {
    const int dim_now = subset_size(a0) + static_cast<int>(uppers.size());
    if (!dim_filter || dim_now == *dim_filter) out.push_back(make_chain(n, a0, uppers));
    if (dim_filter && dim_now >= *dim_filter) return;  // extensions only raise the dimension
    const int lo = std::max(min_upper, subset_size(last) + 1);
    for (Subset t = 0; t < full; ++t) {
      if ((t & last) != last || t == last) continue;
      const int sz = subset_size(t);
      if (sz < lo) continue;
      if (dim_filter && dim_now + 1 + (n - 1 - sz) < *dim_filter) continue;
      uppers.push_back(t);
      grow(a0, t);
      uppers.pop_back();
    }
  };

  for (Subset a0 = 0; a0 < full; ++a0) {
    const int sz = subset_size(a0);
    if (sz > n - k - 1) continue;
    if (dim_filter && sz + (n - 1 - std::max(sz, n - k - 1)) < *dim_filter) continue;
    grow(a0, a0);
  }
  return out;
}

// First set alpha_0 ∩ alpha_0'; the rest is the greatest common subchain of
// the two upper chains. Realizes sigma_C ∩ sigma_C' on the cone side.
inline Chain intersect_chains(const Chain& c1, const Chain& c2) {
  if (c1.n != c2.n) throw std::invalid_argument("chains live in different [n]");
  const auto u1 = c1.upper_sets();
  const auto u2 = c2.upper_sets();
  std::vector<Subset> common;
  for (Subset s : u1)
    if (std::find(u2.begin(), u2.end(), s) != u2.end()) common.push_back(s);
  return make_chain(c1.n, c1.alpha0 & c2.alpha0, common);
}

// Reverse lexicographic order on the entry lists of maximal chains:
// C < C' iff a_j < a_j' at the greatest j where they differ.
inline int compare_chains(const Chain& c1, const Chain& c2) {
  if (c1.n != c2.n) throw std::invalid_argument("chains live in different [n]");
  if (!is_maximal_chain(c1) || !is_maximal_chain(c2))
    throw std::invalid_argument("reverse-lex order is defined on maximal chains only");
  if (c1.p() != c2.p())
    throw std::invalid_argument("maximal chains of different stages are incomparable");
  const auto e1 = chain_entries(c1);
  const auto e2 = chain_entries(c2);
  for (int j = static_cast<int>(e1.size()) - 1; j >= 0; --j)
    if (e1[j] != e2[j]) return e1[j] < e2[j] ? -1 : 1;
  return 0;
}

// descent: a_j > a_{j+1} among the entries, or a > a_{n-k} for a in alpha_0
inline int count_descents(const Chain& c) {
  const auto e = chain_entries(c);
  int d = 0;
  for (std::size_t j = 0; j + 1 < e.size(); ++j)
    if (e[j] > e[j + 1]) ++d;
  for (int a : subset_elements(c.alpha0))
    if (a > e.front()) ++d;
  return d;
}

inline int count_ascents(const Chain& c) {
  const auto e = chain_entries(c);
  int d = 0;
  for (std::size_t j = 0; j + 1 < e.size(); ++j)
    if (e[j] < e[j + 1]) ++d;
  for (int a : subset_elements(c.alpha0))
    if (a < e.front()) ++d;
  return d;
}

// The chain of tau_C: every descent a_j > a_{j+1} deletes the set alpha_j,
// every descent a > a_{n-k} deletes a from alpha_0. One dimension is lost
// per descent, so dim(tau_C) = #ascents.
inline Chain tau_chain(const Chain& c) {
  const auto e = chain_entries(c);
  const auto all = c.sets();
  Subset a0 = c.alpha0;
  for (int a : subset_elements(c.alpha0))
    if (a > e.front()) a0 &= ~element_bit(a);
  std::vector<Subset> keep;
  for (int j = 1; j <= c.p(); ++j)
    if (e[j - 1] < e[j]) keep.push_back(all[j]);
  return make_chain(c.n, a0, keep);
}

}  // namespace preperm
