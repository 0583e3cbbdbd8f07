#pragma once
// Symmetric functions with exact integer-in-t coefficients, in the complete
// homogeneous (h) or elementary (e) basis indexed by partitions. Products
// act on indices by multiset union (h_lam h_mu = h_{lam u mu}); omega swaps
// the basis labels. Monomial expansion in N variables is the equality oracle
// against brute force coloring counts.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "intmath.hpp"
#include "tpoly.hpp"

namespace preperm {

using Partition = std::vector<int>;  // weakly decreasing positive parts

inline void validate_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < p.size() && p[i] < p[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

inline int partition_weight(const Partition& p) {
  int w = 0;
  for (int v : p) w += v;
  return w;
}

inline Partition merge_partitions(Partition a, const Partition& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.rbegin(), a.rend());
  return a;
}

enum class SymBasis { h, e };

struct SymSeries {
  SymBasis basis = SymBasis::h;
  std::map<Partition, TPoly> terms;

  void normalize() {
    for (auto it = terms.begin(); it != terms.end();)
      it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  }
  bool is_zero() const { return terms.empty(); }
  int weight() const {
    if (terms.empty()) return 0;
    const int w = partition_weight(terms.begin()->first);
    for (const auto& [lam, coeff] : terms)
      if (partition_weight(lam) != w)
        throw std::logic_error("SymSeries: inhomogeneous weight");
    return w;
  }

  friend bool operator==(const SymSeries& x, const SymSeries& y) {
    if (x.terms.empty() && y.terms.empty()) return true;
    return x.basis == y.basis && x.terms == y.terms;
  }
};

inline SymSeries sym_term(SymBasis basis, Partition lam, TPoly coeff = TPoly::one()) {
  validate_partition(lam);
  SymSeries s;
  s.basis = basis;
  if (!coeff.is_zero() ) s.terms.emplace(std::move(lam), std::move(coeff));
  return s;
}

inline SymSeries& operator+=(SymSeries& a, const SymSeries& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) a.basis = b.basis;
  if (a.basis != b.basis) throw std::invalid_argument("SymSeries: mixed h/e sum");
  for (const auto& [lam, coeff] : b.terms) a.terms[lam] += coeff;
  a.normalize();
  return a;
}
inline SymSeries operator+(SymSeries a, const SymSeries& b) { return a += b; }

inline SymSeries operator*(const SymSeries& a, const SymSeries& b) {
  if (a.is_zero() || b.is_zero()) return SymSeries{a.basis, {}};
  if (a.basis != b.basis) throw std::invalid_argument("SymSeries: mixed h/e product");
  SymSeries out;
  out.basis = a.basis;
  for (const auto& [la, ca] : a.terms)
    for (const auto& [lb, cb] : b.terms) out.terms[merge_partitions(la, lb)] += ca * cb;
  out.normalize();
  return out;
}

inline SymSeries operator*(const TPoly& f, SymSeries s) {
  for (auto& [lam, coeff] : s.terms) coeff = f * coeff;
  s.normalize();
  return s;
}

inline SymSeries omega(SymSeries s) {
  s.basis = s.basis == SymBasis::h ? SymBasis::e : SymBasis::h;
  return s;
}

using MonomialExpansion = std::map<std::vector<int>, TPoly>;

// h_r: all monomials of degree r in N variables; e_r: the squarefree ones.
inline std::map<std::vector<int>, long long> expand_basis_element(SymBasis basis, int r, int N) {
  std::map<std::vector<int>, long long> out;
  std::vector<int> expo(N, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == N) {
      if (left == 0) out[expo] = 1;
      return;
    }
    const int cap = basis == SymBasis::e ? std::min(left, 1) : left;
    for (int v = 0; v <= cap; ++v) {
      expo[pos] = v;
      self(self, pos + 1, left - v);
    }
    expo[pos] = 0;
  };
  rec(rec, 0, r);
  return out;
}

inline MonomialExpansion expand_monomials(const SymSeries& s, int N) {
  if (N < 1) throw std::invalid_argument("expand_monomials: need N >= 1");
  MonomialExpansion out;
  for (const auto& [lam, coeff] : s.terms) {
    std::map<std::vector<int>, long long> prod{{std::vector<int>(N, 0), 1}};
    for (int part : lam) {
      const auto factor = expand_basis_element(s.basis, part, N);
      std::map<std::vector<int>, long long> next;
      for (const auto& [e1, c1] : prod)
        for (const auto& [e2, c2] : factor) {
          std::vector<int> e(N);
          for (int i = 0; i < N; ++i) e[i] = e1[i] + e2[i];
          next[e] += c1 * c2;
        }
      prod = std::move(next);
    }
    for (const auto& [e, c] : prod) out[e] += c * coeff;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// h_lam |-> n!/prod(lam_i!), the dimension of the induced permutation module
inline TPoly dimension_specialization(const SymSeries& s) {
  if (s.basis != SymBasis::h && !s.is_zero())
    throw std::invalid_argument("dimension specialization is defined on the h basis");
  TPoly out;
  for (const auto& [lam, coeff] : s.terms) {
    long long dim = factorial(partition_weight(lam));
    for (int part : lam) dim /= factorial(part);
    out += dim * coeff;
  }
  return out;
}

inline std::string partition_str(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + "]";
}

inline std::string series_str(const SymSeries& s) {
  if (s.is_zero()) return "0";
  const char* b = s.basis == SymBasis::h ? "h" : "e";
  std::string out;
  for (const auto& [lam, coeff] : s.terms) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff.str() + ")*" + b + partition_str(lam);
  }
  return out;
}

}  // namespace preperm
