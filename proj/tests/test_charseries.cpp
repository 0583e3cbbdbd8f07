#include <catch2/catch_amalgamated.hpp>

#include "preperm/betti.hpp"
#include "preperm/charseries.hpp"

using namespace preperm;

namespace {

// the t^j coefficient of a series, as a symmetric function
SymSeries t_slice(const SymSeries& s, int j) {
  SymSeries out;
  out.basis = s.basis;
  for (const auto& [lam, coeff] : s.terms) {
    const TPoly c{coeff.coeff(j)};
    if (!c.is_zero()) out.terms[lam] = c;
  }
  return out;
}

}  // namespace

TEST_CASE("the characteristic series recursion") {
  CHECK(series_a(1, 0) == sym_term(SymBasis::h, {1}));
  CHECK(series_a(3, 1) ==
        q_int(3) * sym_term(SymBasis::h, {3}) + TPoly::t() * sym_term(SymBasis::h, {2, 1}));
  for (int n = 2; n <= 7; ++n) CHECK(series_a(n, 0) == q_int(n) * sym_term(SymBasis::h, {n}));
  CHECK_THROWS_AS(series_a(4, 3), std::invalid_argument);
}

TEST_CASE("the series from code orbits") {
  CHECK(ch_from_codes(3, 1) ==
        q_int(3) * sym_term(SymBasis::h, {3}) + TPoly::t() * sym_term(SymBasis::h, {2, 1}));
  for (int n = 2; n <= 6; ++n)
    CHECK(ch_from_codes(n, 0) == q_int(n) * sym_term(SymBasis::h, {n}));
  // only the all-zero code sits in degree 0
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; k <= n - 2; ++k)
      CHECK(t_slice(ch_from_codes(n, k), 0) == sym_term(SymBasis::h, {n}));
}

TEST_CASE("recursion and code orbits give the same series") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k <= n - 2; ++k) REQUIRE(series_a(n, k) == ch_from_codes(n, k));
}

TEST_CASE("dimension specialization recovers the Poincare polynomial") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k <= n - 2; ++k)
      REQUIRE(dimension_specialization(series_a(n, k)) == poincare_poly(n, k));
}

TEST_CASE("graph builders") {
  const Graph l41 = lollipop_graph(4, 1);
  CHECK(l41.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(path_graph(1).edges.empty());
  CHECK(lollipop_graph(5, 0) == complete_graph(5));
  CHECK(lollipop_graph(5, 3) == path_graph(5));  // n-k = 2: the clique is a single edge
  CHECK_THROWS_AS(lollipop_graph(5, 4), std::invalid_argument);
}

TEST_CASE("coloring brute force on small graphs") {
  const auto k2 = csf_bruteforce(complete_graph(2));
  REQUIRE(k2.size() == 1);
  CHECK(k2.at({1, 1}) == TPoly{1, 1});

  // edgeless graph: (x_1+...+x_N)^n at t-degree 0
  Graph edgeless;
  edgeless.n = 3;
  const SymSeries h111 = sym_term(SymBasis::h, {1, 1, 1});
  CHECK(csf_bruteforce(edgeless) == expand_monomials(h111, 3));

  // complete graphs: [n]_t! e_n
  for (int n = 2; n <= 5; ++n)
    REQUIRE(csf_bruteforce(complete_graph(n)) ==
            expand_monomials(q_factorial(n) * sym_term(SymBasis::e, {n}), n));

  Graph too_big;
  too_big.n = 8;
  CHECK_THROWS_AS(csf_bruteforce(too_big), std::invalid_argument);
}

TEST_CASE("path chromatic functions match omega of the full series") {
  for (int m = 2; m <= 5; ++m)
    REQUIRE(csf_bruteforce(path_graph(m)) == expand_monomials(path_csf(m), m));
}

TEST_CASE("lollipop chromatic functions") {
  const SymSeries expect =
      q_factorial(2) * (q_int(4) * sym_term(SymBasis::e, {4}) +
                        (TPoly::t() * q_int(2)) * sym_term(SymBasis::e, {3, 1}));
  CHECK(csf_lollipop(4, 1) == expect);
  CHECK_THROWS_AS(csf_lollipop(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(csf_lollipop(4, 0), std::invalid_argument);

  for (int n = 4; n <= 5; ++n)
    for (int k = 1; k <= n - 3; ++k)
      REQUIRE(expand_monomials(csf_lollipop(n, k), n) ==
              csf_bruteforce(lollipop_graph(n, k)));
}

TEST_CASE("reindexing the lollipop sum changes nothing") {
  for (int n = 4; n <= 6; ++n)
    for (int k = 1; k <= n - 3; ++k) {
      SymSeries inner = q_int(n) * sym_term(SymBasis::e, {n});
      for (int ip = 0; ip < k; ++ip) {
        const TPoly shifts = TPoly::t() * q_int(n - ip - 2);
        inner += shifts * (path_csf(ip + 1) * sym_term(SymBasis::e, {n - 1 - ip}));
      }
      REQUIRE(q_factorial(n - k - 1) * inner == csf_lollipop(n, k));
    }
}

TEST_CASE("the main identity holds symbolically") {
  CHECK(verify_identity(4, 1));
  CHECK(verify_identity(5, 1));
  CHECK(verify_identity(5, 2));
  CHECK(verify_identity(6, 2));
  CHECK(verify_identity(7, 4));
}

TEST_CASE("both sides of the identity count (n-k-1)! P(n,k+1) dimensions") {
  // the x_1...x_n coefficient of a weight-n expansion is the representation
  // dimension; both sides agree with the closed count at t = 1
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 1}, {5, 1}, {5, 2}}) {
    const std::vector<int> squarefree(n, 1);
    const TPoly lhs = expand_monomials(csf_lollipop(n, k), n).at(squarefree);
    const TPoly rhs =
        expand_monomials(q_factorial(n - k - 1) * series_a(n, k), n).at(squarefree);
    REQUIRE(lhs.at_one() == factorial(n - k - 1) * euler_characteristic(n, k));
    REQUIRE(rhs.at_one() == factorial(n - k - 1) * euler_characteristic(n, k));
  }
}

TEST_CASE("Hessenberg characteristic series") {
  const SymSeries s = hess_char_series(4, 1);
  CHECK(t_slice(s, 0) == sym_term(SymBasis::h, {4}));
  CHECK(dimension_specialization(s).at_one() == 24);  // P(4,2) * 2!
  for (int n = 4; n <= 7; ++n)
    for (int k = 1; k <= n - 3; ++k) {
      const SymSeries h = hess_char_series(n, k);
      for (const auto& [lam, coeff] : h.terms)
        for (long long c : coeff.c) REQUIRE(c >= 0);  // a permutation representation
      REQUIRE(dimension_specialization(h) == hess_poincare(n, k));
    }
  CHECK_THROWS_AS(hess_char_series(4, 2), std::invalid_argument);
}
