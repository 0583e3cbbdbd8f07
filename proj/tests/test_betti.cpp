#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "preperm/betti.hpp"
#include "preperm/chain.hpp"

using namespace preperm;

namespace {

std::vector<long long> eulerian_row(int n) {
  std::vector<long long> row(n, 0);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    int d = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (w[i] > w[i + 1]) ++d;
    ++row[d];
  } while (std::next_permutation(w.begin(), w.end()));
  return row;
}

}  // namespace

TEST_CASE("q-integers and q-factorials") {
  CHECK(q_int(1) == TPoly{1});
  CHECK(q_factorial(1) == TPoly{1});
  CHECK(q_int(3) == TPoly{1, 1, 1});
  CHECK(q_factorial(3) == TPoly{1, 2, 2, 1});
  CHECK(q_factorial(0) == TPoly::one());
  for (int m = 0; m <= 8; ++m) CHECK(q_factorial(m).at_one() == factorial(m));
}

TEST_CASE("Euler characteristic is the falling factorial") {
  CHECK(euler_characteristic(4, 2) == 24);
  CHECK(euler_characteristic(5, 2) == 60);
  for (int n = 2; n <= 8; ++n) CHECK(euler_characteristic(n, 0) == n);
  CHECK_THROWS_AS(euler_characteristic(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(euler_characteristic(4, -1), std::invalid_argument);
}

TEST_CASE("Betti numbers by descent counting") {
  CHECK(betti_via_descents(4, 1).betti == std::vector<long long>{1, 5, 5, 1});
  CHECK(betti_via_descents(4, 2).betti == std::vector<long long>{1, 11, 11, 1});
  for (int n = 2; n <= 6; ++n)
    CHECK(betti_via_descents(n, 0).betti == std::vector<long long>(n, 1));
}

TEST_CASE("Betti numbers by the blowup recursion") {
  CHECK(betti_via_recursion(4, 2).betti == std::vector<long long>{1, 11, 11, 1});
  CHECK(betti_via_recursion(5, 1).betti == std::vector<long long>{1, 6, 6, 6, 1});
  CHECK(betti_via_recursion(5, 2).betti == std::vector<long long>{1, 16, 26, 16, 1});
}

TEST_CASE("Betti numbers by code counting") {
  CHECK(betti_via_codes(4, 2).betti == std::vector<long long>{1, 11, 11, 1});
  CHECK(betti_via_codes(5, 2).betti == std::vector<long long>{1, 16, 26, 16, 1});
  for (int n = 2; n <= 6; ++n) {
    const auto b = betti_via_codes(n, n - 2);
    CHECK(std::accumulate(b.betti.begin(), b.betti.end(), 0ll) == factorial(n));
  }
}

TEST_CASE("the three Betti computations agree") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; k <= n - 2; ++k) {
      const auto b = betti_via_descents(n, k);
      REQUIRE(b == betti_via_recursion(n, k));
      REQUIRE(b == betti_via_codes(n, k));
    }
}

TEST_CASE("Betti tables are palindromic and sum to the Euler characteristic") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; k <= n - 2; ++k) {
      const auto b = betti_via_recursion(n, k);
      REQUIRE(std::accumulate(b.betti.begin(), b.betti.end(), 0ll) ==
              euler_characteristic(n, k));
      for (int i = 0; i < n; ++i) REQUIRE(b.betti[i] == b.betti[n - 1 - i]);
    }
}

TEST_CASE("the top stage gives the Eulerian numbers") {
  for (int n = 2; n <= 6; ++n)
    REQUIRE(betti_via_descents(n, n - 2).betti == eulerian_row(n));
}

TEST_CASE("the maximal chain count matches the Betti sum") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k <= n - 2; ++k)
      REQUIRE(static_cast<long long>(enumerate_chains(n, k, n - 1).size()) ==
              euler_characteristic(n, k));
}

TEST_CASE("Poincare polynomials") {
  for (int n = 2; n <= 6; ++n) CHECK(poincare_poly(n, 0) == q_int(n));
  CHECK(poincare_poly(4, 2) == TPoly{1, 11, 11, 1});
}

TEST_CASE("Hessenberg Poincare polynomial") {
  const TPoly expect = TPoly{1, 1} * TPoly{1, 5, 5, 1};
  CHECK(hess_poincare(4, 1) == expect);
  CHECK(hess_poincare(4, 1) == TPoly{1, 6, 10, 6, 1});
  CHECK(hess_poincare(4, 1).at_one() == 24);
  CHECK_THROWS_AS(hess_poincare(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(hess_poincare(4, 0), std::invalid_argument);
  for (int n = 4; n <= 7; ++n)
    for (int k = 1; k <= n - 3; ++k) {
      const TPoly hp = hess_poincare(n, k);
      REQUIRE(hp.at_one() == euler_characteristic(n, k) * factorial(n - k - 1));
      REQUIRE(hp.palindromic());
      REQUIRE(hp.degree() == k + (n - k) * (n - k - 1) / 2);
    }
}
