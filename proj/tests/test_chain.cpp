#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "preperm/chain.hpp"
#include "preperm/cone.hpp"

using namespace preperm;

namespace {

std::vector<Chain> sorted_maximal(int n, int k) {
  auto out = enumerate_chains(n, k, n - 1);
  std::sort(out.begin(), out.end(),
            [](const Chain& a, const Chain& b) { return compare_chains(a, b) < 0; });
  return out;
}

// entrywise complement a -> n+1-a on a maximal chain
Chain complement_chain(const Chain& c) {
  const int n = c.n;
  Subset a0 = 0;
  for (int a : subset_elements(c.alpha0)) a0 |= element_bit(n + 1 - a);
  std::vector<Subset> uppers;
  Subset cur = a0;
  for (int e : chain_entries(c)) {
    cur |= element_bit(n + 1 - e);
    if (subset_size(cur) < n) uppers.push_back(cur);  // the full accumulation is [n]
  }
  return make_chain(n, a0, uppers);
}

}  // namespace

TEST_CASE("parse and format round trip the list notation") {
  const Chain c = parse_chain("\xE2\x9F\xA6 1,4 | 2,3 | 6,7,9 | 5,8 \xE2\x9F\xA7", 9);
  CHECK(c.alpha0 == (element_bit(1) | element_bit(4)));
  const auto sets = c.sets();
  REQUIRE(sets.size() == 3);
  CHECK(subset_elements(sets[1]) == std::vector<int>{1, 2, 3, 4});
  CHECK(subset_elements(sets[2]) == std::vector<int>{1, 2, 3, 4, 6, 7, 9});
  CHECK(format_chain(c, true) == "[[1,4|2,3|6,7,9|5,8]]");
  CHECK(parse_chain(format_chain(c), 9) == c);
  CHECK(parse_chain(format_chain(c, true), 9) == c);
}

TEST_CASE("empty leading block encodes the zero cone") {
  const Chain c = parse_chain("[[|1,2,3]]", 3);
  CHECK(c.alpha0 == 0);
  CHECK(c.p() == 0);
  CHECK(c.dim() == 0);
  CHECK(format_chain(c, true) == "[[|1,2,3]]");
  CHECK(cone_of_chain(c).generators.empty());
}

TEST_CASE("single-set chains have p = 0") {
  const Chain c = parse_chain("[[1,2|3,4]]", 4);
  CHECK(c.p() == 0);
  CHECK(c.sets() == std::vector<Subset>{element_bit(1) | element_bit(2)});
  CHECK(c.dim() == 2);
}

TEST_CASE("parse rejects malformed notation") {
  CHECK_THROWS_AS(parse_chain("[[1,1|2,3]]", 3), std::invalid_argument);   // duplicate
  CHECK_THROWS_AS(parse_chain("[[1,5|2,3]]", 4), std::invalid_argument);   // out of range
  CHECK_THROWS_AS(parse_chain("[[1|2]]", 3), std::invalid_argument);       // missing element
  CHECK_THROWS_AS(parse_chain("[[1||2,3]]", 3), std::invalid_argument);    // empty middle block
  CHECK_THROWS_AS(parse_chain("[[1,2,3]]", 3), std::invalid_argument);     // no bar at all
  CHECK_THROWS_AS(parse_chain("[[1,x|2,3]]", 3), std::invalid_argument);   // not a number
}

TEST_CASE("cone generators follow e_alpha with e_n = -(e_1+...+e_{n-1})") {
  CHECK(cone_of_chain(parse_chain("[[1|2,3]]", 3)).generators ==
        std::vector<std::vector<long long>>{{1, 0}});
  CHECK(cone_of_chain(parse_chain("[[3|1,2]]", 3)).generators ==
        std::vector<std::vector<long long>>{{-1, -1}});
  const Cone co = cone_of_chain(parse_chain("[[1|2|3]]", 3));
  CHECK(co.generators == std::vector<std::vector<long long>>{{1, 0}, {1, 1}});
  CHECK(cone_rank(co) == 2);
}

TEST_CASE("chain enumeration counts") {
  CHECK(enumerate_chains(4, 2, 3).size() == 24);
  CHECK(enumerate_chains(3, 0).size() == 7);
  CHECK(enumerate_chains(5, 2, 4).size() == 60);
  CHECK_THROWS_AS(enumerate_chains(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_chains(4, -1), std::invalid_argument);
}

TEST_CASE("every enumerated chain is valid for its stage and unique") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k <= n - 2; ++k) {
      const auto chains = enumerate_chains(n, k);
      std::set<Chain> unique(chains.begin(), chains.end());
      CHECK(unique.size() == chains.size());
      for (const Chain& c : chains) CHECK(chain_valid_for(c, k));
    }
}

TEST_CASE("chain intersection: worked example at n = 10") {
  const Chain a = parse_chain("[[1,4,10|2,3|6,7|9|5,8]]", 10);
  const Chain b = parse_chain("[[1,4,6|7,2,3,10|5,9|8]]", 10);
  const Chain meet = intersect_chains(a, b);
  CHECK(format_chain(meet, true) == "[[1,4|2,3,6,7,10|5,8,9]]");
  CHECK(intersect_chains(b, a) == meet);
}

TEST_CASE("chain intersection is idempotent and requires matching n") {
  const Chain a = parse_chain("[[1,4|2,3|6,7,9|5,8]]", 9);
  CHECK(intersect_chains(a, a) == a);
  CHECK_THROWS_AS(intersect_chains(a, parse_chain("[[1|2,3]]", 3)), std::invalid_argument);
}

TEST_CASE("adjacent entry swaps meet in dimension n-2") {
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; k <= n - 2; ++k) {
      const auto maximal = enumerate_chains(n, k, n - 1);
      for (const Chain& c : maximal) {
        const auto e = chain_entries(c);
        for (std::size_t j = 0; j + 1 < e.size(); ++j) {
          auto swapped = e;
          std::swap(swapped[j], swapped[j + 1]);
          Subset cur = c.alpha0;
          std::vector<Subset> uppers;
          for (std::size_t t = 0; t + 1 < swapped.size(); ++t) {
            cur |= element_bit(swapped[t]);
            uppers.push_back(cur);
          }
          const Chain other = make_chain(n, c.alpha0, uppers);
          REQUIRE(intersect_chains(c, other).dim() == n - 2);
        }
      }
    }
}

TEST_CASE("generator sets intersect along chain intersections") {
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; k <= n - 2; ++k) {
      const auto maximal = enumerate_chains(n, k, n - 1);
      for (std::size_t i = 0; i < maximal.size(); ++i)
        for (std::size_t j = i; j < maximal.size(); ++j) {
          const auto gi = canonical_generators(cone_of_chain(maximal[i]));
          const auto gj = canonical_generators(cone_of_chain(maximal[j]));
          std::vector<std::vector<long long>> common;
          std::set_intersection(gi.begin(), gi.end(), gj.begin(), gj.end(),
                                std::back_inserter(common));
          const auto meet =
              canonical_generators(cone_of_chain(intersect_chains(maximal[i], maximal[j])));
          REQUIRE(meet == common);
        }
    }
}

TEST_CASE("reverse lexicographic order") {
  const Chain a = parse_chain("[[3|1|2]]", 3);
  const Chain b = parse_chain("[[1|2|3]]", 3);
  CHECK(compare_chains(a, b) < 0);
  CHECK(compare_chains(b, a) > 0);
  CHECK(compare_chains(a, a) == 0);
  CHECK_THROWS_AS(compare_chains(parse_chain("[[1|2,3]]", 3), b), std::invalid_argument);
}

TEST_CASE("sorting maximal chains gives a strict total order") {
  const auto maximal = sorted_maximal(4, 2);
  REQUIRE(maximal.size() == 24);
  for (std::size_t i = 0; i + 1 < maximal.size(); ++i)
    CHECK(compare_chains(maximal[i], maximal[i + 1]) < 0);
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      CHECK(compare_chains(maximal[i], maximal[j]) == -compare_chains(maximal[j], maximal[i]));
    }
}

TEST_CASE("descent counting: worked example at n = 9") {
  const Chain c = parse_chain("[[1,2,5,8|4|3|6|9|7]]", 9);
  CHECK(count_descents(c) == 4);
  CHECK(count_ascents(c) == 4);
}

TEST_CASE("fully ascending chains have no descents") {
  const Chain c = parse_chain("[[1,2|3|4|5]]", 5);  // n=5, k=2
  CHECK(count_descents(c) == 0);
  CHECK(count_ascents(c) == 4);
  CHECK(tau_chain(c) == c);
}

TEST_CASE("descents + ascents = n-1 and the complement swaps them") {
  for (int n = 3; n <= 6; ++n)
    for (int k = 0; k <= n - 2; ++k)
      for (const Chain& c : enumerate_chains(n, k, n - 1)) {
        REQUIRE(count_descents(c) + count_ascents(c) == n - 1);
        const Chain cc = complement_chain(c);
        REQUIRE(complement_chain(cc) == c);
        REQUIRE(count_descents(cc) == count_ascents(c));
      }
}

TEST_CASE("tau: worked example at n = 9, k = 4") {
  const Chain c = parse_chain("[[1,2,5,8|4|3|6|9|7]]", 9);
  const Chain tau = tau_chain(c);
  // same sets as [[1,2|5,8,4,3|6|9,7]]; one dimension lost per descent
  CHECK(format_chain(tau, true) == "[[1,2|3,4,5,8|6|7,9]]");
  CHECK(tau.dim() == count_ascents(c));
  CHECK(tau.dim() == 4);
  CHECK_THROWS_AS(tau_chain(parse_chain("[[1|2,3,4]]", 4)), std::invalid_argument);
}

TEST_CASE("tau equals the intersection with all later facet-sharing cones") {
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; k <= n - 2; ++k) {
      const auto maximal = sorted_maximal(n, k);
      for (std::size_t i = 0; i < maximal.size(); ++i) {
        Chain expect = maximal[i];
        for (std::size_t j = i + 1; j < maximal.size(); ++j) {
          const Chain meet = intersect_chains(maximal[i], maximal[j]);
          if (meet.dim() == n - 2) expect = intersect_chains(expect, meet);
        }
        REQUIRE(tau_chain(maximal[i]) == expect);
        REQUIRE(tau_chain(maximal[i]).dim() == count_ascents(maximal[i]));
      }
    }
}
