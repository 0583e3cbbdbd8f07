#pragma once
// The cross-validation battery behind `verify-all`: every identity the
// library claims, checked at desk scale with a fixed seed. Each check knows
// its own range; max_n bounds the exhaustive fan-geometry suites.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "betti.hpp"
#include "chain.hpp"
#include "charseries.hpp"
#include "fan.hpp"
#include "flags.hpp"
#include "intmath.hpp"

namespace preperm {

struct CheckLine {
  std::string id;
  std::string label;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline std::vector<long long> eulerian_row(int n) {
  std::vector<long long> row(n, 0);
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  do {
    int d = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (w[i] > w[i + 1]) ++d;
    ++row[d];
  } while (std::next_permutation(w.begin(), w.end()));
  return row;
}

}  // namespace detail

inline std::vector<CheckLine> run_verification(int max_n = 5, int trials = 500,
                                               std::uint64_t seed = 1) {
  std::vector<CheckLine> out;
  auto add = [&out](const char* id, const char* label, bool pass, std::string detail = "") {
    out.push_back(CheckLine{id, label, pass, std::move(detail)});
  };

  {  // 1: Euler characteristic vs maximal chain count
    bool ok = true;
    for (int n = 2; n <= 7 && ok; ++n)
      for (int k = 0; k <= n - 2 && ok; ++k)
        ok = static_cast<long long>(enumerate_chains(n, k, n - 1).size()) ==
             euler_characteristic(n, k);
    add("c01", "Euler characteristic = maximal chain count, n <= 7", ok);
  }

  {  // 2: Betti numbers three ways, Eulerian row at k = n-2
    bool ok = true;
    for (int n = 2; n <= 6 && ok; ++n)
      for (int k = 0; k <= n - 2 && ok; ++k) {
        const auto b1 = betti_via_descents(n, k);
        ok = b1 == betti_via_recursion(n, k) && b1 == betti_via_codes(n, k);
        if (ok && k == n - 2) ok = b1.betti == detail::eulerian_row(n);
      }
    ok = ok && betti_via_descents(4, 1).betti == std::vector<long long>{1, 5, 5, 1};
    ok = ok && betti_via_descents(4, 2).betti == std::vector<long long>{1, 11, 11, 1};
    ok = ok && betti_via_descents(5, 2).betti == std::vector<long long>{1, 16, 26, 16, 1};
    add("c02", "Betti tables agree: descents = recursion = codes, n <= 6", ok);
  }

  {  // 3: star subdivision fan equals the chain fan
    bool ok = true;
    for (int n = 2; n <= max_n && ok; ++n)
      for (int k = 0; k <= n - 2 && ok; ++k)
        ok = build_fan_by_subdivision(n, k) == fan_from_chains(n, k);
    add("c03", "star subdivision fan = chain fan (generator sets)", ok,
        "n <= " + std::to_string(max_n));
  }

  {  // 4: ordering condition and dim tau = ascents, exhaustive
    bool ok = true;
    for (int n = 2; n <= max_n && ok; ++n)
      for (int k = 0; k <= n - 2 && ok; ++k) ok = star_condition_check(n, k);
    add("c04", "tau_C containment forces C' >= C; dim tau_C = ascents", ok,
        "n <= " + std::to_string(max_n));
  }

  {  // 5: recursion series equals code-orbit series
    bool ok = true;
    for (int n = 2; n <= 6 && ok; ++n)
      for (int k = 0; k <= n - 2 && ok; ++k) ok = series_a(n, k) == ch_from_codes(n, k);
    add("c05", "characteristic series: recursion = code orbits, n <= 6", ok);
  }

  {  // 6: lollipop identity, symbolically and against the coloring oracle
    bool ok = true;
    for (int n = 4; n <= 7 && ok; ++n)
      for (int k = 1; k <= n - 3 && ok; ++k) ok = verify_identity(n, k);
    const int oracle_cap = std::min(max_n, 5);
    for (int n = 4; n <= oracle_cap && ok; ++n)
      for (int k = 1; k <= n - 3 && ok; ++k)
        ok = expand_monomials(csf_lollipop(n, k), n) == csf_bruteforce(lollipop_graph(n, k));
    add("c06", "omega X_lollipop = [n-k-1]_t! A(n,k); coloring oracle to n = 5", ok);
  }

  {  // 7: Hessenberg dimension counts
    bool ok = true;
    for (int n = 4; n <= 7 && ok; ++n)
      for (int k = 1; k <= n - 3 && ok; ++k) {
        const TPoly hp = hess_poincare(n, k);
        ok = dimension_specialization(hess_char_series(n, k)) == hp &&
             hp.at_one() == euler_characteristic(n, k) * factorial(n - k - 1);
      }
    add("c07", "Hessenberg series dimensions match Poincare counts, n <= 7", ok);
  }

  {  // 8: Krylov rank = min(depth, support), 200 trials per case
    bool ok = true;
    for (int n = 1; n <= 8 && ok; ++n)
      ok = krylov_lemma_check(DiagonalOperator::standard(n), 200, seed).violations == 0;
    add("c08", "Krylov rank = min(depth, support), n <= 8, 200 trials/case", ok);
  }

  {  // 9: randomized fan soundness
    bool ok = true;
    for (int n = 2; n <= max_n && ok; ++n)
      for (int k = 0; k <= n - 2 && ok; ++k) {
        const FanReport r = verify_fan(n, k, trials, seed);
        ok = r.all_ok() && r.maximal_cone_count == euler_characteristic(n, k);
      }
    add("c09", "fan soundness: unique cover + intersection consistency", ok,
        std::to_string(trials) + " pts/stage, n <= " + std::to_string(max_n));
  }

  {  // 10: the randomized suites are reproducible for a fixed seed
    const bool ok = verify_fan(4, 2, trials, seed) == verify_fan(4, 2, trials, seed) &&
                    krylov_lemma_check(DiagonalOperator::standard(6), 50, seed) ==
                        krylov_lemma_check(DiagonalOperator::standard(6), 50, seed) &&
                    forgetful_dim_check(DiagonalOperator::standard(6), 2, 50, seed) ==
                        forgetful_dim_check(DiagonalOperator::standard(6), 2, 50, seed);
    add("c10", "seeded suites are deterministic (double run)", ok);
  }

  return out;
}

inline bool verification_passed(const std::vector<CheckLine>& lines) {
  for (const auto& l : lines)
    if (!l.pass) return false;
  return true;
}

inline std::string render_verification(const std::vector<CheckLine>& lines) {
  std::string out;
  int passed = 0;
  for (const auto& l : lines) {
    std::string row = "[" + l.id + "] " + l.label;
    if (!l.detail.empty()) row += " (" + l.detail + ")";
    if (row.size() < 86) row += ' ' + std::string(86 - row.size() - 1, '.');
    row += l.pass ? " PASS" : " FAIL";
    out += row + "\n";
    if (l.pass) ++passed;
  }
  out += "RESULT: " + std::string(passed == static_cast<int>(lines.size()) ? "PASS" : "FAIL") +
         " (" + std::to_string(passed) + "/" + std::to_string(lines.size()) + " checks)\n";
  return out;
}

}  // namespace preperm
