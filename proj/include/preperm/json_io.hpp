#pragma once
// JSON emitters. Chain strings use the ASCII [[...]] form in machine output;
// object keys are emitted in sorted order, so serialization is byte stable.

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "betti.hpp"
#include "chain.hpp"
#include "codes.hpp"
#include "cone.hpp"
#include "fan.hpp"
#include "flags.hpp"
#include "symfunc.hpp"

namespace preperm {

using nlohmann::json;

inline json fan_json(int n, int k) {
  std::vector<Chain> maximal = enumerate_chains(n, k, n - 1);
  std::sort(maximal.begin(), maximal.end(),
            [](const Chain& a, const Chain& b) { return compare_chains(a, b) < 0; });
  json cones = json::array();
  for (const Chain& c : maximal) {
    cones.push_back(json{{"chain", format_chain(c, true)},
                         {"generators", cone_of_chain(c).generators}});
  }
  return json{{"n", n}, {"k", k}, {"maximal_cones", cones}};
}

inline json betti_json(const BettiTable& b, const std::string& method) {
  return json{{"n", b.n}, {"k", b.k}, {"betti", b.betti}, {"method", method}};
}

inline json code_json(const Code& c) {
  json f = json::object();
  for (std::size_t v = 1; v <= c.marks.size(); ++v)
    f[std::to_string(v)] = c.marks[v - 1];
  return json{{"a", c.a}, {"f", f}};
}

inline json orbit_json(const OrbitDatum& od) {
  return json{{"representative", code_json(od.representative)},
              {"orbit_size", od.orbit_size},
              {"stabilizer_type", od.stabilizer_type},
              {"index", od.representative.ind()}};
}

inline json series_json(const SymSeries& s) {
  json terms = json::array();
  for (const auto& [lam, coeff] : s.terms)
    terms.push_back(json{{"partition", lam}, {"coeff", coeff.c}});
  return json{{"basis", s.basis == SymBasis::h ? "h" : "e"}, {"terms", terms}};
}

inline json fan_report_json(const FanReport& r) {
  return json{{"n", r.n},
              {"k", r.k},
              {"maximal_cone_count", r.maximal_cone_count},
              {"simplicial_ok", r.simplicial_ok},
              {"completeness_ok", r.completeness_ok},
              {"intersection_ok", r.intersection_ok},
              {"star_ok", r.star_ok},
              {"seed", r.seed},
              {"trials", r.trials}};
}

inline json lemma_report_json(const LemmaReport& r) {
  return json{{"n", r.n},
              {"trials", r.trials},
              {"checks", r.checks},
              {"violations", r.violations},
              {"seed", r.seed}};
}

inline json forgetful_report_json(const ForgetfulReport& r) {
  return json{{"n", r.n},
              {"k", r.k},
              {"trials", r.trials},
              {"violations", r.violations},
              {"seed", r.seed}};
}

}  // namespace preperm
