// Command line front end: every computation the library exposes, with JSON
// for machines and fixed-width tables for people. Output depends only on the
// arguments and the seed, never on time or environment.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "preperm/preperm.hpp"

namespace {

using namespace preperm;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string fan_table(int n, int k) {
  std::vector<Chain> maximal = enumerate_chains(n, k, n - 1);
  std::sort(maximal.begin(), maximal.end(),
            [](const Chain& a, const Chain& b) { return compare_chains(a, b) < 0; });
  std::string out = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                    std::to_string(maximal.size()) + " maximal cones (chi = " +
                    std::to_string(euler_characteristic(n, k)) + ")\n";
  for (const Chain& c : maximal) {
    std::string row = "  " + format_chain(c) + "  gens:";
    for (const auto& g : cone_of_chain(c).generators) {
      row += " (";
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) row += ',';
        row += std::to_string(g[i]);
      }
      row += ")";
    }
    out += row + "\n";
  }
  return out;
}

std::string betti_row(const std::string& name, const std::vector<long long>& b) {
  std::string row = name;
  row.resize(12, ' ');
  for (long long v : b) {
    std::string cell = std::to_string(v);
    row += std::string(cell.size() < 7 ? 7 - cell.size() : 1, ' ') + cell;
  }
  return row + "\n";
}

int run_betti(int n, int k, const std::string& method, const std::string& format,
              const std::string& out_path) {
  json by_method = json::object();
  std::vector<BettiTable> tables;
  auto want = [&](const char* m) { return method == "all" || method == m; };
  if (want("descents")) tables.push_back(betti_via_descents(n, k));
  if (want("recursion")) tables.push_back(betti_via_recursion(n, k));
  if (want("codes")) tables.push_back(betti_via_codes(n, k));
  bool agree = true;
  for (const auto& t : tables) agree = agree && t.betti == tables.front().betti;

  if (format == "json") {
    if (method != "all") {
      emit(dump(betti_json(tables.front(), method)), out_path);
    } else {
      by_method["descents"] = tables[0].betti;
      by_method["recursion"] = tables[1].betti;
      by_method["codes"] = tables[2].betti;
      emit(dump(json{{"n", n},
                     {"k", k},
                     {"method", "all"},
                     {"agree", agree},
                     {"betti", tables.front().betti},
                     {"by_method", by_method}}),
           out_path);
    }
  } else {
    std::string out = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                      "  chi=" + std::to_string(euler_characteristic(n, k)) + "\n";
    std::string header = "method";
    header.resize(12, ' ');
    for (int i = 0; i < n; ++i) {
      std::string cell = "b" + std::to_string(2 * i);
      header += std::string(cell.size() < 7 ? 7 - cell.size() : 1, ' ') + cell;
    }
    out += header + "\n";
    const char* names[] = {"descents", "recursion", "codes"};
    if (method != "all") {
      out += betti_row(method, tables.front().betti);
    } else {
      for (int i = 0; i < 3; ++i) out += betti_row(names[i], tables[i].betti);
      out += std::string("agreement: ") + (agree ? "yes" : "NO") + "\n";
    }
    emit(out, out_path);
  }
  return agree ? 0 : 1;
}

int run_codes(int n, int min_mu, bool orbit_view, const std::string& format,
              const std::string& out_path) {
  if (format == "json") {
    json j{{"n", n}, {"min_mu", min_mu}};
    if (orbit_view) {
      json arr = json::array();
      for (const auto& od : orbits(n, min_mu)) arr.push_back(orbit_json(od));
      j["orbits"] = arr;
    } else {
      json arr = json::array();
      for (const auto& c : enumerate_codes(n, min_mu)) arr.push_back(code_json(c));
      j["count"] = arr.size();
      j["codes"] = arr;
    }
    emit(dump(j), out_path);
  } else {
    std::string out = "codes of length " + std::to_string(n) + " with mu >= " +
                      std::to_string(min_mu) + "\n";
    if (orbit_view) {
      for (const auto& od : orbits(n, min_mu)) {
        std::string type;
        for (std::size_t i = 0; i < od.stabilizer_type.size(); ++i) {
          if (i) type += ',';
          type += std::to_string(od.stabilizer_type[i]);
        }
        out += "  " + format_code(od.representative) +
               "   orbit " + std::to_string(od.orbit_size) + "   stab (" + type + ")   ind " +
               std::to_string(od.representative.ind()) + "\n";
      }
    } else {
      const auto all = enumerate_codes(n, min_mu);
      out += "count: " + std::to_string(all.size()) + "\n";
      for (const auto& c : all)
        out += "  " + format_code(c) + "   ind " + std::to_string(c.ind()) + "\n";
    }
    emit(out, out_path);
  }
  return 0;
}

int run_charseries(int n, int k, const std::string& source, const std::string& format,
                   const std::string& out_path) {
  const SymSeries s = source == "codes" ? ch_from_codes(n, k) : series_a(n, k);
  if (format == "json") {
    emit(dump(json{{"n", n}, {"k", k}, {"source", source}, {"series", series_json(s)}}),
         out_path);
  } else {
    emit("A(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ") via " + source + ":\n  " +
             series_str(s) + "\n",
         out_path);
  }
  return 0;
}

int run_csf(const std::string& graph, int n, int k, bool bruteforce,
            const std::string& format, const std::string& out_path) {
  SymSeries s;
  Graph g;
  if (graph == "lollipop") {
    s = csf_lollipop(n, k);
    g = lollipop_graph(n, k);
  } else if (graph == "path") {
    s = path_csf(n);
    g = path_graph(n);
  } else if (graph == "complete") {
    s = q_factorial(n) * sym_term(SymBasis::e, {n});
    g = complete_graph(n);
  } else {
    throw std::invalid_argument("unknown graph family: " + graph);
  }
  bool match = true;
  if (bruteforce) match = expand_monomials(s, n) == csf_bruteforce(g);
  if (format == "json") {
    json j{{"graph", graph}, {"n", n}, {"series", series_json(s)}};
    if (graph == "lollipop") j["k"] = k;
    if (bruteforce) j["bruteforce_match"] = match;
    emit(dump(j), out_path);
  } else {
    std::string out = "X_" + graph + "(x,t), n=" + std::to_string(n);
    if (graph == "lollipop") out += ", k=" + std::to_string(k);
    out += ":\n  " + series_str(s) + "\n";
    if (bruteforce)
      out += std::string("coloring oracle: ") + (match ? "match" : "MISMATCH") + "\n";
    emit(out, out_path);
  }
  return match ? 0 : 1;
}

int run_flags_verify(int n, int trials, std::uint64_t seed, const std::string& format,
                     const std::string& out_path) {
  const auto S = DiagonalOperator::standard(n);
  const LemmaReport lemma = krylov_lemma_check(S, trials, seed);
  long long forgetful_violations = 0;
  long long forgetful_trials = 0;
  for (int k = 1; k <= n - 1; ++k) {
    const auto rep = forgetful_dim_check(S, k, trials, seed);
    forgetful_violations += rep.violations;
    forgetful_trials += rep.trials;
  }
  const long long violations = lemma.violations + forgetful_violations;
  if (format == "json") {
    json j{{"n", n},
           {"seed", seed},
           {"trials", lemma.trials},
           {"violations", violations},
           {"rank_checks", lemma.checks},
           {"rank_violations", lemma.violations},
           {"forgetful_trials", forgetful_trials},
           {"forgetful_violations", forgetful_violations}};
    emit(dump(j), out_path);
  } else {
    emit("flag checks, n=" + std::to_string(n) + ", " + std::to_string(trials) +
             " trials/case: " + std::to_string(violations) + " violations\n",
         out_path);
  }
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of iterated blowup fans, codes, and "
               "chromatic symmetric functions"};
  app.require_subcommand(1);

  int n = 4, k = 0, min_mu = 1, trials = 500, max_n = 5;
  std::uint64_t seed = 1;
  std::string method = "all", source = "recursion", graph = "lollipop";
  std::string format = "table", out_path;
  bool orbit_view = false, bruteforce = false;

  auto add_common = [&](CLI::App* cmd, bool with_k) {
    cmd->add_option("--n", n, "ambient n")->required();
    if (with_k) cmd->add_option("--k", k, "stage k")->required();
    cmd->add_option("--format", format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--out", out_path, "write output to a file");
  };

  auto* fan_cmd = app.add_subcommand("fan", "maximal cones of the stage-k fan");
  add_common(fan_cmd, true);

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of the stage-k space");
  add_common(betti_cmd, true);
  betti_cmd->add_option("--method", method, "descents|recursion|codes|all")
      ->check(CLI::IsMember({"descents", "recursion", "codes", "all"}));

  auto* codes_cmd = app.add_subcommand("codes", "admissible marked sequences");
  add_common(codes_cmd, false);
  codes_cmd->add_option("--min-mu", min_mu, "keep codes with mu >= this");
  codes_cmd->add_flag("--orbits", orbit_view, "group into S_n orbits");

  auto* char_cmd = app.add_subcommand("charseries", "characteristic series A(n,k)");
  add_common(char_cmd, true);
  char_cmd->add_option("--source", source, "recursion|codes")
      ->check(CLI::IsMember({"recursion", "codes"}));

  auto* csf_cmd = app.add_subcommand("csf", "chromatic quasisymmetric functions");
  add_common(csf_cmd, false);
  csf_cmd->add_option("--k", k, "lollipop stage k");
  csf_cmd->add_option("--graph", graph, "lollipop|path|complete")
      ->check(CLI::IsMember({"lollipop", "path", "complete"}));
  csf_cmd->add_flag("--bruteforce", bruteforce, "cross-check against proper colorings");

  auto* flags_cmd = app.add_subcommand("flags", "exact rational flag checks");
  auto* flags_verify = flags_cmd->add_subcommand("verify", "Krylov rank and forgetful checks");
  flags_verify->add_option("--n", n, "ambient n")->required();
  flags_verify->add_option("--trials", trials, "trials per case");
  flags_verify->add_option("--seed", seed, "random seed");
  flags_verify->add_option("--format", format, "json|table")
      ->check(CLI::IsMember({"json", "table"}));
  flags_verify->add_option("--out", out_path, "write output to a file");
  flags_cmd->require_subcommand(1);

  auto* verify_cmd = app.add_subcommand("verify", "targeted identity checks");
  auto* identity_cmd = verify_cmd->add_subcommand("identity",
                                                  "omega X_lollipop = [n-k-1]_t! A(n,k)");
  identity_cmd->add_option("--n", n, "ambient n")->required();
  identity_cmd->add_option("--k", k, "stage k")->required();
  identity_cmd->add_option("--format", format, "json|table")
      ->check(CLI::IsMember({"json", "table"}));
  identity_cmd->add_option("--out", out_path, "write output to a file");
  verify_cmd->require_subcommand(1);

  auto* all_cmd = app.add_subcommand("verify-all", "run the whole verification battery");
  all_cmd->add_option("--max-n", max_n, "bound for the exhaustive fan suites");
  all_cmd->add_option("--trials", trials, "sample count for randomized suites");
  all_cmd->add_option("--seed", seed, "random seed");
  all_cmd->add_option("--out", out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (fan_cmd->parsed()) {
      if (format == "json")
        emit(dump(fan_json(n, k)), out_path);
      else
        emit(fan_table(n, k), out_path);
      return 0;
    }
    if (betti_cmd->parsed()) return run_betti(n, k, method, format, out_path);
    if (codes_cmd->parsed()) return run_codes(n, min_mu, orbit_view, format, out_path);
    if (char_cmd->parsed()) return run_charseries(n, k, source, format, out_path);
    if (csf_cmd->parsed()) return run_csf(graph, n, k, bruteforce, format, out_path);
    if (flags_cmd->parsed())
      return run_flags_verify(n, trials, seed, format, out_path);
    if (verify_cmd->parsed()) {
      const bool ok = verify_identity(n, k);
      if (format == "json")
        emit(dump(json{{"n", n}, {"k", k}, {"identity_holds", ok}}), out_path);
      else
        emit("identity at n=" + std::to_string(n) + ", k=" + std::to_string(k) + ": " +
                 (ok ? "holds" : "FAILS") + "\n",
             out_path);
      return ok ? 0 : 1;
    }
    if (all_cmd->parsed()) {
      const auto lines = run_verification(max_n, trials, seed);
      emit(render_verification(lines), out_path);
      return verification_passed(lines) ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
