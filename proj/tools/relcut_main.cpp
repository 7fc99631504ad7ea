// Command-line front end: cut counting, spectra, chain reports, enlarged-graph
// construction, exact reliability curves, endpoint comparisons, crossing
// isolation, the reference catalog, and the verification pipeline.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "relcut/catalog.hpp"
#include "relcut/chains.hpp"
#include "relcut/cuts.hpp"
#include "relcut/isomorphism.hpp"
#include "relcut/multigraph.hpp"
#include "relcut/reliability.hpp"
#include "relcut/verify.hpp"

namespace {

using namespace relcut;

MultiGraph load_graph(const std::string& source) {
  if (std::filesystem::exists(source)) {
    std::ifstream in(source);
    if (!in) throw std::runtime_error("cannot open " + source);
    return read_edge_list(in);
  }
  return catalog::graph(source);
}

BigRat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return BigRat(BigInt(text));
  const BigInt num(text.substr(0, slash));
  const BigInt den(text.substr(slash + 1));
  if (den == 0) throw std::runtime_error("rational with zero denominator: " + text);
  return BigRat(num, den);
}

// Edge set given either as a catalog name or as comma-separated edge ids.
EdgeSet parse_edge_set(const MultiGraph& host, const std::string& text) {
  if (text.empty()) return EdgeSet::empty(host);
  if (text.find_first_not_of("0123456789,") == std::string::npos) {
    std::vector<int> ids;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ','))
      if (!token.empty()) ids.push_back(std::stoi(token));
    return EdgeSet(host, ids);
  }
  return EdgeSet(host, catalog::edge_set(text).ids());
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

std::string verdict_name(CompareVerdict v) {
  switch (v) {
    case CompareVerdict::FirstBetter:
      return "FirstBetter";
    case CompareVerdict::SecondBetter:
      return "SecondBetter";
    case CompareVerdict::Equal:
      return "Equal";
  }
  return "?";
}

std::string compare_json(const CompareOutcome& outcome) {
  std::ostringstream out;
  out << "{\n  \"verdict\": \"" << verdict_name(outcome.verdict) << "\",\n";
  if (outcome.verdict == CompareVerdict::Equal) {
    out << "  \"first_diff_index\": null,\n  \"mu_a\": null,\n  \"mu_b\": null\n}";
  } else {
    out << "  \"first_diff_index\": " << outcome.first_diff_index << ",\n"
        << "  \"mu_a\": \"" << outcome.mu_first.str() << "\",\n"
        << "  \"mu_b\": \"" << outcome.mu_second.str() << "\"\n}";
  }
  return out.str();
}

// Complete spectrum at the cheapest exact setting: enumerate only up to the
// corank, everything above is the forced binomial count.
CutSpectrum complete_spectrum(const MultiGraph& g, const EnumerationBudget& budget) {
  const int m = g.edge_count();
  const int k_max = std::clamp(m - g.vertex_count() + 1, 0, m);
  return cut_spectrum(g, k_max, budget);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"exact all-terminal reliability and edge-cut analysis"};
  app.require_subcommand(1);

  EnumerationBudget budget;

  // cuts
  std::string cuts_graph;
  int cuts_k = 0;
  bool cuts_list = false;
  std::string cuts_census;
  auto* cuts_cmd = app.add_subcommand("cuts", "count (and optionally classify) k-edge-cuts");
  cuts_cmd->add_option("graph", cuts_graph, "edge-list file or catalog graph name")->required();
  cuts_cmd->add_option("-k,--k", cuts_k, "cut size")->required();
  cuts_cmd->add_option("--budget", budget.max_subsets, "max subsets examined");
  cuts_cmd->add_flag("--list", cuts_list, "print each cut's edge ids");
  cuts_cmd->add_option("--census", cuts_census, "write a kind/signature census JSON ('-' = stdout)");

  // spectrum
  std::string spectrum_graph, spectrum_csv;
  int spectrum_kmax = -1;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "cut spectrum mu_0..mu_m");
  spectrum_cmd->add_option("graph", spectrum_graph, "edge-list file or catalog graph name")
      ->required();
  spectrum_cmd->add_option("--kmax", spectrum_kmax,
                           "enumerate only up to this k (default: full 2^m enumeration)");
  spectrum_cmd->add_option("--budget", budget.max_subsets, "max subsets examined");
  spectrum_cmd->add_option("--csv", spectrum_csv, "write CSV ('-' = stdout)");

  // trees
  std::string trees_graph;
  auto* trees_cmd = app.add_subcommand("trees", "spanning-tree count");
  trees_cmd->add_option("graph", trees_graph, "edge-list file or catalog graph name")->required();

  // chains
  std::string chains_graph, chains_json;
  auto* chains_cmd = app.add_subcommand("chains", "chain decomposition and distillation");
  chains_cmd->add_option("graph", chains_graph, "edge-list file or catalog graph name")
      ->required();
  chains_cmd->add_option("--json", chains_json, "write the chain report JSON ('-' = stdout)");

  // enlarge
  std::string enlarge_base, enlarge_set, enlarge_out;
  int enlarge_s = 1;
  auto* enlarge_cmd =
      app.add_subcommand("enlarge", "subdivide a cubic base into an enlarged graph");
  enlarge_cmd->add_option("base", enlarge_base, "edge-list file or catalog graph name")
      ->required();
  enlarge_cmd
      ->add_option("--y", enlarge_set,
                   "edges kept one subdivision shorter: catalog set name or comma-separated ids")
      ->default_val("");
  enlarge_cmd->add_option("--s", enlarge_s, "subdivision parameter (>= 1)")->required();
  enlarge_cmd->add_option("-o,--out", enlarge_out, "output edge-list file ('-' = stdout)");

  // reliability
  std::string rel_graph, rel_at, rel_csv;
  int rel_points = 1001;
  auto* rel_cmd = app.add_subcommand("reliability", "exact reliability polynomial");
  rel_cmd->add_option("graph", rel_graph, "edge-list file or catalog graph name")->required();
  rel_cmd->add_option("--at", rel_at, "evaluate at an exact rational rho (e.g. 1/2)");
  rel_cmd->add_option("--csv", rel_csv, "write a rho,R curve CSV ('-' = stdout)");
  rel_cmd->add_option("--points", rel_points, "curve grid size");
  rel_cmd->add_option("--budget", budget.max_subsets, "max subsets examined");

  // compare
  std::string cmp_a, cmp_b, cmp_json;
  int cmp_near = 0;
  auto* cmp_cmd = app.add_subcommand("compare", "spectrum comparison near rho=0 or rho=1");
  cmp_cmd->add_option("a", cmp_a, "first graph")->required();
  cmp_cmd->add_option("b", cmp_b, "second graph")->required();
  cmp_cmd->add_option("--near", cmp_near, "0 or 1")->required();
  cmp_cmd->add_option("--budget", budget.max_subsets, "max subsets examined");
  cmp_cmd->add_option("--json", cmp_json, "write the verdict JSON ('-' = stdout)");

  // crossings
  std::string cross_a, cross_b, cross_tol = "1/1000000000", cross_json;
  auto* cross_cmd =
      app.add_subcommand("crossings", "isolate reliability-curve crossings in (0,1)");
  cross_cmd->add_option("a", cross_a, "first graph")->required();
  cross_cmd->add_option("b", cross_b, "second graph")->required();
  cross_cmd->add_option("--tol", cross_tol, "interval width tolerance (rational)");
  cross_cmd->add_option("--budget", budget.max_subsets, "max subsets examined");
  cross_cmd->add_option("--json", cross_json, "write intervals JSON ('-' = stdout)");

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "reference graphs and edge sets");
  auto* catalog_list = catalog_cmd->add_subcommand("list", "list entry names");
  std::string dump_name;
  auto* catalog_dump = catalog_cmd->add_subcommand("dump", "print one entry");
  catalog_dump->add_option("name", dump_name, "entry name")->required();
  catalog_cmd->require_subcommand(1);

  // verify-paper
  int verify_s = 1;
  std::string verify_json, verify_curves;
  bool verify_no_meta = false;
  auto* verify_cmd = app.add_subcommand(
      "verify-paper", "run the full verification pipeline for the no-UMRG construction");
  verify_cmd->add_option("--s", verify_s, "class parameter (>= 1)")->required();
  verify_cmd->add_option("--budget", budget.max_subsets, "max subsets examined");
  verify_cmd->add_option("--json", verify_json, "write the report JSON to this file");
  verify_cmd->add_flag("--no-meta", verify_no_meta, "omit timing metadata (byte-stable output)");
  verify_cmd->add_option("--curves", verify_curves,
                         "directory for reliability curve CSVs (s = 1 only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit cleanly, usage errors map to 2
  }

  if (*cuts_cmd) {
    const MultiGraph g = load_graph(cuts_graph);
    if (cuts_list) {
      enumerate_cuts(
          g, cuts_k,
          [&](const EdgeSet& cut) {
            for (size_t i = 0; i < cut.ids().size(); ++i)
              std::cout << (i ? " " : "") << cut.ids()[i];
            std::cout << '\n';
          },
          budget);
    }
    if (!cuts_census.empty()) {
      std::ofstream file;
      open_sink(cuts_census, file) << census_json(cut_type_census(g, cuts_k, budget)) << '\n';
    }
    std::cout << mu_k_bruteforce(g, cuts_k, budget).str() << '\n';
    return 0;
  }

  if (*spectrum_cmd) {
    const MultiGraph g = load_graph(spectrum_graph);
    const CutSpectrum spectrum = spectrum_kmax < 0 ? cut_spectrum(g, budget)
                                                   : cut_spectrum(g, spectrum_kmax, budget);
    std::ofstream file;
    write_spectrum_csv(open_sink(spectrum_csv, file), spectrum);
    return 0;
  }

  if (*trees_cmd) {
    std::cout << spanning_tree_count(load_graph(trees_graph)).str() << '\n';
    return 0;
  }

  if (*chains_cmd) {
    const ChainDecomposition d = decompose(load_graph(chains_graph));
    std::ofstream file;
    open_sink(chains_json, file) << chain_report_json(d) << '\n';
    return 0;
  }

  if (*enlarge_cmd) {
    const MultiGraph base = load_graph(enlarge_base);
    EnlargedGraphSpec spec{base, parse_edge_set(base, enlarge_set), enlarge_s};
    std::ofstream file;
    write_edge_list(open_sink(enlarge_out, file), enlarge(spec));
    return 0;
  }

  if (*rel_cmd) {
    const MultiGraph g = load_graph(rel_graph);
    const ReliabilityPolynomial poly(complete_spectrum(g, budget));
    if (!rel_at.empty()) {
      const BigRat rho = parse_rational(rel_at);
      std::cout << evaluate(poly, rho).str() << '\n';
    }
    if (!rel_csv.empty()) {
      std::ofstream file;
      write_curve_csv(open_sink(rel_csv, file), poly, rel_points);
    }
    return 0;
  }

  if (*cmp_cmd) {
    if (cmp_near != 0 && cmp_near != 1) throw CLI::ValidationError("--near must be 0 or 1");
    const CutSpectrum sa = complete_spectrum(load_graph(cmp_a), budget);
    const CutSpectrum sb = complete_spectrum(load_graph(cmp_b), budget);
    const CompareOutcome outcome =
        cmp_near == 0 ? compare_near_zero(sa, sb) : compare_near_one(sa, sb);
    std::ofstream file;
    open_sink(cmp_json, file) << compare_json(outcome) << '\n';
    return 0;
  }

  if (*cross_cmd) {
    const ReliabilityPolynomial pa(complete_spectrum(load_graph(cross_a), budget));
    const ReliabilityPolynomial pb(complete_spectrum(load_graph(cross_b), budget));
    const std::vector<Interval> intervals =
        find_crossings(pa, pb, parse_rational(cross_tol));
    std::ofstream file;
    std::ostream& out = open_sink(cross_json, file);
    out << "[\n";
    for (size_t i = 0; i < intervals.size(); ++i) {
      out << "  {\"lo\": \"" << intervals[i].lo.str() << "\", \"hi\": \""
          << intervals[i].hi.str() << "\"}" << (i + 1 < intervals.size() ? "," : "") << '\n';
    }
    out << "]\n";
    return 0;
  }

  if (*catalog_list) {
    for (const std::string& name : catalog::names()) std::cout << name << '\n';
    return 0;
  }

  if (*catalog_dump) {
    const catalog::Entry& entry = catalog::get(dump_name);
    if (entry.is_graph()) {
      write_edge_list(std::cout, entry.graph);
    } else if (entry.edge_set) {
      std::cout << "# " << entry.name << ": edge set of " << entry.host << '\n'
                << entry.edge_set->size() << '\n';
      for (int id : entry.edge_set->ids()) {
        auto [u, v] = entry.graph.edges()[id];
        std::cout << u << ' ' << v << '\n';
      }
    } else {
      std::cout << "# " << entry.name << ": vertex set of " << entry.host << '\n';
      for (size_t i = 0; i < entry.vertex_set->size(); ++i)
        std::cout << (i ? " " : "") << (*entry.vertex_set)[i];
      std::cout << '\n';
    }
    return 0;
  }

  if (*verify_cmd) {
    verify::MainTheoremArtifacts artifacts;
    const verify::Report report = verify::run(verify_s, budget, &artifacts);
    const std::string rendered = verify::report_json(report, !verify_no_meta);
    if (verify_json.empty()) {
      std::cout << rendered << '\n';
    } else {
      std::ofstream file(verify_json);
      if (!file) throw std::runtime_error("cannot write " + verify_json);
      file << rendered << '\n';
    }
    if (!verify_curves.empty() && artifacts.locally_best_near_zero) {
      std::filesystem::create_directories(verify_curves);
      std::ofstream best(std::filesystem::path(verify_curves) / "curve-W-M1-s1.csv");
      write_curve_csv(best, *artifacts.locally_best_near_zero);
      std::ofstream rival(std::filesystem::path(verify_curves) / "curve-W-X-s1.csv");
      write_curve_csv(rival, *artifacts.better_near_one);
    }
    if (!report.pass()) {
      std::cerr << "verification FAILED\n";
      return 1;
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const relcut::BudgetExceeded& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
