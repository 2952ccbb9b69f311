#include "sparsereg/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sparsereg/arithmetic.hpp"
#include "sparsereg/certificates.hpp"
#include "sparsereg/constructions.hpp"
#include "sparsereg/counting.hpp"
#include "sparsereg/cutnorm.hpp"
#include "sparsereg/hypergraph.hpp"
#include "sparsereg/io.hpp"
#include "sparsereg/parallel.hpp"
#include "sparsereg/regularity.hpp"
#include "sparsereg/removal.hpp"

namespace sparsereg::cli {

using nlohmann::json;

namespace {

// Raised by a subcommand when a verified claim fails.
struct CertificateFailure {
  json report;
};

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_cell(const json& v) {
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(const json& j, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    if (j.contains("rows") && j["rows"].is_array() && !j["rows"].empty() && j["rows"][0].is_object()) {
      const json& rows = j["rows"];
      bool first = true;
      for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
        out << (first ? "" : ",") << it.key();
        first = false;
      }
      out << "\n";
      for (const auto& row : rows) {
        first = true;
        for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
          out << (first ? "" : ",") << csv_cell(row.value(it.key(), json()));
          first = false;
        }
        out << "\n";
      }
    } else {
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out << (first ? "" : ",") << it.key();
        first = false;
      }
      out << "\n";
      first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out << (first ? "" : ",") << csv_cell(*it);
        first = false;
      }
      out << "\n";
    }
  } else {
    for (auto it = j.begin(); it != j.end(); ++it) out << it.key() << ": " << scalar_text(*it) << "\n";
  }
}

std::vector<long long> parse_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: " + text);
    }
    if (used != item.size()) throw std::invalid_argument("not an integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

double edge_density(const Graph& g) {
  const double n = static_cast<double>(g.vertex_count());
  if (g.edge_count() == 0 || n == 0) return 1.0;
  return 2.0 * static_cast<double>(g.edge_count()) / (n * n);
}

json count_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

// Options shared by every subcommand.
struct Common {
  std::uint64_t seed = kDefaultSeed;
  std::size_t threads = 0;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "Seed for all randomness")->capture_default_str();
  app->add_option("--threads", c.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app->add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
}

void add_out(CLI::App* app, Common& c, const std::string& what = "Write the report to this file") {
  app->add_option("--out", c.out, what);
}

EquationSpec named_equation(const std::string& name) {
  if (name == "sidon") return EquationSpec::sidon();
  if (name == "five-term") return EquationSpec::five_term_example();
  if (name == "weighted-1234") return EquationSpec::weighted_average({1, 2, 3, 4});
  if (name == "four-average") return EquationSpec::weighted_average({1, 1, 1, 1});
  if (name == "three-ap") return EquationSpec::weighted_average({1, 1});
  // Otherwise a comma-separated coefficient list with no trivial shapes.
  EquationSpec e;
  e.coefficients = parse_list(name);
  return e;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse graph regularity, cycle counting and removal toolkit", "sparsereg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Common common;
  json report;
  std::function<void()> action;

  // count -----------------------------------------------------------------
  std::string graph_path, pattern = "c5";
  bool cross_check = false;
  double p_opt = 0.0;
  auto* count = app.add_subcommand("count", "Count cycles, homomorphisms or kernel densities in a graph");
  add_common(count, common);
  add_out(count, common);
  count->add_option("--graph", graph_path, "Edge-list file")->required();
  count->add_option("--pattern", pattern,
                    "c3|c4|c5, hom-cK (K >= 3), house, or t-c3|t-c4|t-c5|t-k22 for the kernel p^-1 1_G")
      ->capture_default_str();
  count->add_option("--p", p_opt, "Density scale for t-* patterns (default: edge density)");
  count->add_flag("--cross-check", cross_check, "Run independent counting routes and compare");
  count->callback([&] {
    action = [&] {
      const Graph g = read_graph(graph_path);
      if (pattern == "c3" || pattern == "c4" || pattern == "c5") {
        report = count_cycles(g, pattern[1] - '0', cross_check);
      } else if (pattern.rfind("hom-c", 0) == 0) {
        const int k = std::stoi(pattern.substr(5));
        CountReport r;
        r.pattern = pattern;
        r.count = hom_cycle(g, k);
        r.method = CountMethod::Trace;
        report = r;
      } else if (pattern == "house") {
        const HouseCount h = house_c4_count(g);
        report = {{"pattern", "house"}, {"c4", h.total}, {"extending", h.extending}};
      } else if (pattern.rfind("t-", 0) == 0) {
        const double p = p_opt > 0 ? p_opt : edge_density(g);
        CountReport r;
        r.pattern = pattern;
        r.density = hom_density(parse_pattern(pattern.substr(2)), graph_to_kernel(g, p));
        r.method = CountMethod::Trace;
        report = r;
        report["p"] = p;
      } else {
        throw std::invalid_argument("unsupported pattern: " + pattern);
      }
    };
  });

  // cutnorm ----------------------------------------------------------------
  std::string method = "auto";
  std::size_t restarts = kDefaultRestarts;
  auto* cutnorm = app.add_subcommand("cutnorm", "Cut norm of p^-1 1_G minus its mean");
  add_common(cutnorm, common);
  add_out(cutnorm, common);
  cutnorm->add_option("--graph", graph_path, "Edge-list file")->required();
  cutnorm->add_option("--p", p_opt, "Density scale (default: edge density)");
  cutnorm->add_option("--method", method, "exact|heuristic|auto")
      ->check(CLI::IsMember({"exact", "heuristic", "auto"}))
      ->capture_default_str();
  cutnorm->add_option("--restarts", restarts, "Heuristic restarts")->capture_default_str();
  cutnorm->callback([&] {
    action = [&] {
      const Graph g = read_graph(graph_path);
      const double p = p_opt > 0 ? p_opt : edge_density(g);
      const Kernel f = graph_to_kernel(g, p);
      const Matrix centred = f.values() - Matrix(f.size(), f.size(), f.mean());
      CutNormResult r;
      if (method == "exact") r = cut_norm_exact(f.space(), f.space(), centred);
      else if (method == "heuristic") r = cut_norm_lower(f.space(), f.space(), centred, restarts, common.seed);
      else r = cut_norm_auto(f.space(), f.space(), centred, restarts, common.seed);
      report = r;
      report["p"] = p;
    };
  });

  // regularize -------------------------------------------------------------
  double epsilon = 0.2;
  double k_opt = 0.0;
  std::size_t budget = 64;
  auto* regularize = app.add_subcommand("regularize", "Weak regularity partition of p^-1 1_G");
  add_common(regularize, common);
  add_out(regularize, common);
  regularize->add_option("--graph", graph_path, "Edge-list file")->required();
  regularize->add_option("--epsilon", epsilon, "Accuracy")->capture_default_str();
  regularize->add_option("--p", p_opt, "Density scale (default: edge density)");
  regularize->add_option("--K", k_opt, "Regularise f/K at accuracy epsilon/K instead");
  regularize->add_option("--budget", budget, "Maximum refinements")->capture_default_str();
  regularize->add_option("--restarts", restarts, "Heuristic restarts per search")->capture_default_str();
  regularize->callback([&] {
    action = [&] {
      const Graph g = read_graph(graph_path);
      const double p = p_opt > 0 ? p_opt : edge_density(g);
      RegularityOptions opts{budget, restarts, common.seed};
      const Kernel f = graph_to_kernel(g, p);
      const RegularityOutcome r =
          k_opt > 0 ? weak_regularity_scaled(f, k_opt, epsilon, opts) : weak_regularity(f, epsilon, opts);
      report = r;
      report["p"] = p;
      report["within_bounds"] = within_regularity_bounds(r);
    };
  });

  // remove -----------------------------------------------------------------
  RemovalConfig rcfg;
  double c_opt = 1.0, delta_opt = 0.0;
  std::string targets_text = "c5", final_graph_path;
  bool summary = false;
  auto* remove = app.add_subcommand("remove", "Certified C5 (and C3) removal pipeline");
  add_common(remove, common);
  add_out(remove, common);
  remove->add_option("--graph", graph_path, "Edge-list file")->required();
  remove->add_option("--epsilon", rcfg.epsilon, "Deletion scale in (0, 1)")->capture_default_str();
  remove->add_option("--K", k_opt, "Density cap (default 8/epsilon)");
  remove->add_option("--C", c_opt, "Constant in the lower bound p >= 1/(C sqrt n)")->capture_default_str();
  remove->add_option("--delta", delta_opt, "Regularity accuracy scale (default 0.05 epsilon)");
  remove->add_option("--p", p_opt, "Density scale (default n^-1/2)");
  remove->add_option("--min-part", rcfg.min_part, "Parts of at most this size lose their edges")
      ->capture_default_str();
  remove->add_option("--targets", targets_text, "c5 or c3,c5")
      ->check(CLI::IsMember({"c5", "c3,c5"}))
      ->capture_default_str();
  remove->add_option("--final-graph", final_graph_path, "Write the certified graph here");
  remove->add_flag("--summary", summary, "Omit per-stage edge lists");
  remove->callback([&] {
    action = [&] {
      const Graph g = read_graph(graph_path);
      rcfg.c = c_opt;
      rcfg.seed = common.seed;
      if (k_opt > 0) rcfg.k = k_opt;
      if (delta_opt > 0) rcfg.delta = delta_opt;
      if (p_opt > 0) rcfg.p = p_opt;
      const CycleTargets t{targets_text == "c3,c5", true};
      const DeletionReport r = sparse_removal_pipeline(g, rcfg, t);
      report = summary ? summary_json(r) : json(r);
      if (!final_graph_path.empty()) write_graph(final_graph_path, r.final_graph);
      if (r.final_c5 != 0 || r.final_c3.value_or(0) != 0) throw CertificateFailure{report};
    };
  });

  // construct --------------------------------------------------------------
  std::string kind, set_path, coefficients_text = "1,1,2,-1,-3", report_path;
  int m_opt = 2;
  long long n_opt = 0, q_opt = 3;
  std::size_t r_opt = 3, g_opt = 5;
  double keep = -1.0;
  auto* construct = app.add_subcommand("construct", "Build a construction and certify its claimed properties");
  add_common(construct, common);
  construct->add_option("--kind", kind, "tensor-triangle|sample|unique-c5|reduction|theta|polarity|gnp")
      ->required()
      ->check(CLI::IsMember({"tensor-triangle", "sample", "unique-c5", "reduction", "theta", "polarity", "gnp"}));
  construct->add_option("--out", common.out, "Write the graph (or hypergraph) file here");
  construct->add_option("--report", report_path, "Write the property report here instead of stdout");
  construct->add_option("--m", m_opt, "Tensor power")->capture_default_str();
  construct->add_option("--n", n_opt, "Size parameter");
  construct->add_option("--q", q_opt, "Prime field size")->capture_default_str();
  construct->add_option("--r", r_opt, "Uniformity")->capture_default_str();
  construct->add_option("--g", g_opt, "Girth parameter")->capture_default_str();
  construct->add_option("--p", p_opt, "Edge probability for gnp (default n^-1/2)");
  construct->add_option("--keep", keep, "Triangle keep probability (default (sqrt 3 / 2)^m)");
  construct->add_option("--set", set_path, "Integer-set file");
  construct->add_option("--coefficients", coefficients_text, "Reduction equation coefficients")
      ->capture_default_str();
  construct->callback([&] {
    action = [&] {
      std::optional<Graph> graph;
      std::optional<Hypergraph> hyper;
      std::vector<PropertyCheck> checks;
      report = {{"kind", kind}};
      if (kind == "tensor-triangle" || kind == "sample") {
        graph = tensor_triangle(m_opt);
        report["m"] = m_opt;
        if (kind == "sample") {
          const double q = keep >= 0 ? keep : std::pow(std::sqrt(3.0) / 2.0, m_opt);
          graph = sample_triangles(*graph, q, common.seed);
          report["keep"] = q;
          const auto per_edge = triangles_per_edge(*graph);
          checks.push_back({"every_edge_in_one_triangle",
                            std::all_of(per_edge.begin(), per_edge.end(), [](auto c) { return c == 1; }),
                            nullptr});
        } else {
          checks = check_tensor_triangle(*graph, m_opt);
        }
      } else if (kind == "unique-c5") {
        if (n_opt <= 0) n_opt = 200;
        const IntegerSet x = set_path.empty() ? greedy_avoider(n_opt, c5_construction_constraints())
                                              : read_integer_set(set_path, n_opt);
        const UniqueC5Graph pg = unique_c5_graph(x, n_opt);
        checks = check_unique_c5(pg, x.size());
        report["n"] = n_opt;
        report["modulus"] = pg.modulus;
        report["set"] = x.elements();
        graph = pg.graph.graph();
      } else if (kind == "reduction") {
        if (n_opt <= 0) n_opt = 12;
        if (set_path.empty()) throw std::invalid_argument("reduction needs --set");
        const IntegerSet x = read_integer_set(set_path, n_opt);
        EquationSpec eq;
        eq.coefficients = parse_list(coefficients_text);
        const ReductionGraph rg = reduction_graph(eq, std::vector<IntegerSet>(5, x), n_opt);
        const BigInt solutions = count_solutions(eq, x, SolutionFilter::All);
        const BigInt c5 = count_cycles(rg.graph.graph(), 5).count;
        checks.push_back({"c5_equals_modulus_times_solutions", c5 == solutions * rg.modulus,
                          {{"c5", count_json(c5)}, {"solutions", count_json(solutions)}}});
        report["modulus"] = rg.modulus;
        report["collisions"] = rg.collisions;
        graph = rg.graph.graph();
      } else if (kind == "theta") {
        if (n_opt <= 0) n_opt = 27;
        hyper = theta_hypergraph(r_opt, g_opt, static_cast<std::size_t>(n_opt));
        const bool short_cycle = r_opt >= 2 && g_opt <= 5 && g_opt >= 2 &&
                                 berge_girth_leq(*hyper, g_opt).has_value();
        checks.push_back({"girth_exceeds_g", !short_cycle, {{"checked", g_opt <= 5}}});
        checks.push_back({"edge_formula",
                          hyper->edge_count() == theta_edge_formula(r_opt, g_opt, static_cast<std::size_t>(n_opt)),
                          {{"edges", hyper->edge_count()}}});
        report["r"] = r_opt;
        report["g"] = g_opt;
        report["n"] = n_opt;
      } else if (kind == "polarity") {
        graph = polarity_graph(q_opt);
        checks = check_polarity(*graph, q_opt);
        report["q"] = q_opt;
      } else {
        if (n_opt <= 0) n_opt = 200;
        const double p = p_opt > 0 ? p_opt : 1.0 / std::sqrt(static_cast<double>(n_opt));
        graph = gnp(static_cast<std::size_t>(n_opt), p, common.seed);
        report["p"] = p;
      }
      if (graph) {
        report["vertices"] = graph->vertex_count();
        report["edges"] = graph->edge_count();
      } else {
        report["vertices"] = hyper->vertex_count();
        report["edges"] = hyper->edge_count();
      }
      report["properties"] = checks;
      if (!common.out.empty()) {
        if (graph) {
          write_graph(common.out, *graph);
        } else {
          std::ofstream f(common.out);
          if (!f) throw std::runtime_error("cannot write " + common.out);
          write_hypergraph(f, *hyper);
        }
      }
      common.out = report_path;
      // Reported-only observations carry "asserted": false.
      for (const auto& c : checks) {
        const bool asserted = !(c.detail.is_object() && c.detail.value("asserted", true) == false);
        if (asserted && !c.holds) throw CertificateFailure{report};
      }
    };
  });

  // arith ------------------------------------------------------------------
  std::string generate, equation_name, filter_name = "all";
  auto* arith = app.add_subcommand("arith", "Integer sets: generators, Sidon checks and solution counts");
  add_common(arith, common);
  add_out(arith, common);
  arith->add_option("--set", set_path, "Integer-set file");
  arith->add_option("--generate", generate, "erdos-turan|behrend|greedy-sidon|c5-construction")
      ->check(CLI::IsMember({"erdos-turan", "behrend", "greedy-sidon", "c5-construction"}));
  arith->add_option("--n", n_opt, "Ambient bound");
  arith->add_option("--p", q_opt, "Prime for erdos-turan")->capture_default_str();
  arith->add_option("--equation", equation_name,
                    "sidon|five-term|weighted-1234|four-average|three-ap or coefficients like 1,1,-1,-1");
  arith->add_option("--filter", filter_name, "all|nontrivial|distinct-variables")
      ->check(CLI::IsMember({"all", "nontrivial", "distinct-variables"}))
      ->capture_default_str();
  arith->add_flag("--cross-check", cross_check, "Compare the hashing and convolution engines");
  arith->get_option("--set")->excludes(arith->get_option("--generate"));
  arith->callback([&] {
    action = [&] {
      IntegerSet x;
      if (!set_path.empty()) {
        x = read_integer_set(set_path, n_opt);
      } else if (generate == "erdos-turan") {
        x = erdos_turan_sidon(q_opt);
      } else if (generate == "behrend") {
        x = behrend_avoiding(n_opt > 0 ? n_opt : 100,
                             equation_name.empty() ? EquationSpec::weighted_average({1, 1, 1, 1})
                                                   : named_equation(equation_name));
      } else if (generate == "greedy-sidon") {
        x = greedy_avoider(n_opt > 0 ? n_opt : 20, {{EquationSpec::sidon(), SolutionFilter::Nontrivial}});
      } else if (generate == "c5-construction") {
        x = greedy_avoider(n_opt > 0 ? n_opt : 200, c5_construction_constraints());
      } else {
        throw std::invalid_argument("arith needs --set or --generate");
      }
      report = {{"n", x.bound()},
                {"set", x.elements()},
                {"size", x.size()},
                {"is_sidon", is_sidon(x)},
                {"additive_energy", count_json(additive_energy(x))}};
      if (!equation_name.empty()) {
        const EquationSpec eq = named_equation(equation_name);
        report["equation"] = eq;
        report["filter"] = filter_name;
        report["solutions"] = count_json(count_solutions(eq, x, parse_filter(filter_name), cross_check));
      }
    };
  });

  // verify -----------------------------------------------------------------
  std::string suite;
  std::size_t instances = 200;
  auto* verify = app.add_subcommand("verify", "Randomised certificate suites");
  add_common(verify, common);
  add_out(verify, common);
  verify->add_option("--suite", suite, "counting-lemma|defect|regularity")
      ->required()
      ->check(CLI::IsMember({"counting-lemma", "defect", "regularity"}));
  verify->add_option("--instances", instances, "Number of random instances")->capture_default_str();
  verify->callback([&] {
    action = [&] {
      json rows = json::array();
      std::size_t violations = 0;
      if (suite == "counting-lemma") {
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < instances; ++i) {
          const auto shape = i % 2 == 0 ? InstanceShape::BlockAverage : InstanceShape::Perturbation;
          const auto inst = random_counting_lemma_instance(mix_seed(common.seed, i), shape);
          const auto res = verify_counting_lemma(inst);
          const auto chain = verify_truncation_chain(inst);
          if (!res.holds || !chain.holds) ++violations;
          worst = std::min(worst, res.margin);
          rows.push_back({{"instance", i},
                          {"epsilon", inst.epsilon},
                          {"C", inst.c},
                          {"lhs", res.lhs},
                          {"rhs", res.rhs},
                          {"margin", res.margin},
                          {"chain_holds", chain.holds}});
        }
        report = {{"min_margin", worst}};
      } else if (suite == "defect") {
        Rng rng(common.seed);
        for (std::size_t i = 0; i < instances; ++i) {
          const std::size_t k = 1 + uniform_below(rng, 6);
          std::vector<std::pair<double, double>> dist(k);
          double total = 0.0, mean = 0.0;
          for (auto& [x, q] : dist) {
            x = 3.0 * uniform01(rng);
            q = uniform01(rng) + 1e-3;
            total += q;
          }
          for (auto& [x, q] : dist) {
            q /= total;
            mean += q * x;
          }
          if (mean > 1.0)
            for (auto& [x, q] : dist) x /= mean;
          // Renormalise exactly enough for the precondition check.
          double sum = 0.0;
          for (auto& d : dist) sum += d.second;
          dist.back().second += 1.0 - sum;
          const DefectSides s = defect_check(dist);
          const bool ok = s.lhs <= s.rhs + 1e-12;
          if (!ok) ++violations;
          rows.push_back({{"instance", i}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"holds", ok}});
        }
        report = json::object();
      } else {
        Rng rng(common.seed);
        const double eps_values[] = {0.1, 0.2, 0.4};
        for (std::size_t i = 0; i < instances; ++i) {
          const std::size_t n = 8 + uniform_below(rng, 40);
          const double lo = 1.0 / std::sqrt(static_cast<double>(n));
          const double density = lo + (1.0 - lo) * uniform01(rng);
          const Graph g = gnp(n, density, mix_seed(common.seed, i));
          const double eps = eps_values[i % 3];
          RegularityOptions opts{64, kDefaultRestarts, mix_seed(common.seed, i)};
          bool ok = true;
          RegularityOutcome r;
          try {
            r = weak_regularity(graph_to_kernel(g, density), eps, opts);
            ok = within_regularity_bounds(r);
          } catch (const std::logic_error&) {
            ok = false;
          }
          if (!ok) ++violations;
          rows.push_back({{"instance", i}, {"n", n}, {"epsilon", eps}, {"parts", r.partition.size()},
                          {"iterations", r.iterations}, {"holds", ok}});
        }
        report = json::object();
      }
      report["suite"] = suite;
      report["instances"] = instances;
      report["seed"] = common.seed;
      report["violations"] = violations;
      report["rows"] = rows;
      if (violations != 0) throw CertificateFailure{report};
    };
  });

  // girth ------------------------------------------------------------------
  std::string hyper_path, config_text;
  long long peel = -1;
  auto* girth = app.add_subcommand("girth", "Hypergraph girth, configurations, peeling; C4-free degree audit");
  add_common(girth, common);
  add_out(girth, common);
  girth->add_option("--hypergraph", hyper_path, "Hypergraph file");
  girth->add_option("--graph", graph_path, "Graph file for the C4-free minimum-degree audit");
  girth->add_option("--g", g_opt, "Search for Berge cycles of length at most g (2..5)")->capture_default_str();
  girth->add_option("--config", config_text, "Search for a (v,e)-configuration, given as v,e");
  girth->add_option("--peel", peel, "Peel vertices of degree at most t first");
  girth->callback([&] {
    action = [&] {
      if (!graph_path.empty()) {
        const MinDegreeAudit a = c4free_min_degree_audit(read_graph(graph_path));
        report = {{"min_degree", a.min_degree}, {"edges", a.edges}, {"bound", a.bound}, {"holds", a.holds}};
        if (!a.holds) throw CertificateFailure{report};
        return;
      }
      if (hyper_path.empty()) throw std::invalid_argument("girth needs --hypergraph or --graph");
      Hypergraph h = read_hypergraph(hyper_path);
      report = json::object();
      if (peel >= 0) {
        PeelResult pr = peel_min_degree(h, static_cast<std::size_t>(peel));
        report["peeled_edges"] = pr.deleted_edges;
        h = std::move(pr.remainder);
      }
      report["edges"] = h.edge_count();
      const auto cycle = berge_girth_leq(h, g_opt);
      report["girth_at_most_g"] = cycle.has_value();
      report["cycle"] = cycle ? json(*cycle) : json();
      if (!config_text.empty()) {
        const auto ve = parse_list(config_text);
        if (ve.size() != 2 || ve[0] < 0 || ve[1] < 1) throw std::invalid_argument("--config expects v,e");
        const auto w = has_configuration(h, static_cast<std::size_t>(ve[0]), static_cast<std::size_t>(ve[1]));
        report["configuration"] = w ? json(*w) : json();
      }
      if (h.uniformity() == 3) {
        const ShadowResult s = shadow_and_linearity(h);
        report["linear"] = s.linear;
        report["shadow_c5"] = count_c5_enumeration(s.shadow);
      }
    };
  });

  std::vector<std::string> argv_store{"sparsereg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  set_thread_count(common.threads);
  int code = kExitOk;
  try {
    action();
  } catch (const CertificateFailure& f) {
    report = f.report;
    code = kExitCertificateFailure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "certificate failure: " << e.what() << "\n";
    return kExitCertificateFailure;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  set_thread_count(0);

  if (common.out.empty()) {
    emit(report, common.format, out);
  } else {
    std::ofstream f(common.out);
    if (!f) {
      err << "error: cannot write " << common.out << "\n";
      return kExitUsage;
    }
    emit(report, common.format, f);
  }
  if (code == kExitCertificateFailure) err << "certificate failure\n";
  return code;
}

}  // namespace sparsereg::cli
