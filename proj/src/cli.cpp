#include "arrangeo/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "arrangeo/canonical.hpp"
#include "arrangeo/charpoly.hpp"
#include "arrangeo/freeness.hpp"
#include "arrangeo/hereditary.hpp"
#include "arrangeo/json_io.hpp"
#include "arrangeo/order_search.hpp"

namespace arrangeo::cli {

namespace {

struct InputOpts {
  std::string input_path;
  std::vector<long long> shi;      // l m
  std::vector<long long> catalan;  // l m
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("--input", in.input_path,
                  "weighted digraph JSON file ('-' for stdin)");
  cmd->add_option("--shi", in.shi, "all-pairs model: L M")
      ->expected(2);
  cmd->add_option("--catalan", in.catalan, "edgeless model: L M")
      ->expected(2);
}

WeightedDigraph resolve_input(const InputOpts& in) {
  const int given = (!in.input_path.empty() ? 1 : 0) +
                    (!in.shi.empty() ? 1 : 0) + (!in.catalan.empty() ? 1 : 0);
  if (given != 1)
    throw std::invalid_argument(
        "input: give exactly one of --input, --shi, --catalan");
  if (!in.shi.empty())
    return shi_model(static_cast<int>(in.shi[0]), in.shi[1]);
  if (!in.catalan.empty())
    return catalan_model(static_cast<int>(in.catalan[0]), in.catalan[1]);
  std::string text;
  if (in.input_path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(in.input_path);
    if (!f) throw std::invalid_argument("input: cannot open " + in.input_path);
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  return weighted_digraph_from_string(text);
}

std::string render_wall(const Hyperplane& h, bool coned) {
  std::string eq = "x" + std::to_string(h.i) + " - x" + std::to_string(h.j) +
                   " = " + std::to_string(h.c);
  if (coned && h.c != 0) eq += " z";
  return eq;
}

std::string format_order(const TotalOrder& order) {
  std::string s;
  for (int v : order.sequence()) {
    if (!s.empty()) s += " < ";
    s += std::to_string(v);
  }
  return s;
}

std::string format_exponents(const ExponentMultiset& exps) {
  std::string s = "{";
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(exps[k]);
  }
  return s + "}";
}

std::string format_chain(const std::vector<WallChoice>& chain) {
  if (chain.empty()) return "(empty)";
  std::string s;
  for (const auto& h : chain) {
    if (!s.empty()) s += " -> ";
    s += "(s=" + std::to_string(h.s) + ", t=" + std::to_string(h.t) +
         ", w=" + std::to_string(h.w) + ")";
  }
  return s;
}

std::string format_edges(const Digraph& g) {
  std::string s = "{";
  bool first = true;
  for (const auto& [a, b] : g.edges()) {
    if (!first) s += ", ";
    s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    first = false;
  }
  return s + "}";
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOpts {
  InputOpts in;
  bool essential = false;
  bool with_charpoly = false;
  bool list_walls = false;
  bool assert_positive = false;
};

int run_analyze(const AnalyzeOpts& o, std::ostream& out) {
  const WeightedDigraph wg = resolve_input(o.in);
  out << "digraph: " << wg.vertex_count() << " vertices, "
      << wg.graph().edge_count() << " edges, total weight "
      << wg.total_weight() << "\n";
  out << "hyperplanes: " << count_hyperplanes(wg) << " (cone: "
      << count_hyperplanes(wg) + 1 << ")\n";
  if (o.list_walls) {
    out << "walls:\n";
    const Arrangement built = build_arrangement(wg);
    for (const auto& h : built.walls())
      out << "  " << render_wall(h, false) << "\n";
  }
  const FreenessReport report = is_free(wg);
  out << "free: " << (report.free ? "yes" : "no") << "\n";
  if (report.free) {
    out << "order: " << format_order(*report.witness_order) << "\n";
    out << "exponents: " << format_exponents(*report.exponents) << "\n";
    if (o.essential) {
      ExponentMultiset ess = *report.exponents;
      // The cone splits off one empty one-dimensional factor worth one
      // zero exponent.
      auto it = std::find(ess.begin(), ess.end(), 0);
      if (it != ess.end()) ess.erase(it);
      out << "exponents (essential): " << format_exponents(ess) << "\n";
    }
  } else {
    if (report.forbidden_witness) {
      const auto& fw = *report.forbidden_witness;
      out << "obstruction: G" << fw.catalogue_id << " on vertices {"
          << fw.vertices[0] << ", " << fw.vertices[1] << ", " << fw.vertices[2]
          << "}\n";
    } else {
      out << "obstruction: no three-vertex pattern; signed eliminability "
             "fails\n";
    }
  }
  out << "ziegler multiplicities:";
  for (const auto& [pair, m] : ziegler_multiplicity(wg))
    out << " {" << pair.first << "," << pair.second << "}: " << m;
  out << "\n";
  if (o.with_charpoly) {
    const Arrangement affine = build_arrangement(wg);
    const IntPolynomial mob = charpoly_mobius(affine);
    const IntPolynomial del = charpoly_deletion_restriction(affine);
    if (mob != del)
      throw std::logic_error("analyze: mobius and delrest disagree");
    std::string agree = "mobius = delrest";
    if (report.free) {
      if (formula_charpoly(wg, *report.witness_order) != mob)
        throw std::logic_error("analyze: formula method disagrees");
      agree += " = formula";
    }
    out << "charpoly (affine): " << mob.to_string() << "\n";
    const IntPolynomial coned_chi = charpoly_mobius(cone(affine));
    out << "charpoly (cone): " << coned_chi.to_string() << "\n";
    if (auto roots = integer_root_split(coned_chi))
      out << "charpoly (cone) factored: " << factored_string(*roots) << "\n";
    else
      out << "charpoly (cone) factored: does not split over the "
             "nonnegative integers\n";
    out << "methods agree: " << agree << "\n";
  }
  return !report.free && o.assert_positive ? 1 : 0;
}

// ---------------------------------------------------------------- charpoly

struct CharpolyOpts {
  InputOpts in;
  std::string method = "mobius";
  long long prime = 0;
  bool use_cone = false;
  int jobs = 1;
};

int run_charpoly(const CharpolyOpts& o, std::ostream& out) {
  const WeightedDigraph wg = resolve_input(o.in);
  Arrangement a = build_arrangement(wg);
  if (o.use_cone) a = cone(a);
  out << "arrangement: " << a.coordinates().size() << " coordinates, "
      << a.size() << " walls (" << (a.is_coned() ? "coned" : "affine")
      << ")\n";
  out << "method: " << o.method << "\n";

  if (o.method == "ff") {
    if (o.prime <= 0)
      throw std::invalid_argument("charpoly: --method ff requires --prime");
    const long long bound = finite_field_validity_bound(a);
    const long long count = charpoly_finite_field(a, o.prime, o.jobs);
    out << "prime: " << o.prime << "\n";
    out << "points avoiding all walls: " << count << "\n";
    if (o.prime > bound)
      out << "validity: q > " << bound
          << ", count equals the characteristic polynomial at q\n";
    else
      out << "validity: q <= " << bound
          << ", count may differ from the characteristic polynomial\n";
    return 0;
  }

  IntPolynomial chi;
  if (o.method == "mobius") {
    chi = charpoly_mobius(a);
  } else if (o.method == "delrest") {
    chi = charpoly_deletion_restriction(a);
  } else if (o.method == "formula") {
    const auto order = find_admissible_order(wg.graph());
    if (!order)
      throw std::invalid_argument(
          "charpoly: --method formula requires an admissible order, and "
          "none exists for this digraph");
    chi = formula_charpoly(wg, *order);
    if (o.use_cone)
      chi = chi * IntPolynomial(std::vector<long long>{-1, 1});
  } else {
    throw std::invalid_argument(
        "charpoly: unknown method (use mobius, delrest, ff, formula)");
  }
  out << "charpoly: " << chi.to_string() << "\n";
  out << "coefficients (ascending):";
  for (long long c : chi.coefficients()) out << " " << c;
  out << "\n";
  if (auto roots = integer_root_split(chi))
    out << "factored: " << factored_string(*roots) << "\n";
  else
    out << "factored: does not split over the nonnegative integers\n";
  return 0;
}

// ---------------------------------------------------------------- contract

struct ContractOpts {
  InputOpts in;
  std::vector<long long> wall;  // s t w
};

int run_contract(const ContractOpts& o, std::ostream& out) {
  const WeightedDigraph wg = resolve_input(o.in);
  if (o.wall.size() != 3)
    throw std::invalid_argument("contract: --wall needs S T W");
  const WallChoice h{static_cast<int>(o.wall[0]), static_cast<int>(o.wall[1]),
                     o.wall[2]};
  if (!wall_admissible(wg, h))
    throw std::invalid_argument(
        "contract: wall is not admissible for this digraph (need vertices "
        "s != t and 0 <= w <= n_t + eps(t,s))");
  const int u = merged_label(wg);
  const WeightedDigraph result = contract(wg, h);
  out << "wall: " << render_wall(make_wall(h.s, h.t, h.w), false) << "\n";
  out << "relabeling: s=" << h.s << ", t=" << h.t << " -> u=" << u << "\n";
  out << "result: " << to_json(result).dump() << "\n";
  out << "restriction walls:\n";
  const Arrangement restricted = restrict_direct(wg, h);
  for (const auto& wall : restricted.walls())
    out << "  " << render_wall(wall, false) << "\n";
  return 0;
}

// ---------------------------------------------------------------- closure

struct ClosureOpts {
  InputOpts in;
  int max_depth = -1;
  long long max_weight = -1;
  bool json_output = false;
};

int run_closure(const ClosureOpts& o, std::ostream& out) {
  const WeightedDigraph wg = resolve_input(o.in);
  ClosureOptions guards;
  if (o.max_depth >= 0) guards.max_depth = o.max_depth;
  if (o.max_weight >= 0) guards.max_weight = o.max_weight;
  const auto nodes = contraction_closure(wg, guards);
  if (guards.max_depth || guards.max_weight)
    out << "bounded search: guards are active, the closure may be "
           "incomplete\n";
  out << "closure nodes: " << nodes.size() << "\n";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto& n = nodes[k];
    if (o.json_output) {
      nlohmann::json j = to_json(n.node);
      auto chain = nlohmann::json::array();
      for (const auto& h : n.chain) chain.push_back(to_json(h));
      j["chain"] = std::move(chain);
      out << j.dump() << "\n";
    } else {
      out << "node " << k << ": l=" << n.node.vertex_count()
          << ", edges=" << n.node.graph().edge_count()
          << ", weight=" << n.node.total_weight()
          << ", chain=" << format_chain(n.chain) << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- hereditary

struct HereditaryOpts {
  InputOpts in;
  int max_depth = -1;
  long long max_weight = -1;
  bool assert_positive = false;
};

int run_hereditary(const HereditaryOpts& o, std::ostream& out) {
  const WeightedDigraph wg = resolve_input(o.in);
  ClosureOptions guards;
  if (o.max_depth >= 0) guards.max_depth = o.max_depth;
  if (o.max_weight >= 0) guards.max_weight = o.max_weight;
  const HereditaryReport report = is_hereditarily_free(wg, guards);
  out << "hereditarily free: " << (report.hereditarily_free ? "yes" : "no")
      << "\n";
  out << "nodes visited: " << report.nodes_visited << "\n";
  if (report.search_bounded)
    out << "bounded search: guards pruned some contractions, the verdict "
           "covers the explored region only\n";
  if (!report.hereditarily_free) {
    out << "witness chain (" << report.counterexample_chain->size()
        << " walls, on canonical labels): "
        << format_chain(*report.counterexample_chain) << "\n";
    out << "failing node: " << to_json(*report.failing_node).dump() << "\n";
  }
  return !report.hereditarily_free && o.assert_positive ? 1 : 0;
}

// ---------------------------------------------------------------- reproduce

void emit_tables(std::ostream& out) {
  out << "# Three-vertex catalogue\n\n";
  out << "N denotes the total weight of the three vertices.\n";
  const auto& cat = three_vertex_catalogue();
  for (int table = 0; table < 4; ++table) {
    out << "\n## Table " << table + 1 << "\n\n";
    const auto* base = &cat[static_cast<std::size_t>(table) * 4];
    out << "| |";
    for (int k = 0; k < 4; ++k) out << " G" << base[k].id << " |";
    out << "\n|---|---|---|---|---|\n";
    out << "| edges |";
    for (int k = 0; k < 4; ++k) out << " " << format_edges(base[k].graph) << " |";
    out << "\n| admissible order |";
    std::vector<std::optional<TotalOrder>> orders;
    for (int k = 0; k < 4; ++k) {
      orders.push_back(find_admissible_order(base[k].graph));
      out << " " << (orders.back() ? "yes" : "no") << " |";
    }
    out << "\n| free |";
    for (int k = 0; k < 4; ++k) out << " " << (orders[static_cast<std::size_t>(k)] ? "yes" : "no") << " |";
    out << "\n| exponents |";
    for (int k = 0; k < 4; ++k) {
      const auto& order = orders[static_cast<std::size_t>(k)];
      if (!order) {
        out << " - |";
        continue;
      }
      // Exponents are {0, 1} plus values N + offset with the offsets
      // independent of the weights.  Evaluate at N = 9 so the shifted
      // values (>= N+1) cannot collide with the fixed pair {0, 1}.
      constexpr long long probe_total = 9;
      std::map<int, long long> probe;
      for (int v : base[k].graph.vertices()) probe[v] = 3;
      const WeightedDigraph wg(base[k].graph, probe);
      ExponentMultiset exps = exponents_formula(wg, *order);
      std::string cell = "0, 1";
      for (long long e : exps)
        if (e != 0 && e != 1) cell += ", N+" + std::to_string(e - probe_total);
      out << " " << cell << " |";
    }
    out << "\n";
  }
}

void emit_dichotomy(std::ostream& out) {
  out << "# Contraction-closure dichotomy\n\n";
  out << "| family | free | hereditarily free | nodes visited |\n";
  out << "|---|---|---|---|\n";
  auto row = [&out](const std::string& name, const WeightedDigraph& wg) {
    const bool free = is_free(wg).free;
    const HereditaryReport rep = is_hereditarily_free(wg);
    out << "| " << name << " | " << (free ? "yes" : "no") << " | "
        << (rep.hereditarily_free ? "yes" : "no") << " | " << rep.nodes_visited
        << " |\n";
  };
  for (int l = 2; l <= 5; ++l)
    for (long long m = 0; m <= 2; ++m)
      row("catalan l=" + std::to_string(l) + " m=" + std::to_string(m),
          catalan_model(l, m));
  for (int l = 2; l <= 6; ++l)
    row("shi l=" + std::to_string(l) + " m=0", shi_model(l, 0));

  const HereditaryReport shi6 = is_hereditarily_free(shi_model(6, 0));
  out << "\nshi l=6 m=0 witness chain (" << shi6.counterexample_chain->size()
      << " walls, on canonical labels): "
      << format_chain(*shi6.counterexample_chain) << "\n";
  out << "failing node: " << to_json(*shi6.failing_node).dump() << "\n";

  const auto [chain, final_node] =
      shi6_counterexample_chain({0, 0, 0, 0, 0, 0});
  out << "\n## Explicit six-vertex chain at zero weights\n\n";
  out << "walls: " << format_chain(chain) << "\n";
  out << "final node: " << to_json(final_node).dump() << "\n";
  out << "final node free: " << (is_free(final_node).free ? "yes" : "no")
      << "\n";

  out << "\n## Larger all-pairs models flatten to l=6\n\n";
  for (int l = 7; l <= 8; ++l)
    for (long long m = 0; m <= 1; ++m) {
      std::string merged = "x6";
      for (int j = 7; j <= l; ++j) merged += " = x" + std::to_string(j);
      out << "shi l=" << l << " m=" << m << " contracts along " << merged
          << " to shi l=6 m=" << m << ": "
          << (shi_flattening_check(l, m) ? "yes" : "no") << "\n";
    }
}

struct ReproduceOpts {
  bool tables = false;
  bool dichotomy = false;
};

int run_reproduce(const ReproduceOpts& o, std::ostream& out) {
  const bool both = !o.tables && !o.dichotomy;
  if (o.tables || both) emit_tables(out);
  if (both) out << "\n";
  if (o.dichotomy || both) emit_dichotomy(out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "exact arithmetic for difference-hyperplane arrangements of weighted "
      "digraphs"};
  app.require_subcommand(1);

  AnalyzeOpts analyze_opts;
  auto* analyze = app.add_subcommand(
      "analyze", "freeness, exponents, and multiplicities of one digraph");
  add_input_options(analyze, analyze_opts.in);
  analyze->add_flag("--essential", analyze_opts.essential,
                    "also print exponents with one zero dropped");
  analyze->add_flag("--charpoly", analyze_opts.with_charpoly,
                    "also print characteristic polynomials (cross-checked)");
  analyze->add_flag("--walls", analyze_opts.list_walls,
                    "list the defining equations");
  analyze->add_flag("--assert", analyze_opts.assert_positive,
                    "exit 1 when the digraph is not free");

  CharpolyOpts charpoly_opts;
  auto* charpoly = app.add_subcommand(
      "charpoly", "characteristic polynomial by a chosen method");
  add_input_options(charpoly, charpoly_opts.in);
  charpoly->add_option("--method", charpoly_opts.method,
                       "mobius | delrest | ff | formula");
  charpoly->add_option("--prime", charpoly_opts.prime,
                       "prime for the ff method");
  charpoly->add_flag("--cone", charpoly_opts.use_cone,
                     "work with the coned arrangement");
  charpoly->add_option("--jobs", charpoly_opts.jobs,
                       "worker threads for the ff method");

  ContractOpts contract_opts;
  auto* contract_cmd = app.add_subcommand(
      "contract", "contract a weighted digraph along one admissible wall");
  add_input_options(contract_cmd, contract_opts.in);
  contract_cmd
      ->add_option("--wall", contract_opts.wall, "wall x_S - x_T = W as: S T W")
      ->expected(3);

  ClosureOpts closure_opts;
  auto* closure = app.add_subcommand(
      "closure", "breadth-first contraction closure of a weighted digraph");
  add_input_options(closure, closure_opts.in);
  closure->add_option("--max-depth", closure_opts.max_depth,
                      "stop expanding past this chain length");
  closure->add_option("--max-weight", closure_opts.max_weight,
                      "stop expanding nodes with a vertex weight above this");
  closure->add_flag("--json", closure_opts.json_output,
                    "one JSON object per node");

  HereditaryOpts hereditary_opts;
  auto* hereditary = app.add_subcommand(
      "hereditary", "hereditary freeness over the contraction closure");
  add_input_options(hereditary, hereditary_opts.in);
  hereditary->add_option("--max-depth", hereditary_opts.max_depth,
                         "stop expanding past this chain length");
  hereditary->add_option("--max-weight", hereditary_opts.max_weight,
                         "stop expanding nodes with a vertex weight above this");
  hereditary->add_flag("--assert", hereditary_opts.assert_positive,
                       "exit 1 when the digraph is not hereditarily free");

  ReproduceOpts reproduce_opts;
  auto* reproduce = app.add_subcommand(
      "reproduce", "emit the reference markdown report (deterministic)");
  reproduce->add_flag("--tables", reproduce_opts.tables,
                      "three-vertex catalogue tables only");
  reproduce->add_flag("--dichotomy", reproduce_opts.dichotomy,
                      "contraction-closure dichotomy only");

  std::vector<const char*> argv;
  argv.push_back("arrangeo");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, out, msg);
    err << msg.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_opts, out);
    if (charpoly->parsed()) return run_charpoly(charpoly_opts, out);
    if (contract_cmd->parsed()) return run_contract(contract_opts, out);
    if (closure->parsed()) return run_closure(closure_opts, out);
    if (hereditary->parsed()) return run_hereditary(hereditary_opts, out);
    if (reproduce->parsed()) return run_reproduce(reproduce_opts, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace arrangeo::cli
