#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "flowkit/apps.hpp"
#include "flowkit/decompose.hpp"
#include "flowkit/dimacs.hpp"
#include "flowkit/error.hpp"
#include "flowkit/lp.hpp"
#include "flowkit/pseudoflow.hpp"
#include "flowkit/simplicial.hpp"
#include "flowkit/solvers.hpp"

using namespace flowkit;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

constexpr const char* kDimacsGrammar = R"(Network file (DIMACS max-flow, 1-based ids):
  c <comment>
  p max <n> <m>
  n <id> s
  n <id> t
  a <u> <v> <cap>          cap: non-negative integer or p/q
Flow output:
  f <u> <v> <value>        one line per arc with positive flow
  s <value>                the flow value)";

constexpr const char* kLpGrammar = R"(LP file:
  max | min
  c <c1> ... <cn>
  a <a1> ... <an> | <b>    one line per row: <= for max, >= for min
  nonneg <0|1> ... <0|1>   optional, default all 1
  # comment)";

constexpr const char* kMatrixGrammar = R"(Matrix file: whitespace-separated integer rows, # comments.
With --hnet the input is a network complex and its boundary matrix is checked.)";

constexpr const char* kBipartiteGrammar = R"(Bipartite file (1-based):
  bip <n>
  e <v> <w>                v in V, w in W
Output:
  match <v> <w>            when a perfect matching exists (exit 0)
  violation <v> ...        a set S in V with |N(S)| < |S| (exit 1)
  neighbors <w> ...        its neighborhood N(S))";

constexpr const char* kPosetGrammar = R"(Poset file:
  el <name>
  cover <lo> <hi>          lo < hi; any comparable pairs are accepted
  bottom <name>            optional, inferred when omitted
  top <name>               optional, inferred when omitted
Output:
  chain <name> ...         one maximal chain per line)";

constexpr const char* kImageGrammar = R"(Input: PGM P2 (ASCII) grayscale image.
Probabilities are a heuristic: a = g / maxval, b = 1 - a; penalty --lambda
on every 4-neighbor pair. Output: PBM P1 mask, 1 = foreground.)";

constexpr const char* kHnetGrammar = R"(Network complex file:
  hnet dim <d>
  t <v0> <v1> ... <vd>         source facet, orientation as written
  f <v0> <v1> ... <vd> <cap>   capacitated facet; cap may be inf
Facets are numbered in file order (1-based), T included.
Flow output:
  hf <facet> <value>
  s <f(T)>)";

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

Network load_network(const std::string& path, bool allow_antiparallel) {
  auto in = open_input(path);
  return read_dimacs(in, allow_antiparallel);
}

HNetwork load_hnet(const std::string& path) {
  auto in = open_input(path);
  return read_hnet(in);
}

void print_ids(std::ostream& out, const char* tag, const std::vector<int>& ids) {
  out << tag;
  for (int v : ids) out << ' ' << v + 1;
  out << '\n';
}

int run_maxflow(const std::string& path, const std::string& algo, bool instrumented, bool antiparallel) {
  const Network net = load_network(path, antiparallel);
  SolverOptions opts;
  opts.instrumented = instrumented;
  std::vector<std::pair<std::string, FlowAssignment>> flows;
  std::vector<Rational> values;
  if (algo == "ek" || algo == "all") {
    auto r = edmonds_karp(net, opts);
    std::cerr << "algo=ek value=" << r.value << " augmentations=" << r.augmentations << '\n';
    values.push_back(r.value);
    flows.emplace_back("ek", std::move(r.flow));
  }
  if (algo == "pr" || algo == "all") {
    auto r = push_relabel(net, opts);
    std::cerr << "algo=pr value=" << r.value << " pushes=" << r.pushes << " relabels=" << r.relabels << '\n';
    values.push_back(r.value);
    flows.emplace_back("pr", std::move(r.flow));
  }
  if (algo == "hoch" || algo == "all") {
    auto r = hochbaum_maxflow(net, opts);
    std::cerr << "algo=hoch value=" << r.value << " iterations=" << r.iterations
              << " reversed=" << (r.reversed ? 1 : 0) << '\n';
    values.push_back(r.value);
    flows.emplace_back("hoch", std::move(r.flow));
  }
  if (flows.size() == 1) {
    write_flow(std::cout, net, flows.front().second);
    return kOk;
  }
  for (const auto& v : values) std::cout << "s " << to_string(v) << '\n';
  for (const auto& v : values)
    if (v != values.front()) {
      std::cerr << "solvers disagree\n";
      return kViolation;
    }
  return kOk;
}

int run_mincut(const std::string& path, bool antiparallel) {
  const Network net = load_network(path, antiparallel);
  const auto r = edmonds_karp(net);
  const Cut cut = min_cut_from_flow(net, r.flow);
  print_ids(std::cout, "cut", cut.source_side());
  std::cout << "capacity " << to_string(cut_capacity(net, cut)) << '\n';
  return kOk;
}

int run_decompose(const std::string& path, const std::string& flow_path, bool antiparallel) {
  const Network net = load_network(path, antiparallel);
  FlowAssignment f;
  if (flow_path.empty()) {
    f = edmonds_karp(net).flow;
  } else {
    auto in = open_input(flow_path);
    f = read_flow(in, net);
  }
  const auto violations = validate(net, f, FlowRole::kFlow);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cout << "invalid " << v.describe() << '\n';
    return kViolation;
  }
  const auto parts = decompose(net, f);
  write_components(std::cout, parts);
  std::cerr << "components=" << parts.size() << " arcs=" << net.arc_count() << '\n';
  return kOk;
}

int run_lp_dual(const std::string& path, bool from_network, bool solve) {
  if (from_network) {
    const Network net = load_network(path, true);
    const LinearProgram primal = build_primal(net);
    std::cout << "# primal\n";
    write_lp(std::cout, primal);
    std::cout << "# reduced dual\n";
    const LinearProgram dual = build_cut_dual(net);
    write_lp(std::cout, dual);
    if (solve) {
      const auto p = simplex_solve(primal), d = simplex_solve(dual);
      std::cerr << "primal=" << status_name(p.status) << " value=" << p.value << '\n';
      std::cerr << "dual=" << status_name(d.status) << " value=" << d.value << '\n';
    }
    return kOk;
  }
  auto in = open_input(path);
  const LinearProgram primal = read_lp(in);
  const LinearProgram dual = build_dual(primal);
  write_lp(std::cout, dual);
  if (solve) {
    const auto p = simplex_solve(primal), d = simplex_solve(dual);
    std::cerr << "primal=" << status_name(p.status) << " value=" << p.value << '\n';
    std::cerr << "dual=" << status_name(d.status) << " value=" << d.value << '\n';
    if (p.status != LPStatus::kOptimal) return kViolation;
  }
  return kOk;
}

int run_tu_check(const std::string& path, bool hnet, std::uint64_t budget) {
  IntMatrix m;
  if (hnet) {
    const HNetwork net = load_hnet(path);
    m = net.boundary();
    if (net.complex.dimension() == 2 && net.facet_count() <= 12) {
      const auto cert = tu_certificate_via_tree(net.complex);
      if (cert) {
        std::cout << "tree-certificate";
        for (std::size_t f : *cert) std::cout << ' ' << f + 1;
        std::cout << '\n';
      }
    }
  } else {
    auto in = open_input(path);
    m = read_int_matrix(in);
  }
  const TUResult r = is_totally_unimodular(m, budget);
  std::cerr << "rows=" << m.rows() << " cols=" << m.cols() << '\n';
  if (r.unimodular) {
    std::cout << "tu yes\n";
    return kOk;
  }
  std::cout << "tu no\n";
  std::cout << "rows";
  for (auto i : r.witness->rows) std::cout << ' ' << i + 1;
  std::cout << "\ncols";
  for (auto j : r.witness->cols) std::cout << ' ' << j + 1;
  std::cout << "\ndet " << r.witness->determinant << '\n';
  return kViolation;
}

int run_matching(const std::string& path) {
  auto in = open_input(path);
  const BipartiteGraph g = read_bipartite(in);
  const auto r = perfect_matching(g);
  write_matching(std::cout, r, g);
  return r.perfect ? kOk : kViolation;
}

int run_chains(const std::string& path) {
  auto in = open_input(path);
  const Poset p = read_poset(in);
  try {
    const auto chains = max_disjoint_chains(p);
    write_chains(std::cout, p, chains);
    std::cerr << "chains=" << chains.size() << '\n';
  } catch (const FlowError& e) {
    if (e.code() != ErrorCode::kNotBounded) throw;
    std::cout << "not-bounded\n";
    std::cerr << e.what() << '\n';
    return kViolation;
  }
  return kOk;
}

int run_segment(const std::string& path, const std::string& lambda_text, const std::string& output) {
  const auto lambda = parse_rational(lambda_text);
  if (!lambda || *lambda < 0) throw std::runtime_error("--lambda must be a non-negative rational");
  auto in = open_input(path);
  const GrayImage g = read_pgm(in);
  const PixelImage img = image_from_gray(g, *lambda);
  const Segmentation seg = segment_image(img);
  std::cerr << "score=" << seg.score << " cost=" << seg.cost << " total=" << seg.total << " cut=" << seg.cut_value
            << '\n';
  if (output.empty()) {
    write_pbm(std::cout, g.width, g.height, seg.foreground);
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write " + output);
    write_pbm(out, g.width, g.height, seg.foreground);
  }
  return kOk;
}

int run_hflow(const std::string& path, const std::string& method) {
  const HNetwork net = load_hnet(path);
  if (method == "augment") {
    const auto r = hmaxflow_augment(net);
    for (std::size_t i = 0; i < r.trace.size(); ++i)
      std::cerr << "augmentation=" << i + 1 << " step=" << r.trace[i].step
                << " value=" << r.trace[i].value_after << '\n';
    if (r.status == LPStatus::kUnbounded) {
      std::cout << "unbounded\n";
      return kViolation;
    }
    if (r.capped) std::cerr << "iteration cap reached\n";
    write_hflow(std::cout, net, r.flow);
    return kOk;
  }
  const auto r = hmaxflow_lp(net);
  std::cerr << "status=" << status_name(r.status) << '\n';
  if (r.status != LPStatus::kOptimal) {
    std::cout << status_name(r.status) << '\n';
    return kViolation;
  }
  write_hflow(std::cout, net, r.flow);
  return kOk;
}

void print_cut(const HNetwork& net, const HCutResult& r) {
  for (std::size_t j = 0; j < r.eta.size(); ++j)
    if (r.eta[j] != 0) std::cout << "eta " << j + 1 << ' ' << to_string(r.eta[j]) << '\n';
  std::cout << "capacity " << to_string(r.capacity) << '\n';
  std::cout << "feasible " << (r.feasible ? 1 : 0) << '\n';
  (void)net;
}

int run_hcut(const std::string& path, const std::vector<int>& sink_faces, bool all) {
  const HNetwork net = load_hnet(path);
  for (std::size_t i = 0; i < net.face_count(); ++i) {
    std::cout << "face " << i + 1;
    for (int v : net.faces[i]) std::cout << ' ' << v;
    std::cout << '\n';
  }
  if (all) {
    if (net.face_count() > 20) throw FlowError(ErrorCode::kBudgetExceeded, "too many faces to enumerate cuts");
    std::optional<HCutResult> best;
    std::vector<bool> best_side;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << net.face_count()); ++mask) {
      std::vector<bool> side(net.face_count());
      for (std::size_t i = 0; i < side.size(); ++i) side[i] = mask >> i & 1;
      auto r = hcut_capacity(net, side);
      if (!best || r.capacity < best->capacity) {
        best = std::move(r);
        best_side = side;
      }
    }
    std::cout << "sink-side";
    for (std::size_t i = 0; i < best_side.size(); ++i)
      if (best_side[i]) std::cout << ' ' << i + 1;
    std::cout << '\n';
    print_cut(net, *best);
    return kOk;
  }
  std::vector<bool> side(net.face_count(), false);
  for (int f : sink_faces) {
    if (f < 1 || static_cast<std::size_t>(f) > side.size()) throw std::runtime_error("face index out of range");
    side[static_cast<std::size_t>(f - 1)] = true;
  }
  const auto r = hcut_capacity(net, side);
  print_cut(net, r);
  return r.feasible ? kOk : kViolation;
}

int run_probe(std::uint64_t seed, std::size_t trials, std::size_t max_facets, const std::string& replay) {
  if (!replay.empty()) {
    const HNetwork net = load_hnet(replay);
    ProbeReport report;
    report.trials = 1;
    report.records.push_back(probe_instance(net));
    if (report.records[0].fixpoint_value < report.records[0].lp_value) report.discrepancies.push_back(0);
    write_probe_report(std::cout, report);
    return kOk;
  }
  const auto report = conjecture_probe(seed, trials, max_facets);
  write_probe_report(std::cout, report);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum flow, minimum cut, and higher-dimensional flow toolkit"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 1 violation or infeasible result, 2 input error.\n"
             "Results go to stdout; diagnostics and statistics (key=value) go to stderr.");
  std::string input;
  std::function<int()> action;

  auto* maxflow = app.add_subcommand("maxflow", "Maximum flow on a DIMACS network");
  std::string algo = "ek";
  bool instrumented = false, antiparallel = false;
  maxflow->add_option("input", input, "DIMACS network")->required()->check(CLI::ExistingFile);
  maxflow->add_option("--algo", algo, "ek, pr, hoch, or all")->check(CLI::IsMember({"ek", "pr", "hoch", "all"}));
  maxflow->add_flag("--instrumented", instrumented, "Check solver invariants after every step");
  maxflow->add_flag("--allow-antiparallel", antiparallel, "Subdivide antiparallel arc pairs");
  maxflow->footer(kDimacsGrammar);
  maxflow->callback([&] { action = [&] { return run_maxflow(input, algo, instrumented, antiparallel); }; });

  auto* mincut = app.add_subcommand("mincut", "Minimum cut from a maximum flow");
  mincut->add_option("input", input, "DIMACS network")->required()->check(CLI::ExistingFile);
  mincut->add_flag("--allow-antiparallel", antiparallel, "Subdivide antiparallel arc pairs");
  mincut->footer(std::string(kDimacsGrammar) + "\nOutput:\n  cut <v> ...              source side\n  capacity <value>");
  mincut->callback([&] { action = [&] { return run_mincut(input, antiparallel); }; });

  auto* decomp = app.add_subcommand("decompose", "Path and cycle decomposition of a flow");
  std::string flow_path;
  decomp->add_option("input", input, "DIMACS network")->required()->check(CLI::ExistingFile);
  decomp->add_option("--flow", flow_path, "Flow file to decompose (default: a maximum flow)")
      ->check(CLI::ExistingFile);
  decomp->add_flag("--allow-antiparallel", antiparallel, "Subdivide antiparallel arc pairs");
  decomp->footer(std::string(kDimacsGrammar) +
                 "\nOutput:\n  path <amount> <v> ...\n  cycle <amount> <v> ... <v1>");
  decomp->callback([&] { action = [&] { return run_decompose(input, flow_path, antiparallel); }; });

  auto* lpdual = app.add_subcommand("lp-dual", "Dual of an LP, or the flow LP pair of a network");
  bool from_network = false, solve = false;
  lpdual->add_option("input", input, "LP file (or DIMACS with --network)")->required()->check(CLI::ExistingFile);
  lpdual->add_flag("--network", from_network, "Input is a DIMACS network; print its flow LP and reduced dual");
  lpdual->add_flag("--solve", solve, "Solve both programs and report optima on stderr");
  lpdual->footer(kLpGrammar);
  lpdual->callback([&] { action = [&] { return run_lp_dual(input, from_network, solve); }; });

  auto* tu = app.add_subcommand("tu-check", "Total unimodularity test");
  bool hnet_input = false;
  std::uint64_t budget = 10'000'000;
  tu->add_option("input", input, "Integer matrix file")->required()->check(CLI::ExistingFile);
  tu->add_flag("--hnet", hnet_input, "Input is a network complex");
  tu->add_option("--budget", budget, "Maximum number of square submatrices");
  tu->footer(std::string(kMatrixGrammar) + "\nOutput:\n  tu yes | tu no, then rows/cols/det of a violating submatrix");
  tu->callback([&] { action = [&] { return run_tu_check(input, hnet_input, budget); }; });

  auto* matching = app.add_subcommand("matching", "Bipartite perfect matching or a Hall violation");
  matching->add_option("input", input, "Bipartite graph file")->required()->check(CLI::ExistingFile);
  matching->footer(kBipartiteGrammar);
  matching->callback([&] { action = [&] { return run_matching(input); }; });

  auto* chains = app.add_subcommand("chains", "Maximum set of cover-disjoint maximal chains");
  chains->add_option("input", input, "Poset file")->required()->check(CLI::ExistingFile);
  chains->footer(kPosetGrammar);
  chains->callback([&] { action = [&] { return run_chains(input); }; });

  auto* segment = app.add_subcommand("segment", "Foreground/background segmentation by minimum cut");
  std::string lambda = "0", output;
  segment->add_option("input", input, "PGM P2 image")->required()->check(CLI::ExistingFile);
  segment->add_option("--lambda", lambda, "Neighbor penalty (rational)");
  segment->add_option("-o,--output", output, "PBM output path (default stdout)");
  segment->footer(kImageGrammar);
  segment->callback([&] { action = [&] { return run_segment(input, lambda, output); }; });

  auto* hflow = app.add_subcommand("hflow", "Maximum flow on a network complex");
  std::string method = "lp";
  hflow->add_option("input", input, "Network complex file")->required()->check(CLI::ExistingFile);
  hflow->add_option("--method", method, "lp or augment")->check(CLI::IsMember({"lp", "augment"}));
  hflow->footer(kHnetGrammar);
  hflow->callback([&] { action = [&] { return run_hflow(input, method); }; });

  auto* hcut = app.add_subcommand("hcut", "Capacity of a face partition of a network complex");
  std::vector<int> sink_faces;
  bool all_cuts = false;
  hcut->add_option("input", input, "Network complex file")->required()->check(CLI::ExistingFile);
  hcut->add_option("--sink-side", sink_faces, "Faces (1-based, as listed) placed in S'");
  hcut->add_flag("--all", all_cuts, "Enumerate every partition and report one of least capacity");
  hcut->footer(std::string(kHnetGrammar) +
               "\nOutput:\n  face <i> <v> ...         the face enumeration\n"
               "  eta <facet> <value>      nonzero facet weights\n  capacity <value|inf>\n  feasible <0|1>");
  hcut->callback([&] { action = [&] { return run_hcut(input, sink_faces, all_cuts); }; });

  auto* probe = app.add_subcommand("conjecture-probe", "Compare augmentation fixpoints with LP optima");
  std::uint64_t seed = 1;
  std::size_t trials = 100, max_facets = 8;
  std::string replay;
  probe->add_option("--seed", seed, "Base seed");
  probe->add_option("--trials", trials, "Number of random instances");
  probe->add_option("--max-facets", max_facets, "Facet limit per instance")->check(CLI::Range(4, 20));
  probe->add_option("--replay", replay, "Re-run a serialized instance instead")->check(CLI::ExistingFile);
  probe->footer(std::string(kHnetGrammar) +
                "\nReport:\n  probe seed <s> trials <n> discrepancies <k>\n"
                "  trial <i> lp <v> fixpoint <v> augmentations <a> capped <0|1>\n"
                "  discrepancy <i> lp <v> fixpoint <v>, then begin-instance ... end-instance");
  probe->callback([&] { action = [&] { return run_probe(seed, trials, max_facets, replay); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const FlowError& e) {
    std::cerr << e.what();
    if (!e.witness().empty()) {
      std::cerr << " [";
      for (std::size_t i = 0; i < e.witness().size(); ++i) std::cerr << (i ? " " : "") << e.witness()[i] + 1;
      std::cerr << ']';
    }
    std::cerr << '\n';
    if (e.code() == ErrorCode::kSourceConditionViolated) {
      std::cout << "source-condition-violated";
      for (int f : e.witness()) std::cout << ' ' << f + 1;
      std::cout << '\n';
      return kViolation;
    }
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
