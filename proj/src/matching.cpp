#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "flowkit/apps.hpp"
#include "flowkit/decompose.hpp"
#include "flowkit/error.hpp"
#include "flowkit/solvers.hpp"

namespace flowkit {

MatchingResult perfect_matching(const BipartiteGraph& g) {
  const int n = g.n;
  if (n < 0) throw FlowError(ErrorCode::kInvalidVertex, "negative part size");
  MatchingResult result;
  if (n == 0) {
    result.perfect = true;
    return result;
  }
  // s = 0, V = 1..n, W = n+1..2n, t = 2n+1.
  const int s = 0, t = 2 * n + 1;
  std::set<std::pair<int, int>> edges;
  for (const auto& [v, w] : g.edges) {
    if (v < 0 || v >= n || w < 0 || w >= n)
      throw FlowError(ErrorCode::kInvalidVertex, "edge endpoint outside the parts", {v, w});
    edges.insert({v, w});
  }
  std::vector<ArcSpec> arcs;
  for (int v = 0; v < n; ++v) arcs.push_back({s, v + 1, Capacity(1)});
  for (const auto& [v, w] : edges) arcs.push_back({v + 1, n + 1 + w, Capacity(n + 1)});
  for (int w = 0; w < n; ++w) arcs.push_back({n + 1 + w, t, Capacity(1)});
  const Network net = Network::build(2 * n + 2, s, t, arcs);
  const auto flow = edmonds_karp(net);

  if (flow.value == n) {
    result.perfect = true;
    result.mate.assign(static_cast<std::size_t>(n), -1);
    for (int e = 0; e < net.arc_count(); ++e) {
      const Arc& a = net.arc(e);
      if (a.tail >= 1 && a.tail <= n && flow.flow.arc_flow[static_cast<std::size_t>(e)] == 1)
        result.mate[static_cast<std::size_t>(a.tail - 1)] = a.head - n - 1;
    }
    return result;
  }
  const Cut cut = min_cut_from_flow(net, flow.flow);
  for (int v = 0; v < n; ++v)
    if (cut.contains(v + 1)) result.violation.push_back(v);
  return result;
}

std::vector<int> neighborhood(const BipartiteGraph& g, const std::vector<int>& s) {
  std::set<int> in(s.begin(), s.end());
  std::set<int> out;
  for (const auto& [v, w] : g.edges)
    if (in.contains(v)) out.insert(w);
  return {out.begin(), out.end()};
}

BipartiteGraph read_bipartite(std::istream& in) {
  BipartiteGraph g;
  bool header = false;
  std::string text;
  int line = 0;
  auto number = [&](const std::string& tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError(line, "bad integer '" + tok + "'");
    return v;
  };
  while (std::getline(in, text)) {
    ++line;
    std::istringstream ss(text);
    std::vector<std::string> tok;
    for (std::string w; ss >> w;) {
      if (w[0] == '#') break;
      tok.push_back(w);
    }
    if (tok.empty()) continue;
    if (tok[0] == "bip") {
      if (header) throw ParseError(line, "duplicate header");
      if (tok.size() != 2) throw ParseError(line, "expected 'bip <n>'");
      g.n = number(tok[1]);
      if (g.n < 0) throw ParseError(line, "negative part size");
      header = true;
    } else if (tok[0] == "e") {
      if (!header) throw ParseError(line, "edge before 'bip <n>' header");
      if (tok.size() != 3) throw ParseError(line, "expected 'e <v> <w>'");
      const int v = number(tok[1]), w = number(tok[2]);
      if (v < 1 || v > g.n || w < 1 || w > g.n) throw ParseError(line, "endpoint out of range");
      g.edges.emplace_back(v - 1, w - 1);
    } else {
      throw ParseError(line, "unknown line tag '" + tok[0] + "'");
    }
  }
  if (!header) throw ParseError(line, "missing 'bip <n>' header");
  return g;
}

void write_matching(std::ostream& out, const MatchingResult& r, const BipartiteGraph& g) {
  if (r.perfect) {
    for (std::size_t v = 0; v < r.mate.size(); ++v) out << "match " << v + 1 << ' ' << r.mate[v] + 1 << '\n';
    return;
  }
  out << "violation";
  for (int v : r.violation) out << ' ' << v + 1;
  out << "\nneighbors";
  for (int w : neighborhood(g, r.violation)) out << ' ' << w + 1;
  out << '\n';
}

}  // namespace flowkit
