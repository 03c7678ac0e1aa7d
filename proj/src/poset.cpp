#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "flowkit/apps.hpp"
#include "flowkit/decompose.hpp"
#include "flowkit/error.hpp"
#include "flowkit/solvers.hpp"

namespace flowkit {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

}  // namespace

Poset Poset::build(std::vector<std::string> names, const std::vector<std::pair<int, int>>& relations,
                   std::optional<int> bottom, std::optional<int> top) {
  const int n = static_cast<int>(names.size());
  Poset p;
  p.names_ = std::move(names);
  p.less_.assign(at(n), std::vector<bool>(at(n), false));
  for (const auto& [lo, hi] : relations) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n) throw FlowError(ErrorCode::kMalformed, "relation names an unknown element");
    p.less_[at(lo)][at(hi)] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.less_[at(i)][at(k)])
        for (int j = 0; j < n; ++j)
          if (p.less_[at(k)][at(j)]) p.less_[at(i)][at(j)] = true;
  for (int i = 0; i < n; ++i)
    if (p.less_[at(i)][at(i)]) throw FlowError(ErrorCode::kMalformed, "order relation has a cycle", {i});

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!p.less_[at(i)][at(j)]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k) cover = !(p.less_[at(i)][at(k)] && p.less_[at(k)][at(j)]);
      if (cover) p.covers_.emplace_back(i, j);
    }

  auto least = [&](int v) {
    for (int u = 0; u < n; ++u)
      if (u != v && !p.less_[at(v)][at(u)]) return false;
    return true;
  };
  auto greatest = [&](int v) {
    for (int u = 0; u < n; ++u)
      if (u != v && !p.less_[at(u)][at(v)]) return false;
    return true;
  };
  for (auto* end : {&bottom, &top})
    if (*end && (**end < 0 || **end >= n)) throw FlowError(ErrorCode::kMalformed, "bottom or top is not an element");
  if (bottom && least(*bottom)) p.bottom_ = bottom;
  if (top && greatest(*top)) p.top_ = top;
  for (int v = 0; v < n; ++v) {
    if (!bottom && least(v)) p.bottom_ = v;
    if (!top && greatest(v)) p.top_ = v;
  }
  return p;
}

bool Poset::covers(int lo, int hi) const {
  if (!less(lo, hi)) return false;
  for (int k = 0; k < size(); ++k)
    if (less(lo, k) && less(k, hi)) return false;
  return true;
}

bool is_maximal_chain(const Poset& p, const std::vector<int>& chain) {
  if (!p.bottom() || !p.top() || chain.size() < 2) return false;
  if (chain.front() != *p.bottom() || chain.back() != *p.top()) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!p.covers(chain[i], chain[i + 1])) return false;
  return true;
}

std::vector<std::vector<int>> max_disjoint_chains(const Poset& p) {
  if (!p.bottom() || !p.top() || *p.bottom() == *p.top())
    throw FlowError(ErrorCode::kNotBounded, "poset needs a least and a distinct greatest element");
  std::vector<ArcSpec> arcs;
  for (const auto& [lo, hi] : p.cover_pairs()) arcs.push_back({lo, hi, Capacity(1)});
  const Network net = Network::build(p.size(), *p.bottom(), *p.top(), arcs);
  const auto flow = edmonds_karp(net);
  std::vector<std::vector<int>> chains;
  for (const auto& c : decompose(net, flow.flow))
    for (Rational k = 0; k < c.amount; ++k) chains.push_back(c.vertices);
  return chains;
}

Poset read_poset(std::istream& in) {
  std::vector<std::string> names;
  std::map<std::string, int> id;
  std::vector<std::pair<int, int>> relations;
  std::optional<int> bottom, top;
  std::string text;
  int line = 0;
  auto lookup = [&](const std::string& name) {
    auto it = id.find(name);
    if (it == id.end()) throw ParseError(line, "unknown element '" + name + "'");
    return it->second;
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
    if (tok[0] == "el") {
      if (tok.size() != 2) throw ParseError(line, "expected 'el <name>'");
      if (!id.emplace(tok[1], static_cast<int>(names.size())).second)
        throw ParseError(line, "duplicate element '" + tok[1] + "'");
      names.push_back(tok[1]);
    } else if (tok[0] == "cover") {
      if (tok.size() != 3) throw ParseError(line, "expected 'cover <lo> <hi>'");
      relations.emplace_back(lookup(tok[1]), lookup(tok[2]));
    } else if (tok[0] == "bottom" || tok[0] == "top") {
      if (tok.size() != 2) throw ParseError(line, "expected '" + tok[0] + " <name>'");
      auto& slot = tok[0] == "bottom" ? bottom : top;
      if (slot) throw ParseError(line, "duplicate '" + tok[0] + "'");
      slot = lookup(tok[1]);
    } else {
      throw ParseError(line, "unknown line tag '" + tok[0] + "'");
    }
  }
  try {
    Poset p = Poset::build(std::move(names), relations, bottom, top);
    if (bottom && p.bottom() != bottom) throw ParseError(line, "declared bottom is not below every element");
    if (top && p.top() != top) throw ParseError(line, "declared top is not above every element");
    return p;
  } catch (const ParseError&) {
    throw;
  } catch (const FlowError& e) {
    throw ParseError(line, e.what());
  }
}

void write_chains(std::ostream& out, const Poset& p, const std::vector<std::vector<int>>& chains) {
  for (const auto& c : chains) {
    out << "chain";
    for (int v : c) out << ' ' << p.name(v);
    out << '\n';
  }
}

}  // namespace flowkit
