#include "flowkit/dimacs.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "flowkit/error.hpp"

namespace flowkit {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> words;
  for (std::string w; is >> w;) words.push_back(w);
  return words;
}

int parse_id(const std::string& word, int line) {
  auto r = parse_rational(word);
  if (!r || !is_integer(*r) || !r->get_num().fits_sint_p() || *r < 1)
    throw ParseError(line, "expected a positive vertex id, got '" + word + "'");
  return static_cast<int>(r->get_num().get_si());
}

Rational parse_value(const std::string& word, int line) {
  auto r = parse_rational(word);
  if (!r) throw ParseError(line, "expected an integer or p/q rational, got '" + word + "'");
  return *r;
}

}  // namespace

Network read_dimacs(std::istream& in, bool allow_antiparallel) {
  std::optional<int> n, m, source, sink;
  std::vector<ArcSpec> arcs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto words = split_words(line);
    if (words.empty() || words[0] == "c") continue;
    const std::string& tag = words[0];
    if (tag == "p") {
      if (n) throw ParseError(lineno, "duplicate problem line");
      if (words.size() != 4 || words[1] != "max") throw ParseError(lineno, "expected 'p max <n> <m>'");
      n = parse_id(words[2], lineno);
      auto mv = parse_rational(words[3]);
      if (!mv || !is_integer(*mv) || *mv < 0) throw ParseError(lineno, "bad arc count");
      m = static_cast<int>(mv->get_num().get_si());
    } else if (tag == "n") {
      if (!n) throw ParseError(lineno, "node line before problem line");
      if (words.size() != 3 || (words[2] != "s" && words[2] != "t"))
        throw ParseError(lineno, "expected 'n <id> s|t'");
      const int id = parse_id(words[1], lineno);
      if (id > *n) throw ParseError(lineno, "vertex id out of range");
      auto& slot = words[2] == "s" ? source : sink;
      if (slot) throw ParseError(lineno, "duplicate " + words[2] + " designation");
      slot = id - 1;
    } else if (tag == "a") {
      if (!n) throw ParseError(lineno, "arc line before problem line");
      if (words.size() != 4) throw ParseError(lineno, "expected 'a <u> <v> <cap>'");
      const int u = parse_id(words[1], lineno);
      const int v = parse_id(words[2], lineno);
      if (u > *n || v > *n) throw ParseError(lineno, "vertex id out of range");
      Rational cap = parse_value(words[3], lineno);
      if (cap < 0) throw ParseError(lineno, "negative capacity");
      arcs.push_back({u - 1, v - 1, Capacity(cap)});
    } else {
      throw ParseError(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (!n) throw ParseError(lineno, "missing problem line");
  if (!source || !sink) throw ParseError(lineno, "missing source or sink designation");
  if (static_cast<int>(arcs.size()) != *m)
    throw ParseError(lineno, "problem line declares " + std::to_string(*m) + " arcs, found " +
                                 std::to_string(arcs.size()));
  return Network::build(*n, *source, *sink, arcs, allow_antiparallel);
}

void write_dimacs(std::ostream& out, const Network& net, const std::string& comment) {
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p max " << net.vertex_count() << ' ' << net.arc_count() << '\n';
  out << "n " << net.source() + 1 << " s\n";
  out << "n " << net.sink() + 1 << " t\n";
  for (const Arc& a : net.arcs()) {
    if (a.capacity.is_unbounded()) throw FlowError(ErrorCode::kUnboundedCapacity, "DIMACS cannot encode infinity");
    out << "a " << a.tail + 1 << ' ' << a.head + 1 << ' ' << to_string(a.capacity.value()) << '\n';
  }
}

void write_flow(std::ostream& out, const Network& net, const FlowAssignment& f) {
  for (int e = 0; e < net.arc_count(); ++e) {
    const Rational& x = f.arc_flow[static_cast<std::size_t>(e)];
    if (x > 0) out << "f " << net.arc(e).tail + 1 << ' ' << net.arc(e).head + 1 << ' ' << to_string(x) << '\n';
  }
  out << "s " << to_string(source_outflow(net, f)) << '\n';
}

FlowAssignment read_flow(std::istream& in, const Network& net) {
  FlowAssignment f = FlowAssignment::zero(net);
  std::string line;
  int lineno = 0;
  bool saw_value = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto words = split_words(line);
    if (words.empty() || words[0] == "c") continue;
    if (words[0] == "f" && words.size() == 4) {
      const int u = parse_id(words[1], lineno) - 1;
      const int v = parse_id(words[2], lineno) - 1;
      auto e = net.find_arc(u, v);
      if (!e) throw ParseError(lineno, "flow on a pair that is not an arc");
      f.arc_flow[static_cast<std::size_t>(*e)] = parse_value(words[3], lineno);
    } else if (words[0] == "s" && words.size() == 2) {
      parse_value(words[1], lineno);
      saw_value = true;
    } else {
      throw ParseError(lineno, "expected 'f <u> <v> <value>' or 's <value>'");
    }
  }
  if (!saw_value) throw ParseError(lineno, "missing 's' line");
  return f;
}

}  // namespace flowkit
