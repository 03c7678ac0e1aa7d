#include <istream>
#include <ostream>
#include <sstream>

#include "flowkit/error.hpp"
#include "flowkit/simplicial.hpp"

namespace flowkit {

namespace {

int parse_vertex(const std::string& token, int line) {
  std::size_t used = 0;
  long v = -1;
  try {
    v = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || v < 0 || v > 1'000'000'000) throw ParseError(line, "bad vertex '" + token + "'");
  return static_cast<int>(v);
}

}  // namespace

HNetwork read_hnet(std::istream& in) {
  int dimension = -1;
  std::vector<Simplex> facets;
  std::vector<Capacity> caps;
  std::optional<std::size_t> source;
  std::string text;
  int line = 0;
  int last_line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::istringstream ss(text);
    std::vector<std::string> tok;
    for (std::string w; ss >> w;) {
      if (w[0] == '#') break;
      tok.push_back(w);
    }
    if (tok.empty()) continue;
    last_line = line;
    if (tok[0] == "hnet") {
      if (dimension >= 0) throw ParseError(line, "duplicate header");
      if (tok.size() != 3 || tok[1] != "dim") throw ParseError(line, "expected 'hnet dim <d>'");
      dimension = parse_vertex(tok[2], line);
      if (dimension < 1) throw ParseError(line, "dimension must be at least 1");
      continue;
    }
    if (dimension < 0) throw ParseError(line, "missing 'hnet dim <d>' header");
    const std::size_t width = static_cast<std::size_t>(dimension) + 1;
    if (tok[0] == "t") {
      if (source) throw ParseError(line, "second source facet");
      if (tok.size() != width + 1) throw ParseError(line, "source facet needs d+1 vertices");
      Simplex s;
      for (std::size_t i = 1; i <= width; ++i) s.push_back(parse_vertex(tok[i], line));
      source = facets.size();
      facets.push_back(std::move(s));
      caps.push_back(Capacity::unbounded());
    } else if (tok[0] == "f") {
      if (tok.size() != width + 2) throw ParseError(line, "facet needs d+1 vertices and a capacity");
      Simplex s;
      for (std::size_t i = 1; i <= width; ++i) s.push_back(parse_vertex(tok[i], line));
      const std::string& c = tok[width + 1];
      if (c == "inf") {
        caps.push_back(Capacity::unbounded());
      } else {
        auto value = parse_rational(c);
        if (!value) throw ParseError(line, "bad capacity '" + c + "'");
        if (*value < 0) throw ParseError(line, "negative capacity");
        caps.push_back(Capacity(*value));
      }
      facets.push_back(std::move(s));
    } else {
      throw ParseError(line, "unknown line tag '" + tok[0] + "'");
    }
  }
  if (dimension < 0) throw ParseError(line, "missing 'hnet dim <d>' header");
  if (!source) throw ParseError(last_line, "missing source facet 't'");
  OrientedComplex complex;
  try {
    complex = OrientedComplex::build(dimension, std::move(facets));
  } catch (const FlowError& e) {
    throw ParseError(last_line, e.what());
  }
  return build_hnetwork(std::move(complex), *source, std::move(caps));
}

void write_hnet(std::ostream& out, const HNetwork& net) {
  out << "hnet dim " << net.complex.dimension() << '\n';
  for (std::size_t j = 0; j < net.facet_count(); ++j) {
    out << (j == net.source ? 't' : 'f');
    for (int v : net.complex.facet(j)) out << ' ' << v;
    if (j != net.source) out << ' ' << to_string(net.capacity[j]);
    out << '\n';
  }
}

std::string to_hnet_string(const HNetwork& net) {
  std::ostringstream ss;
  write_hnet(ss, net);
  return ss.str();
}

void write_hflow(std::ostream& out, const HNetwork& net, const std::vector<Rational>& f) {
  for (std::size_t j = 0; j < f.size(); ++j) out << "hf " << j + 1 << ' ' << to_string(f[j]) << '\n';
  out << "s " << to_string(f[net.source]) << '\n';
}

}  // namespace flowkit
