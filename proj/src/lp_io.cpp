#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "flowkit/error.hpp"
#include "flowkit/lp.hpp"

namespace flowkit {

void write_lp(std::ostream& out, const LinearProgram& lp) {
  lp.check_shape();
  out << (lp.sense == Sense::kMaximize ? "max" : "min") << '\n';
  out << 'c';
  for (const auto& c : lp.objective) out << ' ' << to_string(c);
  out << '\n';
  for (std::size_t i = 0; i < lp.row_count(); ++i) {
    out << 'a';
    for (std::size_t j = 0; j < lp.variable_count(); ++j) out << ' ' << to_string(lp.constraints(i, j));
    out << " | " << to_string(lp.bounds[i]) << '\n';
  }
  out << "nonneg";
  for (bool b : lp.nonnegative) out << ' ' << (b ? 1 : 0);
  out << '\n';
}

namespace {

Rational field(const std::string& token, int line) {
  auto value = parse_rational(token);
  if (!value) throw ParseError(line, "bad number '" + token + "'");
  return *value;
}

}  // namespace

LinearProgram read_lp(std::istream& in) {
  LinearProgram lp;
  bool have_sense = false, have_objective = false, have_nonneg = false;
  std::vector<std::vector<Rational>> rows;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::istringstream ss(text);
    std::string tag;
    if (!(ss >> tag) || tag[0] == '#') continue;
    if (tag == "max" || tag == "min") {
      if (have_sense) throw ParseError(line, "duplicate sense line");
      lp.sense = tag == "max" ? Sense::kMaximize : Sense::kMinimize;
      have_sense = true;
      std::string extra;
      if (ss >> extra) throw ParseError(line, "trailing text after sense");
    } else if (tag == "c") {
      if (have_objective) throw ParseError(line, "duplicate objective line");
      std::string tok;
      while (ss >> tok) lp.objective.push_back(field(tok, line));
      have_objective = true;
    } else if (tag == "a") {
      std::vector<Rational> row;
      std::string tok;
      bool bar = false;
      while (ss >> tok) {
        if (tok == "|") {
          if (!(ss >> tok)) throw ParseError(line, "missing right-hand side");
          lp.bounds.push_back(field(tok, line));
          bar = true;
          if (ss >> tok) throw ParseError(line, "trailing text after right-hand side");
          break;
        }
        row.push_back(field(tok, line));
      }
      if (!bar) throw ParseError(line, "row lacks '| b'");
      if (have_objective && row.size() != lp.objective.size())
        throw ParseError(line, "row length differs from objective length");
      rows.push_back(std::move(row));
    } else if (tag == "nonneg") {
      if (have_nonneg) throw ParseError(line, "duplicate nonneg line");
      std::string tok;
      while (ss >> tok) {
        if (tok != "0" && tok != "1") throw ParseError(line, "nonneg flags must be 0 or 1");
        lp.nonnegative.push_back(tok == "1");
      }
      have_nonneg = true;
    } else {
      throw ParseError(line, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_sense) throw ParseError(line, "missing max/min line");
  if (!have_objective) throw ParseError(line, "missing objective line");
  const std::size_t n = lp.objective.size();
  if (!have_nonneg) lp.nonnegative.assign(n, true);
  if (lp.nonnegative.size() != n) throw ParseError(line, "nonneg flag count differs from variable count");
  lp.constraints = Matrix<Rational>(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw ParseError(line, "row length differs from objective length");
    for (std::size_t j = 0; j < n; ++j) lp.constraints(i, j) = rows[i][j];
  }
  return lp;
}

IntMatrix read_int_matrix(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::istringstream ss(text);
    std::vector<int> row;
    std::string tok;
    while (ss >> tok) {
      if (tok[0] == '#') break;
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw ParseError(line, "bad integer '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError(line, "bad integer '" + tok + "'");
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError(line, "ragged matrix row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

void write_int_matrix(std::ostream& out, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

}  // namespace flowkit
