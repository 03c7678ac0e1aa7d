#include <cctype>
#include <istream>
#include <ostream>
#include <string>

#include "flowkit/apps.hpp"
#include "flowkit/error.hpp"

namespace flowkit {

namespace {

/// Whitespace-separated tokens with `#` comments running to end of line.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  std::string next(const char* what) {
    std::string tok;
    char c;
    while (in_.get(c)) {
      if (c == '\n') ++line_;
      if (c == '#') {
        std::string rest;
        std::getline(in_, rest);
        ++line_;
        if (!tok.empty()) return tok;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!tok.empty()) return tok;
        continue;
      }
      tok += c;
    }
    if (tok.empty()) throw ParseError(line_, std::string("unexpected end of input, expected ") + what);
    return tok;
  }

  int integer(const char* what) {
    const std::string tok = next(what);
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0) throw ParseError(line_, std::string("bad ") + what + " '" + tok + "'");
    return v;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 1;
};

}  // namespace

GrayImage read_pgm(std::istream& in) {
  TokenReader r(in);
  if (r.next("magic number") != "P2") throw ParseError(r.line(), "expected P2 magic number");
  GrayImage g;
  g.width = r.integer("width");
  g.height = r.integer("height");
  g.maxval = r.integer("maxval");
  if (g.width < 1 || g.height < 1) throw ParseError(r.line(), "empty image");
  if (g.maxval < 1 || g.maxval > 65535) throw ParseError(r.line(), "maxval out of range");
  for (int i = 0; i < g.width * g.height; ++i) {
    const int v = r.integer("pixel value");
    if (v > g.maxval) throw ParseError(r.line(), "pixel value above maxval");
    g.pixels.push_back(v);
  }
  return g;
}

PixelImage image_from_gray(const GrayImage& g, const Rational& lambda) {
  PixelImage img;
  img.width = g.width;
  img.height = g.height;
  for (int v : g.pixels) {
    Rational a(v, g.maxval);
    a.canonicalize();
    img.b.push_back(1 - a);
    img.a.push_back(std::move(a));
  }
  img.horizontal.assign(static_cast<std::size_t>((g.width - 1) * g.height), lambda);
  img.vertical.assign(static_cast<std::size_t>(g.width * (g.height - 1)), lambda);
  return img;
}

void write_pbm(std::ostream& out, int width, int height, const std::vector<bool>& foreground) {
  out << "P1\n" << width << ' ' << height << '\n';
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x)
      out << (x ? " " : "") << (foreground[static_cast<std::size_t>(y * width + x)] ? 1 : 0);
    out << '\n';
  }
}

}  // namespace flowkit
