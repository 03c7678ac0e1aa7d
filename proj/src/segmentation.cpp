#include "flowkit/apps.hpp"
#include "flowkit/decompose.hpp"
#include "flowkit/error.hpp"
#include "flowkit/solvers.hpp"

namespace flowkit {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

}  // namespace

void PixelImage::check() const {
  if (width < 1 || height < 1) throw FlowError(ErrorCode::kMalformed, "image must have at least one pixel");
  const std::size_t n = at(pixel_count());
  if (a.size() != n || b.size() != n) throw FlowError(ErrorCode::kMalformed, "one probability pair per pixel");
  if (horizontal.size() != at((width - 1) * height) || vertical.size() != at(width * (height - 1)))
    throw FlowError(ErrorCode::kMalformed, "penalty arrays have the wrong size");
  for (std::size_t v = 0; v < n; ++v)
    if (a[v] < 0 || a[v] > 1 || b[v] < 0 || b[v] > 1)
      throw FlowError(ErrorCode::kMalformed, "probabilities must lie in [0, 1]", {static_cast<int>(v)});
  for (const auto* p : {&horizontal, &vertical})
    for (const auto& x : *p)
      if (x < 0) throw FlowError(ErrorCode::kMalformed, "penalties must be non-negative");
}

std::vector<std::tuple<int, int, Rational>> PixelImage::neighbor_pairs() const {
  std::vector<std::tuple<int, int, Rational>> out;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      const int v = y * width + x;
      if (x + 1 < width) out.emplace_back(v, v + 1, horizontal[at(y * (width - 1) + x)]);
      if (y + 1 < height) out.emplace_back(v, v + width, vertical[at(v)]);
    }
  return out;
}

Rational segmentation_score(const PixelImage& img, const std::vector<bool>& foreground) {
  Rational s = 0;
  for (int v = 0; v < img.pixel_count(); ++v) s += foreground[at(v)] ? img.a[at(v)] : img.b[at(v)];
  for (const auto& [v, w, p] : img.neighbor_pairs())
    if (foreground[at(v)] != foreground[at(w)]) s -= p;
  return s;
}

Rational segmentation_cost(const PixelImage& img, const std::vector<bool>& foreground) {
  Rational s = 0;
  for (int v = 0; v < img.pixel_count(); ++v) s += foreground[at(v)] ? img.b[at(v)] : img.a[at(v)];
  for (const auto& [v, w, p] : img.neighbor_pairs())
    if (foreground[at(v)] != foreground[at(w)]) s += p;
  return s;
}

Segmentation segment_image(const PixelImage& img) {
  img.check();
  const int n = img.pixel_count();
  const int s = n, t = n + 1;
  std::vector<ArcSpec> arcs;
  for (int v = 0; v < n; ++v) {
    arcs.push_back({s, v, Capacity(img.a[at(v)])});
    arcs.push_back({v, t, Capacity(img.b[at(v)])});
  }
  for (const auto& [v, w, p] : img.neighbor_pairs()) {
    arcs.push_back({v, w, Capacity(p)});
    arcs.push_back({w, v, Capacity(p)});
  }
  const Network net = Network::build(n + 2, s, t, arcs, /*allow_antiparallel=*/true);
  const auto flow = edmonds_karp(net);
  const Cut cut = min_cut_from_flow(net, flow.flow);

  Segmentation out;
  out.foreground.resize(at(n));
  for (int v = 0; v < n; ++v) out.foreground[at(v)] = cut.contains(v);
  out.score = segmentation_score(img, out.foreground);
  out.cost = segmentation_cost(img, out.foreground);
  for (int v = 0; v < n; ++v) out.total += img.a[at(v)] + img.b[at(v)];
  out.cut_value = cut_capacity(net, cut).value();
  return out;
}

}  // namespace flowkit
