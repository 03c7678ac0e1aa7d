#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "flowkit/simplicial.hpp"

namespace flowkit {

HNetwork random_hnetwork(std::uint64_t seed, std::size_t max_facets) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  const int vertices = uniform(4, 6);
  std::vector<Simplex> pool;
  for (int a = 0; a < vertices; ++a)
    for (int b = a + 1; b < vertices; ++b)
      for (int c = b + 1; c < vertices; ++c)
        if (!(a == 0 && b == 1 && c == 2)) pool.push_back({a, b, c});
  std::shuffle(pool.begin(), pool.end(), rng);

  const Simplex t{0, 1, 2};
  const int wanted = uniform(std::min<int>(4, static_cast<int>(max_facets)), static_cast<int>(max_facets));
  const std::size_t others = std::min<std::size_t>(pool.size(), static_cast<std::size_t>(std::max(wanted - 1, 0)));
  std::vector<Simplex> facets;
  std::vector<Capacity> caps;
  for (std::size_t i = 0; i < others; ++i) {
    Simplex s = pool[i];
    std::shuffle(s.begin(), s.end(), rng);
    Simplex shared;
    for (int v : s)
      if (v <= 2) shared.push_back(v);
    if (shared.size() == 2 && boundary_coefficient(s, shared) == boundary_coefficient(t, shared))
      std::swap(s[0], s[1]);
    facets.push_back(std::move(s));
    caps.push_back(Capacity(uniform(0, 3)));
  }
  facets.push_back(t);
  caps.push_back(Capacity::unbounded());
  const std::size_t source = facets.size() - 1;
  return build_hnetwork(OrientedComplex::build(2, std::move(facets)), source, std::move(caps));
}

ProbeRecord probe_instance(const HNetwork& net, std::size_t trial) {
  ProbeRecord r;
  r.trial = trial;
  const HFlowResult lp = hmaxflow_lp(net);
  const AugmentResult aug = hmaxflow_augment(net);
  r.lp_value = lp.value;
  r.fixpoint_value = aug.value;
  r.augmentations = aug.trace.size();
  r.capped = aug.capped;
  r.instance = to_hnet_string(net);
  return r;
}

ProbeReport conjecture_probe(std::uint64_t seed, std::size_t trials, std::size_t max_facets) {
  ProbeReport report;
  report.seed = seed;
  report.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    const std::uint64_t trial_seed = (std::uint64_t{words[0]} << 32) | words[1];
    report.records.push_back(probe_instance(random_hnetwork(trial_seed, max_facets), i));
    if (report.records.back().fixpoint_value < report.records.back().lp_value) report.discrepancies.push_back(i);
  }
  return report;
}

void write_probe_report(std::ostream& out, const ProbeReport& report) {
  out << "probe seed " << report.seed << " trials " << report.trials << " discrepancies "
      << report.discrepancies.size() << '\n';
  for (const auto& r : report.records)
    out << "trial " << r.trial << " lp " << to_string(r.lp_value) << " fixpoint " << to_string(r.fixpoint_value)
        << " augmentations " << r.augmentations << " capped " << (r.capped ? 1 : 0) << '\n';
  for (std::size_t i : report.discrepancies) {
    const auto& r = report.records[i];
    out << "discrepancy " << r.trial << " lp " << to_string(r.lp_value) << " fixpoint "
        << to_string(r.fixpoint_value) << '\n';
    out << "begin-instance\n" << r.instance << "end-instance\n";
  }
}

}  // namespace flowkit
