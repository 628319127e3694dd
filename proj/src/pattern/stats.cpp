#include "gdsl/pattern/stats.hpp"

#include <cmath>
#include <vector>

namespace gdsl::pattern {
namespace {

Moments moments(const std::vector<double>& xs) {
  Moments m;
  if (xs.empty()) return m;
  double sum = 0.0;
  for (double x : xs) sum += x;
  m.mean = sum / static_cast<double>(xs.size());
  double sq = 0.0;
  for (double x : xs) sq += (x - m.mean) * (x - m.mean);
  m.stddev = std::sqrt(sq / static_cast<double>(xs.size()));
  return m;
}

}  // namespace

DiversityStats pattern_stats(const Pattern& p) {
  DiversityStats s;
  s.num_panels = p.panels.size();
  s.num_stitches = p.stitches.size();
  if (!p.panels.empty()) {
    std::size_t edges = 0;
    for (const Panel& panel : p.panels) edges += panel.edges.size();
    s.mean_edges_per_panel = static_cast<double>(edges) / static_cast<double>(p.panels.size());
  }
  return s;
}

CorpusStats aggregate_stats(std::span<const DiversityStats> corpus) {
  std::vector<double> panels;
  std::vector<double> edges;
  std::vector<double> stitches;
  for (const auto& s : corpus) {
    panels.push_back(static_cast<double>(s.num_panels));
    edges.push_back(s.mean_edges_per_panel);
    stitches.push_back(static_cast<double>(s.num_stitches));
  }
  CorpusStats out;
  out.patterns = corpus.size();
  out.panels = moments(panels);
  out.edges_per_panel = moments(edges);
  out.stitches = moments(stitches);
  return out;
}

}  // namespace gdsl::pattern
