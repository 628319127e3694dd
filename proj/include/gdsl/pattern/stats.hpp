#pragma once

#include <cstddef>
#include <span>

#include "gdsl/pattern/pattern.hpp"

namespace gdsl::pattern {

// Per-pattern diversity counts. Edges are authored Edge records.
struct DiversityStats {
  std::size_t num_panels = 0;
  double mean_edges_per_panel = 0.0;
  std::size_t num_stitches = 0;

  friend bool operator==(const DiversityStats&, const DiversityStats&) = default;
};

DiversityStats pattern_stats(const Pattern& p);

struct Moments {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
};

struct CorpusStats {
  std::size_t patterns = 0;
  Moments panels;
  Moments edges_per_panel;
  Moments stitches;
};

// Mean and population standard deviation of each statistic over a corpus.
CorpusStats aggregate_stats(std::span<const DiversityStats> corpus);

}  // namespace gdsl::pattern
