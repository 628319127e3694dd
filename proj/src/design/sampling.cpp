#include "gdsl/design/sampling.hpp"

namespace gdsl::design {

DesignConfiguration random_config(const DesignSchema& schema, std::mt19937_64& rng) {
  DesignConfiguration cfg;
  for (const ParamSpec& s : schema.params()) {
    switch (s.kind) {
      case ParamKind::boolean:
        cfg.assignments[s.path] = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
        break;
      case ParamKind::integer:
        cfg.assignments[s.path] = std::uniform_int_distribution<std::int64_t>(static_cast<std::int64_t>(s.min),
                                                                              static_cast<std::int64_t>(s.max))(rng);
        break;
      case ParamKind::real: {
        const double v = std::uniform_real_distribution<double>(s.min, s.max)(rng);
        cfg.assignments[s.path] = v < s.max ? v : s.min;
        break;
      }
      case ParamKind::select:
        cfg.assignments[s.path] = s.options[std::uniform_int_distribution<std::size_t>(0, s.options.size() - 1)(rng)];
        break;
    }
  }
  return cfg;
}

}  // namespace gdsl::design
