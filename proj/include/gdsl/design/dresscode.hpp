#pragma once

#include <cstdint>

namespace gdsl::design {

// Per-panel layout of a flat edge-sequence pattern encoding.
struct DressCodeSeqParams {
  std::int64_t max_panels = 37;         // N_p
  std::int64_t max_edges = 37;          // N_e
  std::int64_t edge_len = 6;            // L_e
  std::int64_t rotation_len = 4;        // quaternion
  std::int64_t translation_len = 3;
  std::int64_t stitch_len = 4;          // per edge
};

// N_p * (N_e * L_e + R + T + N_e * S) + 2. Throws InvalidArgument when any
// field is not positive.
std::int64_t dresscode_seq_len(const DressCodeSeqParams& p);

}  // namespace gdsl::design
