#include "gdsl/design/dresscode.hpp"

#include "gdsl/error.hpp"

namespace gdsl::design {

std::int64_t dresscode_seq_len(const DressCodeSeqParams& p) {
  if (p.max_panels <= 0 || p.max_edges <= 0 || p.edge_len <= 0 || p.rotation_len <= 0 || p.translation_len <= 0 ||
      p.stitch_len <= 0) {
    throw InvalidArgument("sequence-length parameters must all be positive");
  }
  return p.max_panels * (p.max_edges * p.edge_len + p.rotation_len + p.translation_len + p.max_edges * p.stitch_len) + 2;
}

}  // namespace gdsl::design
