#include "gdsl/garment/component.hpp"

#include <algorithm>

#include "gdsl/error.hpp"

namespace gdsl::garment {
namespace {

using design::ParamSpec;

std::vector<std::string> paths_with_prefix(std::initializer_list<std::string_view> prefixes,
                                           std::initializer_list<std::string_view> extra) {
  std::vector<std::string> out;
  for (const ParamSpec& p : design::default_schema().params()) {
    const bool by_prefix = std::any_of(prefixes.begin(), prefixes.end(),
                                       [&](std::string_view pre) { return p.path.rfind(pre, 0) == 0; });
    const bool listed = std::find(extra.begin(), extra.end(), p.path) != extra.end();
    if (by_prefix || listed) out.push_back(p.path);
  }
  return out;
}

// Bodice parameters that move the armhole and therefore resize sleeves.
const std::initializer_list<std::string_view> kArmholeParams = {
    "bodice.asymmetric",    "bodice.ease",     "bodice.shoulder_width",      "bodice.shoulder_slope",
    "bodice.armhole_drop", "bodice_left.shoulder_width", "bodice_left.shoulder_slope", "bodice_left.armhole_drop"};

std::vector<ComponentProgram> build_catalog() {
  std::vector<ComponentProgram> c;
  c.push_back({ProgramKind::bodice, paths_with_prefix({"bodice.", "bodice_left.", "neckline."}, {"meta.upper"})});
  c.push_back({ProgramKind::sleeve, paths_with_prefix({"sleeve.", "sleeve_left."}, kArmholeParams)});
  c.push_back({ProgramKind::collar, paths_with_prefix({"collar.", "neckline."}, {})});
  c.push_back({ProgramKind::skirt, paths_with_prefix({"skirt."}, {"meta.bottom"})});
  c.push_back({ProgramKind::layered_skirt, paths_with_prefix({"layered_skirt."}, {"meta.bottom"})});
  c.push_back({ProgramKind::pants, paths_with_prefix({"pants."}, {"meta.bottom"})});
  c.push_back({ProgramKind::waistband, paths_with_prefix({"waistband."}, {})});
  // A cuff is sized from the sleeve hem it closes.
  c.push_back({ProgramKind::cuff, paths_with_prefix({"cuff.", "cuff_left.", "sleeve.", "sleeve_left."}, kArmholeParams)});
  return c;
}

void collect(const Component& c, const std::string& id, const Panel*& found) {
  if (found) return;
  for (const Panel& p : c.panels) {
    if (p.id == id) {
      found = &p;
      return;
    }
  }
  for (const Component& child : c.children) collect(child, id, found);
}

}  // namespace

std::string_view to_string(ProgramKind k) {
  switch (k) {
    case ProgramKind::bodice: return "bodice";
    case ProgramKind::sleeve: return "sleeve";
    case ProgramKind::collar: return "collar";
    case ProgramKind::skirt: return "skirt";
    case ProgramKind::layered_skirt: return "layered_skirt";
    case ProgramKind::pants: return "pants";
    case ProgramKind::waistband: return "waistband";
    case ProgramKind::cuff: return "cuff";
  }
  return "bodice";
}

const Panel* Component::find_panel(const std::string& id) const {
  const Panel* found = nullptr;
  collect(*this, id, found);
  return found;
}

const std::vector<EdgeRef>& Component::interface(const std::string& iface) const {
  auto it = interfaces.find(iface);
  if (it == interfaces.end())
    throw AssemblyError("UNKNOWN_INTERFACE", "component " + name + " has no interface '" + iface + "'");
  return it->second;
}

std::size_t Component::subtree_panel_count() const {
  std::size_t n = panels.size();
  for (const Component& c : children) n += c.subtree_panel_count();
  return n;
}

const std::vector<ComponentProgram>& program_catalog() {
  static const std::vector<ComponentProgram> catalog = build_catalog();
  return catalog;
}

const ComponentProgram& program(ProgramKind kind) {
  for (const ComponentProgram& p : program_catalog()) {
    if (p.kind == kind) return p;
  }
  throw InvalidArgument("unknown program kind");
}

}  // namespace gdsl::garment
