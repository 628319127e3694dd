#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gdsl/design/schema.hpp"
#include "gdsl/pattern/pattern.hpp"

namespace gdsl::garment {

using pattern::EdgeRef;
using pattern::Panel;
using pattern::Stitch;

enum class ProgramKind { bodice, sleeve, collar, skirt, layered_skirt, pants, waistband, cuff };

std::string_view to_string(ProgramKind k);

// Output of one component program: panels plus named interfaces, i.e. ordered
// edge groups other components may be stitched to. Panel ids are already
// qualified with the component name ("sleeve_right.sleeve"). A child is
// joined to its parent on every interface name the two share.
struct Component {
  std::string name;
  ProgramKind kind = ProgramKind::bodice;
  std::vector<Panel> panels;
  std::map<std::string, std::vector<EdgeRef>> interfaces;
  std::vector<Component> children;
  std::vector<Stitch> internal_stitches;

  const Panel* find_panel(const std::string& id) const;  // searches the subtree
  const std::vector<EdgeRef>& interface(const std::string& name) const;  // throws AssemblyError
  std::size_t subtree_panel_count() const;
};

// Parameters a program reads, directly or through the geometry it attaches
// to. Changing any other geometrical parameter leaves its panels untouched.
struct ComponentProgram {
  ProgramKind kind;
  std::vector<std::string> param_subset;
};

// One entry per ProgramKind; subsets are paths of the shipped schema.
const std::vector<ComponentProgram>& program_catalog();
const ComponentProgram& program(ProgramKind kind);

}  // namespace gdsl::garment
