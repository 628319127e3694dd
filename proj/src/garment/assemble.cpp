#include "gdsl/garment/assemble.hpp"

#include <deque>

#include "builder.hpp"
#include "gdsl/design/sampling.hpp"

namespace gdsl::garment {
namespace {

using namespace detail;

struct Join {
  const Component* a;
  std::string iface_a;
  const Component* b;
  std::string iface_b;
};

class Assembler {
 public:
  void flatten(const Component& c) {
    ProgramTrace t{c.name, c.kind, {}};
    for (const Panel& p : c.panels) {
      t.panel_ids.push_back(p.id);
      out_.pattern.panels.push_back(p);
    }
    out_.trace.programs.push_back(std::move(t));
    for (const Stitch& s : c.internal_stitches) {
      out_.trace.internal_stitches.push_back(out_.pattern.stitches.size());
      out_.pattern.stitches.push_back(s);
    }
    for (const Component& child : c.children) {
      flatten(child);
      for (const auto& [name, refs] : child.interfaces) {
        if (c.interfaces.count(name)) join({&child, name, &c, name});
      }
    }
  }

  // Stitches side_a on `a` to side_b on `b`, gathering by the actual length ratio.
  void join(const Join& j) {
    const std::string name_a = j.a->name + "." + j.iface_a;
    const std::string name_b = j.b->name + "." + j.iface_b;
    const auto& ra = j.a->interface(j.iface_a);
    const auto& rb = j.b->interface(j.iface_b);
    if (ra.size() != rb.size())
      throw AssemblyError("INTERFACE_MISMATCH", name_a + " has " + std::to_string(ra.size()) + " edges but " + name_b +
                                                    " has " + std::to_string(rb.size()));
    StitchGroup g{name_a, name_b, {}};
    for (std::size_t i = 0; i < ra.size(); ++i) {
      const double la = geometry::curve_length(j.a->find_panel(ra[i].panel)->edges[ra[i].edge]);
      const double lb = geometry::curve_length(j.b->find_panel(rb[i].panel)->edges[rb[i].edge]);
      const double ratio = la / lb;
      if (!(ratio >= kMinInterfaceRatio && ratio <= kMaxInterfaceRatio))
        throw AssemblyError("INTERFACE_MISMATCH", name_a + " and " + name_b + " differ in length beyond stitch tolerance (edge " +
                                                      std::to_string(i) + ": " + std::to_string(la) + " vs " +
                                                      std::to_string(lb) + " cm)");
      g.stitches.push_back(out_.pattern.stitches.size());
      out_.pattern.stitches.push_back(stitch(ra[i], rb[i], ratio));
    }
    out_.trace.groups.push_back(std::move(g));
  }

  AssembledPattern take() { return std::move(out_); }

 private:
  AssembledPattern out_;
};

void check_topology(const DesignConfiguration& cfg) {
  const bool bodice = cfg.select("meta.upper") == "bodice";
  const bool bottom = cfg.select("meta.bottom") != "none";
  if (!bodice && cfg.boolean("sleeve.enabled"))
    throw AssemblyError("DANGLING_INTERFACE", "sleeve.cap has no bodice armhole to attach to (meta.upper is none)");
  if (!bodice && cfg.select("collar.kind") != "none")
    throw AssemblyError("DANGLING_INTERFACE", "collar.neckline has no bodice neckline to attach to (meta.upper is none)");
  if (!bodice && !bottom) throw AssemblyError("EMPTY_GARMENT", "meta.upper and meta.bottom are both none");
}

}  // namespace

bool topology_coherent(const DesignConfiguration& cfg) {
  try {
    check_topology(cfg);
    return true;
  } catch (const AssemblyError&) {
    return false;
  }
}

AssembledPattern assemble_traced(const DesignConfiguration& cfg, const BodyMeasurements& b) {
  const auto violations = design::validate_config(cfg, design::default_schema());
  if (!violations.empty())
    throw ValidationFailed("configuration is invalid: " + violations.front().message);
  validate_body(b);
  check_topology(cfg);

  // Top-level components in output order.
  std::deque<Component> parts;  // stable addresses for the join list
  const Component* bodice = nullptr;
  const Component* waistband = nullptr;
  const Component* bottom = nullptr;
  std::vector<Join> joins;

  if (cfg.select("meta.upper") == "bodice") {
    bodice = &parts.emplace_back(draft_bodice(cfg, b));
    if (cfg.boolean("sleeve.enabled")) {
      for (Side side : {Side::right, Side::left}) {
        const Component& s = parts.emplace_back(draft_sleeve(cfg, b, armhole_length(cfg, b, side), side));
        joins.push_back({&s, "cap", bodice, "armhole_" + std::string(to_string(side))});
      }
    }
    if (cfg.select("collar.kind") != "none") {
      const Component& c = parts.emplace_back(draft_collar(cfg, b, neckline_lengths(cfg, b)));
      joins.push_back({&c, "neckline", bodice, "neckline"});
    }
  }
  if (cfg.boolean("waistband.enabled")) waistband = &parts.emplace_back(draft_waistband(cfg, b));
  const std::string& kind = cfg.select("meta.bottom");
  if (kind == "skirt") bottom = &parts.emplace_back(draft_skirt(cfg, b));
  if (kind == "pants") bottom = &parts.emplace_back(draft_pants(cfg, b));
  if (kind == "layered_skirt") bottom = &parts.emplace_back(draft_layered_skirt(cfg, b));

  if (waistband) {
    if (bodice) joins.push_back({waistband, "top", bodice, "hem"});
    if (bottom) joins.push_back({bottom, "waist", waistband, "bottom"});
  } else if (bodice && bottom) {
    joins.push_back({bottom, "waist", bodice, "hem"});
  }

  Assembler a;
  for (const Component& c : parts) a.flatten(c);
  for (const Join& j : joins) a.join(j);
  return a.take();
}

pattern::Pattern assemble(const DesignConfiguration& cfg, const BodyMeasurements& b) {
  return assemble_traced(cfg, b).pattern;
}

DesignConfiguration random_coherent_config(const design::DesignSchema& schema, std::mt19937_64& rng) {
  for (;;) {
    DesignConfiguration cfg = design::random_config(schema, rng);
    if (topology_coherent(cfg)) return cfg;
  }
}

}  // namespace gdsl::garment
