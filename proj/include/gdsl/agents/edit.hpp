#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdsl/design/config.hpp"
#include "gdsl/design/schema.hpp"
#include "gdsl/error.hpp"

namespace gdsl::agents {

enum class EditVerb { set, change_garment, remove, shorten, lengthen };

std::string_view to_string(EditVerb v);

// Normalized edit: lower case, articles dropped, garment nouns canonical
// ("pant", "trousers" -> "pants"; "sleeves" -> "sleeve"; "shirt" -> "bodice").
//   set:            target = schema path, value = choice label
//   change_garment: target = current garment, value = new garment
//   others:         target = component, no value
struct EditCommand {
  EditVerb verb = EditVerb::set;
  std::string target;
  std::optional<std::string> value;

  friend bool operator==(const EditCommand&, const EditCommand&) = default;
};

// ParseError carrying the part of the instruction the grammar could not
// consume.
class EditSyntaxError : public ParseError {
 public:
  EditSyntaxError(const std::string& message, std::string remainder)
      : ParseError("EDIT_SYNTAX", message + ": unmatched '" + remainder + "'"), remainder_(std::move(remainder)) {}
  const std::string& remainder() const noexcept { return remainder_; }

 private:
  std::string remainder_;
};

// Case-insensitive grammar:
//   CHANGE <garment> TO <garment>
//   MAKE <target> (SLEEVELESS | LONGER | SHORTER)
//   (SHORTEN | LENGTHEN) <target>
//   SET <path> TO <label>
//   REMOVE <component>
// "the", "a" and "an" are ignored. Throws EditSyntaxError.
EditCommand parse_edit_instruction(std::string_view text);

// Canonical upper-case form; parse_edit_instruction(pretty(c)) == c.
std::string pretty(const EditCommand& cmd);

struct EditOutcome {
  design::DesignConfiguration config;
  std::vector<std::string> notices;  // e.g. a bucket move clamped at an extreme
};

// Paths an edit may touch. Throws EditError (UNKNOWN_TARGET) for targets
// outside the edit vocabulary.
std::vector<std::string> edit_targets(const EditCommand& cmd, const design::DesignConfiguration& cfg,
                                      const design::DesignSchema& schema);

// Applies one edit. shorten/lengthen move the length parameter one bucket;
// remove and sleeveless clear the topology flag; change_garment flips
// meta.bottom. All assignments outside edit_targets stay value-identical.
// Throws EditError (UNKNOWN_TARGET, GARMENT_ABSENT, INVALID_LABEL) and
// ValidationFailed for an invalid input configuration.
EditOutcome apply_edit(const design::DesignConfiguration& cfg, const EditCommand& cmd,
                       const design::DesignSchema& schema);

enum class Tightness { tight, ok, loose };

struct PressureReading {
  std::string region;  // cuff | upper_bodice | lower_bodice | collar
  Tightness tightness = Tightness::ok;

  friend bool operator==(const PressureReading&, const PressureReading&) = default;
};

// Throws EditError (UNKNOWN_TIGHTNESS).
Tightness tightness_from_string(std::string_view s);

// Schema paths controlling a region's fit; throws EditError (UNKNOWN_REGION).
std::vector<std::string> region_params(const std::string& region, const design::DesignConfiguration& cfg);

// Tight regions move their ease/width parameter one bucket up, loose ones
// one bucket down.
EditOutcome apply_pressure_feedback(const design::DesignConfiguration& cfg, const std::vector<PressureReading>& report,
                                    const design::DesignSchema& schema);

// One bucket up (+1) or down (-1) from the bucket nearest the current value.
// Returns false, leaving cfg alone, when already at the extreme bucket.
bool move_bucket(design::DesignConfiguration& cfg, const design::ParamSpec& spec, int direction);

}  // namespace gdsl::agents
