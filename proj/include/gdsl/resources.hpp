#pragma once

#include <string_view>

// Text resources compiled into the binaries.
namespace gdsl::resources {

extern const std::string_view default_schema_json;
extern const std::string_view default_cfg;
extern const std::string_view standard_json;
extern const std::string_view analysis_preamble_txt;
extern const std::string_view comparison_prompt_txt;
extern const std::string_view question_templates_json;

}  // namespace gdsl::resources
