#pragma once

#include <json.hpp>

#include <string>

#include "mldeg/family.hpp"
#include "mldeg/likelihood.hpp"

namespace mldeg {

// JSON views of the result structs. Key order is alphabetical (the library's
// default object storage), complex numbers are [re, im] pairs, and nothing
// clock- or host-dependent goes in, so one seed gives one byte sequence.
nlohmann::json report_to_json(const MLReport& report);
nlohmann::json report_to_json(const EulerReport& report);
nlohmann::json report_to_json(const FamilyReport& report);

// Canonical rendering used by the CLI: two-space indent plus trailing newline.
std::string canonical_json(const nlohmann::json& j);

}  // namespace mldeg
