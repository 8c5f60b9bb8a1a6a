#pragma once

#include "polyz/defengine.hpp"

#include <json.hpp>

namespace polyz {

using Json = nlohmann::ordered_json;

struct ReportOptions {
    bool timestamp = true;
    int indent = 2;
};

// Deterministic key order; "generated_at" (RFC 3339 UTC) only when
// opts.timestamp is set.
Json report_to_json(const DefReport& r, const ReportOptions& opts = {});

// Inverse of report_to_json (ignores "generated_at"). Throws error on
// missing or mistyped fields.
DefReport report_from_json(const Json& j);

std::string report_to_string(const DefReport& r, const ReportOptions& opts = {});

} // namespace polyz
